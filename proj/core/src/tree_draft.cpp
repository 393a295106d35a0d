#include "tree_draft.hpp"

#include <string>

#include "zfx/errors.hpp"

namespace zfx::detail {

int DraftBag::find(LabelVertex lv) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == lv) return static_cast<int>(v);
    return -1;
}

bool is_center_marker(const DraftBag& bag, int edge) {
    const auto s = bag.shape();
    return s.shape == GraphShape::star && s.center == bag.find(marker_vertex(edge));
}

TreeDraft::TreeDraft(const GraphLabelledTree& t) : vertex_count(t.vertex_count()) {
    for (const Bag& b : t.bags())
        bags.push_back({b.label(), std::vector<LabelVertex>(b.vertices().begin(), b.vertices().end()), true});
    for (const TreeEdge& e : t.edges()) edges.push_back({e.first, e.second, true});
}

TreeDraft::TreeDraft(int count, Graph whole) : vertex_count(count) {
    std::vector<LabelVertex> vs;
    for (int v = 0; v < whole.order(); ++v) vs.push_back(ordinary_vertex(v));
    add_bag(std::move(whole), std::move(vs));
}

int TreeDraft::add_bag(Graph label, std::vector<LabelVertex> vertices) {
    bags.push_back({std::move(label), std::move(vertices), true});
    return static_cast<int>(bags.size()) - 1;
}

int TreeDraft::add_edge(int a, int b) {
    edges.push_back({a, b, true});
    return static_cast<int>(edges.size()) - 1;
}

int TreeDraft::other_end(int edge, int bag) const {
    const auto& e = edges[static_cast<std::size_t>(edge)];
    if (e.first == bag) return e.second;
    if (e.second == bag) return e.first;
    throw TreeError("draft edge " + std::to_string(edge) + " not incident to bag " + std::to_string(bag));
}

std::vector<int> TreeDraft::incident(int bag) const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].alive && (edges[e].first == bag || edges[e].second == bag)) out.push_back(static_cast<int>(e));
    return out;
}

namespace {

// Induced label on `side` plus one extra vertex adjacent to `frontier`.
std::pair<Graph, std::vector<LabelVertex>> side_label(const DraftBag& bag, Mask side, Mask frontier, LabelVertex extra) {
    auto sub = induced_subgraph(bag.label, side);
    GraphBuilder b(sub.graph);
    const int m = b.add_vertex();
    std::vector<LabelVertex> vs;
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
        vs.push_back(bag.vertices[static_cast<std::size_t>(sub.original[i])]);
        if ((frontier & bit(sub.original[i])) != 0) b.add_edge(m, static_cast<int>(i));
    }
    vs.push_back(extra);
    return {b.build(), std::move(vs)};
}

}  // namespace

int TreeDraft::split_bag(int id, Mask side_a, Mask frontier_a, Mask frontier_b) {
    const DraftBag old = bags[static_cast<std::size_t>(id)];
    const Mask side_b = old.label.vertex_mask() & ~side_a;
    const int e = add_edge(id, -1);

    auto [label_a, vs_a] = side_label(old, side_a, frontier_a, marker_vertex(e));
    auto [label_b, vs_b] = side_label(old, side_b, frontier_b, marker_vertex(e));
    bags[static_cast<std::size_t>(id)] = {std::move(label_a), std::move(vs_a), true};
    const int nb = add_bag(std::move(label_b), vs_b);
    edges[static_cast<std::size_t>(e)].second = nb;

    for (const auto& lv : vs_b) {
        if (lv.role != LabelRole::marker || lv.id == e) continue;
        auto& te = edges[static_cast<std::size_t>(lv.id)];
        if (te.first == id) te.first = nb;
        else if (te.second == id) te.second = nb;
    }
    return nb;
}

void TreeDraft::merge_along(int edge) {
    auto& te = edges[static_cast<std::size_t>(edge)];
    const int x = te.first;
    const int y = te.second;
    const DraftBag bx = bags[static_cast<std::size_t>(x)];
    const DraftBag by = bags[static_cast<std::size_t>(y)];
    const int mx = bx.find(marker_vertex(edge));
    const int my = by.find(marker_vertex(edge));
    if (mx < 0 || my < 0) throw InvariantError("merge along an edge without markers");

    std::vector<int> index_x(static_cast<std::size_t>(bx.label.order()), -1);
    std::vector<int> index_y(static_cast<std::size_t>(by.label.order()), -1);
    std::vector<LabelVertex> vs;
    for (int v = 0; v < bx.label.order(); ++v)
        if (v != mx) {
            index_x[static_cast<std::size_t>(v)] = static_cast<int>(vs.size());
            vs.push_back(bx.vertices[static_cast<std::size_t>(v)]);
        }
    for (int v = 0; v < by.label.order(); ++v)
        if (v != my) {
            index_y[static_cast<std::size_t>(v)] = static_cast<int>(vs.size());
            vs.push_back(by.vertices[static_cast<std::size_t>(v)]);
        }

    GraphBuilder b(static_cast<int>(vs.size()));
    for (auto [u, w] : bx.label.edges())
        if (u != mx && w != mx) b.add_edge(index_x[static_cast<std::size_t>(u)], index_x[static_cast<std::size_t>(w)]);
    for (auto [u, w] : by.label.edges())
        if (u != my && w != my) b.add_edge(index_y[static_cast<std::size_t>(u)], index_y[static_cast<std::size_t>(w)]);
    for (int u : vertices_of(bx.label.row(mx)))
        for (int w : vertices_of(by.label.row(my)))
            b.add_edge(index_x[static_cast<std::size_t>(u)], index_y[static_cast<std::size_t>(w)]);

    bags[static_cast<std::size_t>(x)] = {b.build(), std::move(vs), true};
    bags[static_cast<std::size_t>(y)].alive = false;
    te.alive = false;
    for (const auto& lv : by.vertices) {
        if (lv.role != LabelRole::marker || lv.id == edge) continue;
        auto& other = edges[static_cast<std::size_t>(lv.id)];
        if (other.first == y) other.first = x;
        else if (other.second == y) other.second = x;
    }
}

void TreeDraft::erase_label_vertex(int bag, int label_vertex) {
    auto& b = bags[static_cast<std::size_t>(bag)];
    auto sub = induced_subgraph(b.label, b.label.vertex_mask() & ~bit(label_vertex));
    std::vector<LabelVertex> vs;
    for (int v : sub.original) vs.push_back(b.vertices[static_cast<std::size_t>(v)]);
    b.label = std::move(sub.graph);
    b.vertices = std::move(vs);
}

bool TreeDraft::mergeable(int edge) const {
    const auto& te = edges[static_cast<std::size_t>(edge)];
    const DraftBag& x = bags[static_cast<std::size_t>(te.first)];
    const DraftBag& y = bags[static_cast<std::size_t>(te.second)];
    const auto sx = x.shape().shape;
    const auto sy = y.shape().shape;
    if (sx == GraphShape::clique && sy == GraphShape::clique) return true;
    if (sx == GraphShape::star && sy == GraphShape::star) return is_center_marker(x, edge) != is_center_marker(y, edge);
    return false;
}

bool TreeDraft::absorb_small_bag(int id) {
    DraftBag& bag = bags[static_cast<std::size_t>(id)];
    const int size = bag.label.order();
    if (!bag.alive || size > 2 || incident(id).empty()) return false;

    if (size == 1) {
        // A lone marker stands for nothing; drop it on the other side too.
        const int e = bag.vertices[0].id;
        const int x = other_end(e, id);
        erase_label_vertex(x, bags[static_cast<std::size_t>(x)].find(marker_vertex(e)));
        bag.alive = false;
        edges[static_cast<std::size_t>(e)].alive = false;
        return true;
    }

    const LabelVertex p = bag.vertices[0];
    const LabelVertex q = bag.vertices[1];
    if (p.role == LabelRole::marker && q.role == LabelRole::marker) {
        // Pass-through bag: join its two neighbours directly through edge p.
        const int y = other_end(q.id, id);
        auto& kept = edges[static_cast<std::size_t>(p.id)];
        if (kept.first == id) kept.first = y;
        else kept.second = y;
        auto& by = bags[static_cast<std::size_t>(y)];
        by.vertices[static_cast<std::size_t>(by.find(marker_vertex(q.id)))] = marker_vertex(p.id);
        edges[static_cast<std::size_t>(q.id)].alive = false;
    } else {
        const LabelVertex marker = p.role == LabelRole::marker ? p : q;
        const LabelVertex ordinary = p.role == LabelRole::marker ? q : p;
        const int x = other_end(marker.id, id);
        auto& bx = bags[static_cast<std::size_t>(x)];
        bx.vertices[static_cast<std::size_t>(bx.find(marker))] = ordinary;
        edges[static_cast<std::size_t>(marker.id)].alive = false;
    }
    bag.alive = false;
    return true;
}

void TreeDraft::reduce() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t b = 0; b < bags.size(); ++b)
            if (absorb_small_bag(static_cast<int>(b))) changed = true;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].alive || !mergeable(static_cast<int>(e))) continue;
            merge_along(static_cast<int>(e));
            changed = true;
        }
    }
}

GraphLabelledTree TreeDraft::freeze() const {
    std::vector<int> bag_id(bags.size(), -1);
    std::vector<int> edge_id(edges.size(), -1);
    int nb = 0;
    int ne = 0;
    for (std::size_t b = 0; b < bags.size(); ++b)
        if (bags[b].alive) bag_id[b] = nb++;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].alive) edge_id[e] = ne++;

    std::vector<Bag> out_bags;
    for (std::size_t b = 0; b < bags.size(); ++b) {
        if (!bags[b].alive) continue;
        std::vector<LabelVertex> vs = bags[b].vertices;
        for (auto& lv : vs)
            if (lv.role == LabelRole::marker) lv.id = edge_id[static_cast<std::size_t>(lv.id)];
        out_bags.emplace_back(bags[b].label, std::move(vs));
    }
    std::vector<TreeEdge> out_edges;
    for (const auto& e : edges)
        if (e.alive) out_edges.push_back({bag_id[static_cast<std::size_t>(e.first)], bag_id[static_cast<std::size_t>(e.second)]});
    return GraphLabelledTree(vertex_count, std::move(out_bags), std::move(out_edges));
}

}  // namespace zfx::detail
