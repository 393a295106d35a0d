#include "zfx/labelled_tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "zfx/errors.hpp"
#include "zfx/split.hpp"

namespace zfx {

Bag::Bag(Graph label, std::vector<LabelVertex> vertices) : label_(std::move(label)), vertices_(std::move(vertices)) {
    if (static_cast<int>(vertices_.size()) != label_.order())
        throw TreeError("bag label has " + std::to_string(label_.order()) + " vertices but " +
                        std::to_string(vertices_.size()) + " roles");
    const auto shape = classify_shape(label_);
    switch (shape.shape) {
        case GraphShape::clique: kind_ = BagKind::clique; break;
        case GraphShape::star: kind_ = BagKind::star; center_ = shape.center; break;
        case GraphShape::other: kind_ = BagKind::prime; break;
    }
}

std::optional<int> Bag::marker_for(int edge) const {
    for (int v = 0; v < size(); ++v)
        if (vertices_[static_cast<std::size_t>(v)] == marker_vertex(edge)) return v;
    return std::nullopt;
}

std::vector<int> Bag::marker_edges() const {
    std::vector<int> out;
    for (const auto& lv : vertices_)
        if (lv.role == LabelRole::marker) out.push_back(lv.id);
    return out;
}

std::vector<int> Bag::ordinary_label_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (!is_marker(v)) out.push_back(v);
    return out;
}

std::vector<int> Bag::ordinary_ids() const {
    std::vector<int> out;
    for (const auto& lv : vertices_)
        if (lv.role == LabelRole::ordinary) out.push_back(lv.id);
    return out;
}

GraphLabelledTree::GraphLabelledTree(int vertex_count, std::vector<Bag> bags, std::vector<TreeEdge> edges)
    : vertex_count_(vertex_count), bags_(std::move(bags)), edges_(std::move(edges)) {
    const int nb = bag_count();
    if (nb == 0) throw TreeError("a graph-labelled tree needs at least one bag");
    if (edge_count() != nb - 1) throw TreeError("bag graph has " + std::to_string(edge_count()) + " edges for " +
                                                std::to_string(nb) + " bags; not a tree");
    incident_.assign(static_cast<std::size_t>(nb), {});
    for (int e = 0; e < edge_count(); ++e) {
        const auto& te = edges_[static_cast<std::size_t>(e)];
        if (te.first < 0 || te.first >= nb || te.second < 0 || te.second >= nb || te.first == te.second)
            throw TreeError("tree edge " + std::to_string(e) + " has invalid endpoints");
        incident_[static_cast<std::size_t>(te.first)].push_back(e);
        incident_[static_cast<std::size_t>(te.second)].push_back(e);
    }
    // Connected with nb-1 edges means a tree.
    std::vector<bool> seen(static_cast<std::size_t>(nb), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        for (int e : incident_[static_cast<std::size_t>(b)]) {
            const int o = other_end(e, b);
            if (!seen[static_cast<std::size_t>(o)]) {
                seen[static_cast<std::size_t>(o)] = true;
                ++reached;
                queue.push_back(o);
            }
        }
    }
    if (reached != nb) throw TreeError("bag graph is disconnected");

    location_.assign(static_cast<std::size_t>(std::max(vertex_count, 0)), {-1, -1});
    for (int b = 0; b < nb; ++b) {
        const Bag& bag = bags_[static_cast<std::size_t>(b)];
        if (bag.size() == 0) throw TreeError("bag " + std::to_string(b) + " has an empty label");
        auto expected = incident_[static_cast<std::size_t>(b)];
        auto markers = bag.marker_edges();
        std::sort(expected.begin(), expected.end());
        std::sort(markers.begin(), markers.end());
        if (expected != markers)
            throw TreeError("bag " + std::to_string(b) + " markers do not match its incident tree edges");
        for (int v = 0; v < bag.size(); ++v) {
            const auto& lv = bag.vertex(v);
            if (lv.role != LabelRole::ordinary) continue;
            if (lv.id < 0 || lv.id >= vertex_count)
                throw TreeError("ordinary id " + std::to_string(lv.id) + " outside 0.." + std::to_string(vertex_count - 1));
            auto& loc = location_[static_cast<std::size_t>(lv.id)];
            if (loc.first != -1) throw TreeError("vertex " + std::to_string(lv.id) + " appears in two places");
            loc = {b, v};
        }
    }
    for (int v = 0; v < vertex_count; ++v)
        if (location_[static_cast<std::size_t>(v)].first == -1)
            throw TreeError("vertex " + std::to_string(v) + " is not an ordinary vertex of any bag");
}

int GraphLabelledTree::other_end(int edge, int bag) const {
    const auto& te = this->edge(edge);
    if (te.first == bag) return te.second;
    if (te.second == bag) return te.first;
    throw TreeError("tree edge " + std::to_string(edge) + " is not incident to bag " + std::to_string(bag));
}

std::vector<int> GraphLabelledTree::neighbours(int bag) const {
    std::vector<int> out;
    for (int e : incident_edges(bag)) out.push_back(other_end(e, bag));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> GraphLabelledTree::distances_from(int bag) const {
    std::vector<int> d(static_cast<std::size_t>(bag_count()), -1);
    std::deque<int> queue{bag};
    d[static_cast<std::size_t>(bag)] = 0;
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        for (int e : incident_edges(b)) {
            const int o = other_end(e, b);
            if (d[static_cast<std::size_t>(o)] == -1) {
                d[static_cast<std::size_t>(o)] = d[static_cast<std::size_t>(b)] + 1;
                queue.push_back(o);
            }
        }
    }
    return d;
}

std::pair<int, int> GraphLabelledTree::locate(int original) const {
    if (original < 0 || original >= vertex_count_) throw DomainError("vertex id out of range");
    return location_[static_cast<std::size_t>(original)];
}

namespace {

// Ordinary vertices reachable from `entry` of `bag` through alternating marker hops.
void accessible_from(const GraphLabelledTree& t, int bag, int entry, int via_edge, int source, GraphBuilder& out) {
    const Bag& b = t.bag(bag);
    for (int w : vertices_of(b.label().row(entry))) {
        const auto& lv = b.vertex(w);
        if (lv.role == LabelRole::ordinary) {
            if (lv.id != source) out.add_edge(source, lv.id);
        } else if (lv.id != via_edge) {
            const int next = t.other_end(lv.id, bag);
            accessible_from(t, next, *t.bag(next).marker_for(lv.id), lv.id, source, out);
        }
    }
}

bool is_star_center_marker(const Bag& b, int edge) {
    return b.kind() == BagKind::star && b.star_center() == b.marker_for(edge);
}

}  // namespace

Graph reconstruct(const GraphLabelledTree& t) {
    GraphBuilder out(t.vertex_count());
    for (int u = 0; u < t.vertex_count(); ++u) {
        const auto [bag, lv] = t.locate(u);
        accessible_from(t, bag, lv, -1, u, out);
    }
    return out.build();
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::undersized_bag: return "undersized_bag";
        case ViolationKind::clique_clique_edge: return "clique_clique_edge";
        case ViolationKind::star_leaf_to_center_edge: return "star_leaf_to_center_edge";
        case ViolationKind::clique_leaf_bag_ordinary: return "clique_leaf_bag_ordinary";
        case ViolationKind::center_leaf_bag_ordinary: return "center_leaf_bag_ordinary";
        case ViolationKind::prime_bag_decomposable: return "prime_bag_decomposable";
    }
    return "unknown";
}

std::string to_string(BagKind kind) {
    switch (kind) {
        case BagKind::clique: return "clique";
        case BagKind::star: return "star";
        case BagKind::prime: return "prime";
    }
    return "unknown";
}

std::vector<ReducednessViolation> validate_reduced(const GraphLabelledTree& t) {
    std::vector<ReducednessViolation> out;
    const bool single = t.bag_count() == 1;
    for (int b = 0; b < t.bag_count(); ++b) {
        const Bag& bag = t.bag(b);
        if (bag.kind() == BagKind::prime) {
            if (!is_connected(bag.label()) || find_split(bag.label(), {.max_vertices = kMaxVertices}))
                out.push_back({ViolationKind::prime_bag_decomposable, b, -1, "label of a prime bag is not split-prime"});
            continue;
        }
        if (!single && bag.size() < 3)
            out.push_back({ViolationKind::undersized_bag, b, -1,
                           to_string(bag.kind()) + " bag with " + std::to_string(bag.size()) + " label vertices"});
        if (!t.is_leaf_bag(b)) continue;
        const int ordinary = static_cast<int>(bag.ordinary_ids().size());
        const int edge = t.incident_edges(b).front();
        if (bag.kind() == BagKind::clique && ordinary < 2)
            out.push_back({ViolationKind::clique_leaf_bag_ordinary, b, edge, "clique leaf bag with one ordinary vertex"});
        if (bag.kind() == BagKind::star && is_star_center_marker(bag, edge) && ordinary < 2)
            out.push_back({ViolationKind::center_leaf_bag_ordinary, b, edge,
                           "center-attached star leaf bag with fewer than two ordinary leaves"});
    }
    for (int e = 0; e < t.edge_count(); ++e) {
        const auto [x, y] = t.edge(e);
        const Bag& bx = t.bag(x);
        const Bag& by = t.bag(y);
        if (bx.kind() == BagKind::clique && by.kind() == BagKind::clique)
            out.push_back({ViolationKind::clique_clique_edge, -1, e, "tree edge joins two clique bags"});
        if (bx.kind() == BagKind::star && by.kind() == BagKind::star &&
            is_star_center_marker(bx, e) != is_star_center_marker(by, e))
            out.push_back({ViolationKind::star_leaf_to_center_edge, -1, e, "tree edge joins a star leaf to a star center"});
    }
    return out;
}

DecompositionSummary summarize(const GraphLabelledTree& t) {
    DecompositionSummary s;
    for (int b = 0; b < t.bag_count(); ++b) {
        if (t.bag(b).kind() != BagKind::prime) continue;
        ++s.prime_bag_count;
        s.prime_labels.push_back(t.bag(b).label());
        s.unique_prime = b;
    }
    s.is_dh = s.prime_bag_count == 0;
    if (s.prime_bag_count != 1) {
        s.unique_prime.reset();
        return s;
    }
    s.star_centered_at_prime = t.degree(*s.unique_prime) == t.bag_count() - 1;
    return s;
}

std::string dump_tree(const GraphLabelledTree& t) {
    std::ostringstream os;
    os << "tree vertices=" << t.vertex_count() << " bags=" << t.bag_count() << " edges=" << t.edge_count() << '\n';
    auto list = [&os](const auto& items, auto&& emit) {
        if (items.empty()) {
            os << '-';
            return;
        }
        bool first = true;
        for (const auto& item : items) {
            if (!first) os << ',';
            first = false;
            emit(item);
        }
    };
    for (int b = 0; b < t.bag_count(); ++b) {
        const Bag& bag = t.bag(b);
        os << "bag " << b << ' ' << to_string(bag.kind()) << " size=" << bag.size() << " center=";
        if (bag.star_center())
            os << *bag.star_center();
        else
            os << '-';
        os << " label=";
        list(bag.label().edges(), [&os](const auto& e) { os << e.first << '-' << e.second; });
        std::vector<std::pair<int, int>> ordinary;
        std::vector<std::pair<int, int>> markers;
        for (int v = 0; v < bag.size(); ++v)
            (bag.is_marker(v) ? markers : ordinary).emplace_back(v, bag.vertex(v).id);
        os << " ordinary=";
        list(ordinary, [&os](const auto& p) { os << p.first << ':' << p.second; });
        os << " markers=";
        list(markers, [&os](const auto& p) { os << p.first << ':' << p.second; });
        os << '\n';
    }
    for (int e = 0; e < t.edge_count(); ++e) os << "edge " << e << ' ' << t.edge(e).first << ' ' << t.edge(e).second << '\n';
    return os.str();
}

}  // namespace zfx
