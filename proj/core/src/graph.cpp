#include "zfx/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "zfx/errors.hpp"

namespace zfx {

namespace {

void check_order(int n) {
    if (n < 0) throw DomainError("negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " exceeds the 64-vertex capacity");
}

}  // namespace

VertexSet::VertexSet(Mask bits, int universe) : bits_(bits), universe_(universe) {
    check_order(universe);
    if ((bits & ~low_bits(universe)) != 0) throw DomainError("vertex set not contained in its universe");
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
    Mask m = 0;
    for (int v : members) {
        if (v < 0 || v >= universe) throw DomainError("vertex " + std::to_string(v) + " outside universe");
        m |= bit(v);
    }
    return VertexSet(m, universe);
}

VertexSet VertexSet::with(int v) const {
    if (v < 0 || v >= universe_) throw DomainError("vertex outside universe");
    return VertexSet(bits_ | bit(v), universe_);
}

VertexSet VertexSet::without(int v) const {
    if (v < 0 || v >= universe_) throw DomainError("vertex outside universe");
    return VertexSet(bits_ & ~bit(v), universe_);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    return VertexSet(a.bits_ | b.bits_, std::max(a.universe_, b.universe_));
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    return VertexSet(a.bits_ & b.bits_, std::max(a.universe_, b.universe_));
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) { return VertexSet(a.bits_ & ~b.bits_, a.universe_); }

Graph::Graph(int n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_rows(std::vector<Mask> rows) {
    check_order(static_cast<int>(rows.size()));
    if (!is_well_formed(rows)) throw DomainError("adjacency rows are not a simple undirected graph");
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask r : rows_) twice += popcount(r);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (int v : vertices_of(row(u) & ~low_bits(u + 1))) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(rows_.size());
    for (Mask r : rows_) d.push_back(popcount(r));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows().begin(), g.rows().end()) {}

int GraphBuilder::add_vertex() {
    check_order(order() + 1);
    rows_.push_back(0);
    return order() - 1;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw DomainError("edge endpoint outside vertex range");
    if (u == v) throw DomainError("self-loops are not allowed");
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw DomainError("edge endpoint outside vertex range");
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph GraphBuilder::build() const { return Graph::from_rows(rows_); }

bool is_well_formed(std::span<const Mask> rows) {
    const int n = static_cast<int>(rows.size());
    if (n > kMaxVertices) return false;
    const Mask universe = low_bits(n);
    for (int u = 0; u < n; ++u) {
        const Mask r = rows[static_cast<std::size_t>(u)];
        if ((r & ~universe) != 0 || (r & bit(u)) != 0) return false;
        for (int v : vertices_of(r))
            if ((rows[static_cast<std::size_t>(v)] & bit(u)) == 0) return false;
    }
    return true;
}

Graph make_path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph make_cycle(int n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph make_complete(int n) {
    check_order(n);
    std::vector<Mask> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = low_bits(n) & ~bit(v);
    return Graph::from_rows(std::move(rows));
}

Graph make_star(int n) {
    if (n < 2) throw DomainError("a star needs at least 2 vertices");
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(0, i);
    return b.build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    return induced_subgraph(g, keep.bits());
}

InducedSubgraph induced_subgraph(const Graph& g, Mask keep) {
    if ((keep & ~g.vertex_mask()) != 0) throw DomainError("kept set not contained in the graph");
    InducedSubgraph out;
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (int v : vertices_of(keep)) {
        index[static_cast<std::size_t>(v)] = static_cast<int>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<Mask> rows(out.original.size(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        for (int w : vertices_of(g.row(out.original[i]) & keep))
            rows[i] |= bit(index[static_cast<std::size_t>(w)]);
    out.graph = Graph::from_rows(std::move(rows));
    return out;
}

Graph remove_vertices(const Graph& g, Mask drop) {
    return induced_subgraph(g, g.vertex_mask() & ~drop).graph;
}

bool is_connected_within(const Graph& g, Mask within) {
    if (within == 0) return true;
    Mask seen = bit(lowest_vertex(within));
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for (int v : vertices_of(frontier)) next |= g.row(v);
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == within;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertex_mask()); }

std::optional<int> find_leaf(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) return v;
    return std::nullopt;
}

std::optional<TwinKind> twin_kind(const Graph& g, int u, int v) {
    if (u == v) return std::nullopt;
    const Mask others = ~(bit(u) | bit(v));
    if ((g.row(u) & others) != (g.row(v) & others)) return std::nullopt;
    return g.adjacent(u, v) ? TwinKind::true_twins : TwinKind::false_twins;
}

std::optional<TwinPair> find_twin_pair(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (auto kind = twin_kind(g, u, v)) return TwinPair{u, v, *kind};
    return std::nullopt;
}

GraphKind classify_shape(const Graph& g) {
    const int n = g.order();
    const int m = g.edge_count();
    if (m == n * (n - 1) / 2) return {GraphShape::clique, std::nullopt};
    if (n >= 3 && m == n - 1) {
        for (int c = 0; c < n; ++c) {
            if (g.degree(c) != n - 1) continue;
            // n-1 edges all at c: every other vertex is a leaf.
            return {GraphShape::star, c};
        }
    }
    return {GraphShape::other, std::nullopt};
}

}  // namespace zfx
