#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zfx {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest_vertex(Mask m) { return std::countr_zero(m); }
constexpr int highest_vertex(Mask m) { return 63 - std::countl_zero(m); }

// Iterates the set bits of a mask in increasing order.
class MaskRange {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(Mask rest) : rest_(rest) {}
        int operator*() const { return lowest_vertex(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        iterator operator++(int) { auto old = *this; ++*this; return old; }
        bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    explicit constexpr MaskRange(Mask m) : mask_(m) {}
    iterator begin() const { return iterator(mask_); }
    iterator end() const { return iterator(0); }

private:
    Mask mask_;
};

inline MaskRange vertices_of(Mask m) { return MaskRange(m); }

// A subset of {0..universe-1}.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(Mask bits, int universe);

    static VertexSet none(int universe) { return VertexSet(0, universe); }
    static VertexSet all(int universe) { return VertexSet(low_bits(universe), universe); }
    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet of(int universe, std::span<const int> members);

    Mask bits() const { return bits_; }
    int universe() const { return universe_; }
    int size() const { return popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return v >= 0 && v < universe_ && (bits_ & bit(v)) != 0; }
    bool is_subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }

    VertexSet with(int v) const;
    VertexSet without(int v) const;
    VertexSet complement() const { return VertexSet(low_bits(universe_) & ~bits_, universe_); }

    std::vector<int> members() const;
    MaskRange::iterator begin() const { return MaskRange(bits_).begin(); }
    MaskRange::iterator end() const { return MaskRange(bits_).end(); }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b);
    bool operator==(const VertexSet&) const = default;

private:
    Mask bits_ = 0;
    int universe_ = 0;
};

// Finite simple undirected graph on vertices 0..order()-1, one adjacency word per vertex.
// Immutable once built; use GraphBuilder for incremental construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws DomainError if rows are asymmetric, reflexive or reference vertices >= rows.size().
    static Graph from_rows(std::vector<Mask> rows);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return static_cast<int>(rows_.size()); }
    Mask vertex_mask() const { return low_bits(order()); }
    VertexSet vertex_set() const { return VertexSet::all(order()); }

    Mask row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    std::span<const Mask> rows() const { return rows_; }
    VertexSet neighbors(int v) const { return VertexSet(row(v), order()); }
    int degree(int v) const { return popcount(row(v)); }
    bool adjacent(int u, int v) const { return (row(u) & bit(v)) != 0; }

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    bool operator==(const Graph&) const = default;

private:
    std::vector<Mask> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0);
    explicit GraphBuilder(const Graph& g);

    int order() const { return static_cast<int>(rows_.size()); }
    int add_vertex();
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    Mask row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    Graph build() const;

private:
    std::vector<Mask> rows_;
};

// True iff rows encode a simple undirected graph: symmetric, irreflexive, no bits at or above rows.size().
bool is_well_formed(std::span<const Mask> rows);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);  // center 0

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;  // original[new vertex] = vertex of the source graph, increasing
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph induced_subgraph(const Graph& g, Mask keep);
Graph remove_vertices(const Graph& g, Mask drop);

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, Mask within);

std::optional<int> find_leaf(const Graph& g);

enum class TwinKind { true_twins, false_twins };

struct TwinPair {
    int u;
    int v;
    TwinKind kind;
    bool operator==(const TwinPair&) const = default;
};

std::optional<TwinKind> twin_kind(const Graph& g, int u, int v);
std::optional<TwinPair> find_twin_pair(const Graph& g);

enum class GraphShape { clique, star, other };

struct GraphKind {
    GraphShape shape = GraphShape::other;
    std::optional<int> center;  // present iff shape == star
};

// K_1 and K_2 classify as cliques; a star needs at least three vertices.
GraphKind classify_shape(const Graph& g);

}  // namespace zfx
