#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfx/graph.hpp"

namespace zfx {

enum class BagKind { clique, star, prime };

enum class LabelRole { ordinary, marker };

// A vertex of a bag label: either an original vertex (id = vertex of the represented graph)
// or a marker (id = tree edge it stands for).
struct LabelVertex {
    LabelRole role;
    int id;
    bool operator==(const LabelVertex&) const = default;
};

inline LabelVertex ordinary_vertex(int original) { return {LabelRole::ordinary, original}; }
inline LabelVertex marker_vertex(int edge) { return {LabelRole::marker, edge}; }

class Bag {
public:
    // Kind is derived from the label: clique, star (>= 3 vertices), otherwise prime.
    Bag(Graph label, std::vector<LabelVertex> vertices);

    const Graph& label() const { return label_; }
    BagKind kind() const { return kind_; }
    std::optional<int> star_center() const { return center_; }
    int size() const { return label_.order(); }

    std::span<const LabelVertex> vertices() const { return vertices_; }
    const LabelVertex& vertex(int label_vertex) const { return vertices_[static_cast<std::size_t>(label_vertex)]; }
    bool is_marker(int label_vertex) const { return vertex(label_vertex).role == LabelRole::marker; }

    std::optional<int> marker_for(int edge) const;  // label vertex bound to a tree edge
    std::vector<int> marker_edges() const;
    std::vector<int> ordinary_label_vertices() const;
    std::vector<int> ordinary_ids() const;

private:
    Graph label_;
    std::vector<LabelVertex> vertices_;
    BagKind kind_;
    std::optional<int> center_;
};

struct TreeEdge {
    int first;
    int second;
};

// Tree of bags; tree edge i is bound to one marker in each endpoint bag. The constructor
// checks every structural invariant and throws TreeError on violation.
class GraphLabelledTree {
public:
    GraphLabelledTree(int vertex_count, std::vector<Bag> bags, std::vector<TreeEdge> edges);

    int vertex_count() const { return vertex_count_; }
    int bag_count() const { return static_cast<int>(bags_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Bag& bag(int id) const { return bags_[static_cast<std::size_t>(id)]; }
    std::span<const Bag> bags() const { return bags_; }
    const TreeEdge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    std::span<const TreeEdge> edges() const { return edges_; }

    std::span<const int> incident_edges(int bag) const { return incident_[static_cast<std::size_t>(bag)]; }
    int degree(int bag) const { return static_cast<int>(incident_edges(bag).size()); }
    bool is_leaf_bag(int bag) const { return degree(bag) == 1; }
    int other_end(int edge, int bag) const;
    std::vector<int> neighbours(int bag) const;
    std::vector<int> distances_from(int bag) const;  // tree distance in bag hops

    // Bag holding an original vertex, and the label vertex it occupies there.
    std::pair<int, int> locate(int original) const;

private:
    int vertex_count_;
    std::vector<Bag> bags_;
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::pair<int, int>> location_;
};

// Graph on the original ids given by the accessibility relation.
Graph reconstruct(const GraphLabelledTree& t);

enum class ViolationKind {
    undersized_bag,           // clique or star bag with fewer than 3 label vertices
    clique_clique_edge,       // KK
    star_leaf_to_center_edge, // S_p S_c
    clique_leaf_bag_ordinary, // clique leaf bag with fewer than 2 ordinary vertices
    center_leaf_bag_ordinary, // center-attached star leaf bag with fewer than 2 ordinary leaves
    prime_bag_decomposable,   // bag classified prime whose label has a split or is disconnected
};

struct ReducednessViolation {
    ViolationKind kind;
    int bag = -1;
    int edge = -1;
    std::string detail;
};

std::string to_string(ViolationKind kind);
std::string to_string(BagKind kind);

// Empty iff t is reduced. A single-bag tree is exempt from the size rules (it is the whole graph).
std::vector<ReducednessViolation> validate_reduced(const GraphLabelledTree& t);

struct DecompositionSummary {
    int prime_bag_count = 0;
    std::vector<Graph> prime_labels;
    bool is_dh = false;
    std::optional<int> unique_prime;
    bool star_centered_at_prime = false;  // unique prime and every other bag adjacent to it
};

DecompositionSummary summarize(const GraphLabelledTree& t);

// Stable text dump, see docs/tree-dump.md.
std::string dump_tree(const GraphLabelledTree& t);

}  // namespace zfx
