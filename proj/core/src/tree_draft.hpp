#pragma once

// Mutable working copy of a graph-labelled tree. Bags and edges are tombstoned rather than
// erased so ids stay stable while reduction rules run; freeze() compacts them.

#include <optional>
#include <vector>

#include "zfx/labelled_tree.hpp"

namespace zfx::detail {

struct DraftBag {
    Graph label;
    std::vector<LabelVertex> vertices;
    bool alive = true;

    int find(LabelVertex lv) const;
    GraphKind shape() const { return classify_shape(label); }
};

struct DraftEdge {
    int first;
    int second;
    bool alive = true;
};

class TreeDraft {
public:
    TreeDraft() = default;
    explicit TreeDraft(const GraphLabelledTree& t);
    TreeDraft(int vertex_count, Graph whole);  // single bag holding every vertex

    int vertex_count = 0;
    std::vector<DraftBag> bags;
    std::vector<DraftEdge> edges;

    int add_bag(Graph label, std::vector<LabelVertex> vertices);
    int add_edge(int a, int b);
    int other_end(int edge, int bag) const;
    std::vector<int> incident(int bag) const;

    // Replaces bag `id` by the two sides of a split of its label.
    // Returns the id of the new bag holding the B side; the A side keeps `id`.
    int split_bag(int id, Mask side_a, Mask frontier_a, Mask frontier_b);

    // Inverse of a split: merges the bags on both ends of `edge` into the first endpoint.
    void merge_along(int edge);

    // Removes a label vertex from a bag.
    void erase_label_vertex(int bag, int label_vertex);

    // KK and S_pS_c merges plus absorption of 2-vertex bags, to a fixed point.
    void reduce();

    GraphLabelledTree freeze() const;

private:
    bool mergeable(int edge) const;
    bool absorb_small_bag(int bag);
};

bool is_center_marker(const DraftBag& bag, int edge);

}  // namespace zfx::detail
