#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "zfx/labelled_tree.hpp"

namespace zfx {

enum class LeafBagKind { clique, star_center_attached, star_leaf_attached };

struct LeafBagClass {
    LeafBagKind kind;
    int ordinary_leaf_count = 0;  // star bags: ordinary vertices other than the center
    int edge = -1;                // the tree edge attaching the bag
};

std::string to_string(LeafBagKind kind);

// Throws DomainError unless `bag` is a non-prime leaf bag.
LeafBagClass classify_leaf_bag(const GraphLabelledTree& t, int bag);

// Two ordinary vertices of a non-prime leaf bag that are twins of reconstruct(t), if the bag
// forces one. None only for a leaf-attached star with a single ordinary leaf.
// The pair is checked against the reconstructed graph; a mismatch throws InvariantError.
std::optional<TwinPair> twin_from_leaf_bag(const GraphLabelledTree& t, int bag);

// For a tree with exactly one prime bag P: a leaf bag at maximum distance from P (least id on
// ties), or none when every bag is adjacent to P. Throws DomainError if P is not unique.
std::optional<int> pick_peelable_bag(const GraphLabelledTree& t);

struct PeelResult {
    GraphLabelledTree without_leaf;           // represents G - x
    GraphLabelledTree without_leaf_and_center; // represents G - {x, c}
    int leaf = -1;                            // x, as an id of G
    int center = -1;                          // c, as an id of G
    std::vector<int> without_leaf_ids;        // new id -> id of G
    std::vector<int> without_both_ids;
};

// Removes a leaf-attached star leaf bag B with one ordinary leaf x and center c. Both results
// are reduced and checked against direct vertex deletion; any mismatch throws InvariantError.
// Throws DomainError if B does not have that shape or its neighbour is prime.
PeelResult peel(const GraphLabelledTree& t, int bag);

struct PrimeCore {
    Graph core;                  // Q, induced on the ordinary vertices of P and the star centers
    std::vector<int> core_ids;   // vertex i of Q is core_ids[i] in G, increasing
    std::vector<int> attach;     // pendant j hangs on vertex attach[j] of Q
    std::vector<int> pendant_ids;
};

// For a tree star-centered at its unique prime bag: a twin pair if some leaf bag yields one,
// otherwise the core Q with its pendant plan. Verifies Q against the prime label and
// Q plus pendants against G (InvariantError on mismatch). Throws DomainError if the tree is
// not star-centered at a unique prime bag.
std::variant<TwinPair, PrimeCore> extract_prime_core(const GraphLabelledTree& t);

}  // namespace zfx
