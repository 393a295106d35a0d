#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zfx/graph.hpp"

namespace zfx {

// Injection from V(pattern) into V(host) preserving adjacency and non-adjacency.
// Backtracking with degree pruning; returns the embedding whose image sequence
// (image[0], image[1], ...) is lexicographically least.
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host);

bool are_isomorphic(const Graph& g, const Graph& h);

// Isomorphism-invariant code: the least upper-triangle adjacency bit string (graph6 column
// order, most significant bit first) over relabelings that respect an iterated degree refinement.
// Defined for order <= 11 so the code fits one word.
inline constexpr int kMaxCanonicalOrder = 11;

struct CanonicalForm {
    std::uint64_t code = 0;
    std::vector<int> labeling;  // labeling[position] = original vertex
};

CanonicalForm canonical_form(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& labeling);  // new vertex p = old labeling[p]

}  // namespace zfx
