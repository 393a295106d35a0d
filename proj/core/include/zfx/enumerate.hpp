#pragma once

#include <functional>
#include <vector>

#include "zfx/graph.hpp"

namespace zfx {

inline constexpr int kMaxEnumerationOrder = 8;

// One representative per isomorphism class of graphs on n vertices, ordered by canonical code.
// Representatives are returned in canonical labeling. Throws CapacityError for n > 8
// (larger corpora must be supplied as graph6 files).
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);

}  // namespace zfx
