#pragma once

#include "zfx/labelled_tree.hpp"
#include "zfx/split.hpp"

namespace zfx {

struct DecomposeOptions {
    SplitOptions split;
};

// Canonical split decomposition of a connected graph: split bags until every label is a
// clique, a star or split-prime, then reduce. Bag and edge ids are assigned in creation order.
// Throws DomainError for empty or disconnected input and CapacityError over the split budget.
GraphLabelledTree decompose(const Graph& g, const DecomposeOptions& options = {});

}  // namespace zfx
