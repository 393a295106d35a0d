#pragma once

#include <optional>

#include "zfx/graph.hpp"

namespace zfx {

// Bipartition (A,B) with |A|,|B| >= 2 whose cross edges are exactly A1 x B1.
struct Split {
    VertexSet a;
    VertexSet b;
    VertexSet a_frontier;
    VertexSet b_frontier;
};

enum class SplitOrder { least_first, greatest_first };

struct SplitOptions {
    int max_vertices = 24;  // bipartition budget: 2^(n-1) candidate sides
    SplitOrder order = SplitOrder::least_first;
};

// Scans the sides A not containing vertex n-1 by numeric mask, in the requested order, and
// returns the first split. Graphs with fewer than 4 vertices have none.
// Throws DomainError for disconnected input and CapacityError over budget.
std::optional<Split> find_split(const Graph& g, const SplitOptions& options = {});

// Definitional check of every split condition, pair by pair.
bool is_split(const Graph& g, const Split& s);

// Connected, no split, neither clique nor star.
bool is_split_prime(const Graph& g, const SplitOptions& options = {});

}  // namespace zfx
