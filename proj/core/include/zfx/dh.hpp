#pragma once

#include <optional>
#include <vector>

#include "zfx/graph.hpp"

namespace zfx {

enum class ConstructionOp { pendant, false_twin, true_twin };

struct EliminationStep {
    ConstructionOp op;
    int removed;  // vertex id of the input graph
    int anchor;   // vertex the removed one was attached to
    bool operator==(const EliminationStep&) const = default;
};

// Construction certificate in removal order. Vertex ids are those of the input graph, so
// replaying the steps backwards from `root` rebuilds the input exactly.
struct EliminationTrace {
    int root = 0;
    std::vector<EliminationStep> steps;
    bool final_ok = false;
};

// Greedy elimination: repeatedly remove the least leaf, otherwise the larger vertex of the
// least twin pair (anchored at the smaller). Succeeds iff it reaches one vertex.
// Throws DomainError for disconnected or empty input.
std::optional<EliminationTrace> recognize_dh(const Graph& g);

// Independent recogniser: every connected induced subgraph preserves all distances of g.
// Exponential in n; throws CapacityError above 8 vertices, DomainError when g is disconnected.
inline constexpr int kMaxMetricOracleOrder = 8;
bool dh_metric_oracle(const Graph& g);

// Rebuilds the graph bottom-up from K_1 by pendant / false-twin / true-twin additions.
// Throws TraceError on invalid ids or anchors, DomainError if the trace is not final.
Graph replay_trace(const EliminationTrace& trace);

}  // namespace zfx
