#include "zfx/dh.hpp"

#include <array>
#include <string>

#include "zfx/errors.hpp"

namespace zfx {

std::optional<EliminationTrace> recognize_dh(const Graph& g) {
    if (g.order() == 0) throw DomainError("recognition needs at least one vertex");
    if (!is_connected(g)) throw DomainError("recognition needs a connected graph");

    EliminationTrace trace;
    Mask alive = g.vertex_mask();
    auto nbrs = [&](int v) { return g.row(v) & alive; };

    while (popcount(alive) > 1) {
        std::optional<EliminationStep> step;
        for (int v : vertices_of(alive)) {
            if (popcount(nbrs(v)) == 1) {
                step = EliminationStep{ConstructionOp::pendant, v, lowest_vertex(nbrs(v))};
                break;
            }
        }
        for (int u : vertices_of(alive)) {
            if (step) break;
            for (int w : vertices_of(alive & ~low_bits(u + 1))) {
                const Mask others = ~(bit(u) | bit(w));
                if ((nbrs(u) & others) != (nbrs(w) & others)) continue;
                const auto op = (nbrs(u) & bit(w)) != 0 ? ConstructionOp::true_twin : ConstructionOp::false_twin;
                step = EliminationStep{op, w, u};
                break;
            }
        }
        if (!step) return std::nullopt;
        trace.steps.push_back(*step);
        alive &= ~bit(step->removed);
    }
    trace.root = lowest_vertex(alive);
    trace.final_ok = true;
    return trace;
}

bool dh_metric_oracle(const Graph& g) {
    const int n = g.order();
    if (n > kMaxMetricOracleOrder)
        throw CapacityError("metric oracle is limited to " + std::to_string(kMaxMetricOracleOrder) + " vertices");
    if (n == 0 || !is_connected(g)) throw DomainError("metric oracle needs a connected graph");

    constexpr int kUnreached = 1 << 20;
    using Table = std::array<std::array<int, kMaxMetricOracleOrder>, kMaxMetricOracleOrder>;
    auto distances = [&](Mask within) {
        Table d{};
        for (int s : vertices_of(within)) {
            for (auto& x : d[static_cast<std::size_t>(s)]) x = kUnreached;
            d[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 0;
            Mask seen = bit(s);
            Mask frontier = seen;
            for (int depth = 1; frontier != 0; ++depth) {
                Mask next = 0;
                for (int v : vertices_of(frontier)) next |= g.row(v);
                next &= within & ~seen;
                for (int v : vertices_of(next)) d[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = depth;
                seen |= next;
                frontier = next;
            }
        }
        return d;
    };

    const Table full = distances(g.vertex_mask());
    for (Mask x = 1; x <= g.vertex_mask(); ++x) {
        if (popcount(x) < 3 || !is_connected_within(g, x)) continue;
        const Table sub = distances(x);
        for (int u : vertices_of(x))
            for (int v : vertices_of(x))
                if (sub[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
                    full[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                    return false;
    }
    return true;
}

Graph replay_trace(const EliminationTrace& trace) {
    if (!trace.final_ok) throw DomainError("trace did not reach a single vertex");
    const int n = static_cast<int>(trace.steps.size()) + 1;
    if (n > kMaxVertices) throw CapacityError("trace rebuilds more than 64 vertices");
    if (trace.root < 0 || trace.root >= n) throw TraceError("root id out of range");

    GraphBuilder b(n);
    Mask present = bit(trace.root);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        const auto& s = *it;
        if (s.removed < 0 || s.removed >= n || (present & bit(s.removed)) != 0)
            throw TraceError("step adds vertex " + std::to_string(s.removed) + " twice or out of range");
        if (s.anchor < 0 || s.anchor >= n || (present & bit(s.anchor)) == 0)
            throw TraceError("step anchors at absent vertex " + std::to_string(s.anchor));
        switch (s.op) {
            case ConstructionOp::pendant:
                b.add_edge(s.removed, s.anchor);
                break;
            case ConstructionOp::true_twin:
                b.add_edge(s.removed, s.anchor);
                [[fallthrough]];
            case ConstructionOp::false_twin:
                for (int w : vertices_of(b.row(s.anchor) & ~bit(s.removed))) b.add_edge(s.removed, w);
                break;
        }
        present |= bit(s.removed);
    }
    return b.build();
}

}  // namespace zfx
