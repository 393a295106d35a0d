#include "zfx/split.hpp"

#include <string>

#include "zfx/errors.hpp"

namespace zfx {

namespace {

bool frontier_condition(const Graph& g, Mask a, Mask b, Mask& a1, Mask& b1) {
    a1 = 0;
    b1 = 0;
    for (int v : vertices_of(a)) {
        const Mask across = g.row(v) & b;
        if (across == 0) continue;
        a1 |= bit(v);
        b1 |= across;
    }
    if (a1 == 0) return false;
    for (int v : vertices_of(a1))
        if ((g.row(v) & b) != b1) return false;
    return true;
}

}  // namespace

std::optional<Split> find_split(const Graph& g, const SplitOptions& options) {
    const int n = g.order();
    if (n == 0 || !is_connected(g)) throw DomainError("splits are only defined for connected graphs");
    if (n < 4) return std::nullopt;
    if (n > options.max_vertices)
        throw CapacityError("split search on " + std::to_string(n) + " vertices exceeds the bipartition budget of " +
                            std::to_string(options.max_vertices));

    const Mask all = g.vertex_mask();
    const Mask limit = bit(n - 1);
    auto try_side = [&](Mask a) -> std::optional<Split> {
        const int size = popcount(a);
        if (size < 2 || n - size < 2) return std::nullopt;
        const Mask b = all & ~a;
        Mask a1 = 0;
        Mask b1 = 0;
        if (!frontier_condition(g, a, b, a1, b1)) return std::nullopt;
        return Split{VertexSet(a, n), VertexSet(b, n), VertexSet(a1, n), VertexSet(b1, n)};
    };

    if (options.order == SplitOrder::least_first) {
        for (Mask a = 1; a < limit; ++a)
            if (auto s = try_side(a)) return s;
    } else {
        for (Mask a = limit - 1; a >= 1; --a)
            if (auto s = try_side(a)) return s;
    }
    return std::nullopt;
}

bool is_split(const Graph& g, const Split& s) {
    const Mask all = g.vertex_mask();
    const Mask a = s.a.bits();
    const Mask b = s.b.bits();
    if ((a & b) != 0 || (a | b) != all) return false;
    if (popcount(a) < 2 || popcount(b) < 2) return false;
    if (s.a_frontier.empty() || s.b_frontier.empty()) return false;
    if (!s.a_frontier.is_subset_of(s.a) || !s.b_frontier.is_subset_of(s.b)) return false;
    for (int u : vertices_of(a))
        for (int v : vertices_of(b))
            if (g.adjacent(u, v) != (s.a_frontier.contains(u) && s.b_frontier.contains(v))) return false;
    return true;
}

bool is_split_prime(const Graph& g, const SplitOptions& options) {
    if (g.order() == 0 || !is_connected(g)) return false;
    if (classify_shape(g).shape != GraphShape::other) return false;
    return !find_split(g, options).has_value();
}

}  // namespace zfx
