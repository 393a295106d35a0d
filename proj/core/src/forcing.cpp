#include "zfx/forcing.hpp"

#include <algorithm>
#include <string>

#include "zfx/errors.hpp"

namespace zfx {

Mask closure_mask(const Graph& g, Mask blue, ForceOrder order) {
    // pending holds blue vertices whose white-neighbour count may have dropped to one.
    Mask pending = blue;
    while (pending != 0) {
        const int v = order == ForceOrder::lowest_first ? lowest_vertex(pending) : highest_vertex(pending);
        pending &= ~bit(v);
        const Mask white = g.row(v) & ~blue;
        if (!std::has_single_bit(white)) continue;
        blue |= white;
        pending |= white | (g.row(lowest_vertex(white)) & blue);
    }
    return blue;
}

VertexSet closure(const Graph& g, const VertexSet& s, ForceOrder order) {
    if ((s.bits() & ~g.vertex_mask()) != 0) throw DomainError("initial set not contained in the graph");
    return VertexSet(closure_mask(g, s.bits(), order), g.order());
}

bool is_forcing(const Graph& g, const VertexSet& s) {
    if ((s.bits() & ~g.vertex_mask()) != 0) throw DomainError("initial set not contained in the graph");
    return is_forcing_mask(g, s.bits());
}

PolyCoeffs::PolyCoeffs(std::vector<Count> z_by_size) : coeffs_(std::move(z_by_size)) {}

Count PolyCoeffs::coefficient(int k) const {
    if (k < 1 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k - 1)];
}

Count ZfProfile::z_at(int k) const { return k < 0 || k > n ? 0 : z[static_cast<std::size_t>(k)]; }

Count ZfProfile::zprime_at(int k) const { return k < 0 || k > n ? 0 : zprime[static_cast<std::size_t>(k)]; }

PolyCoeffs ZfProfile::polynomial() const {
    return PolyCoeffs(std::vector<Count>(z.begin() + 1, z.end()));
}

namespace {

void count_with_memo(const Graph& g, std::vector<Count>& z) {
    const int n = g.order();
    const Mask all = g.vertex_mask();
    const std::size_t total = std::size_t{1} << n;
    std::vector<bool> forcing(total, false);
    for (std::size_t s = 0; s < total; ++s) {
        const Mask mask = static_cast<Mask>(s);
        bool f = false;
        for (Mask rest = mask; rest != 0 && !f; rest &= rest - 1)
            f = forcing[static_cast<std::size_t>(mask & ~(rest & (~rest + 1)))];
        if (!f) f = closure_mask(g, mask) == all;
        if (f) {
            forcing[s] = true;
            ++z[static_cast<std::size_t>(popcount(mask))];
        }
    }
}

// Gosper's walk through each popcount stratum, one closure per subset.
void count_by_strata(const Graph& g, std::vector<Count>& z) {
    const int n = g.order();
    const Mask all = g.vertex_mask();
    if (closure_mask(g, 0) == all) ++z[0];
    for (int k = 1; k <= n; ++k) {
        Mask s = low_bits(k);
        while (true) {
            if (closure_mask(g, s) == all) ++z[static_cast<std::size_t>(k)];
            if (k == n) break;
            const Mask c = s & (~s + 1);
            const Mask r = s + c;
            if ((r & ~all) != 0 || r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
            if ((s & ~all) != 0) break;
        }
    }
}

}  // namespace

ZfProfile zf_profile(const Graph& g, const ProfileOptions& options) {
    const int n = g.order();
    if (n > options.max_vertices)
        throw CapacityError("profile of a " + std::to_string(n) + "-vertex graph exceeds the subset budget of " +
                            std::to_string(options.max_vertices));
    ZfProfile p;
    p.n = n;
    p.z.assign(static_cast<std::size_t>(n + 1), 0);
    if (n <= std::min(options.memo_limit, kMaxMemoOrder))
        count_with_memo(g, p.z);
    else
        count_by_strata(g, p.z);
    p.zprime.resize(p.z.size());
    for (int k = 0; k <= n; ++k)
        p.zprime[static_cast<std::size_t>(k)] = binomial(n, k) - p.z[static_cast<std::size_t>(k)];
    if (n > 0) {
        for (int k = 0; k <= n; ++k) {
            if (p.z[static_cast<std::size_t>(k)] > 0) {
                p.zf_number = k;
                break;
            }
        }
    }
    return p;
}

bool is_fort(const Graph& g, const VertexSet& f) {
    const Mask fort = f.bits();
    if ((fort & ~g.vertex_mask()) != 0) throw DomainError("set not contained in the graph");
    for (int w : vertices_of(g.vertex_mask() & ~fort))
        if (popcount(g.row(w) & fort) == 1) return false;
    return true;
}

std::vector<Count> fort_avoidance_floor(const Graph& g, const VertexSet& f) {
    if (f.empty()) throw DomainError("the avoidance bound needs a nonempty fort");
    if (!is_fort(g, f)) throw DomainError("set is not a fort");
    const int n = g.order();
    std::vector<Count> floor(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) floor[static_cast<std::size_t>(k)] = binomial(n - f.size(), k);
    return floor;
}

}  // namespace zfx
