#pragma once

#include <optional>
#include <vector>

#include "zfx/binomial.hpp"
#include "zfx/graph.hpp"

namespace zfx {

// Order in which pending forcers are examined. The closure is the same for every order;
// the option exists so that confluence can be tested.
enum class ForceOrder { lowest_first, highest_first };

// Blue set reached from `blue` under the colour-change rule: a blue vertex with exactly
// one white neighbour turns that neighbour blue.
Mask closure_mask(const Graph& g, Mask blue, ForceOrder order = ForceOrder::lowest_first);
VertexSet closure(const Graph& g, const VertexSet& s, ForceOrder order = ForceOrder::lowest_first);

bool is_forcing(const Graph& g, const VertexSet& s);
inline bool is_forcing_mask(const Graph& g, Mask s) { return closure_mask(g, s) == g.vertex_mask(); }

struct ProfileOptions {
    int max_vertices = 20;  // subset-enumeration budget
    int memo_limit = 20;    // subset-indexed forcing memo up to this order (hard cap 24)
};

inline constexpr int kMaxMemoOrder = 24;

// Polynomial sum_{k=1..n} z(G;k) x^k. There is no constant term.
class PolyCoeffs {
public:
    explicit PolyCoeffs(std::vector<Count> z_by_size);
    int degree() const { return static_cast<int>(coeffs_.size()); }
    Count coefficient(int k) const;  // 0 outside 1..degree()

private:
    std::vector<Count> coeffs_;  // coeffs_[k-1] = z(G;k)
};

struct ZfProfile {
    int n = 0;
    std::vector<Count> z;       // z[k] = number of forcing k-subsets, k = 0..n
    std::vector<Count> zprime;  // zprime[k] = C(n,k) - z[k]
    std::optional<int> zf_number;

    // Total accessors: 0 for k < 0 or k > n.
    Count z_at(int k) const;
    Count zprime_at(int k) const;
    PolyCoeffs polynomial() const;
};

// Exact counts of forcing sets by size. With the memo, a subset is forcing as soon as one
// of its one-smaller subsets is; only the remaining subsets run a closure.
// Throws CapacityError when n exceeds options.max_vertices.
ZfProfile zf_profile(const Graph& g, const ProfileOptions& options = {});

// Every vertex outside f has zero or at least two neighbours in f. The empty set is a fort.
bool is_fort(const Graph& g, const VertexSet& f);

// k -> C(n - |f|, k): every k-subset avoiding a nonempty fort is non-forcing.
// Throws DomainError if f is empty or not a fort.
std::vector<Count> fort_avoidance_floor(const Graph& g, const VertexSet& f);

}  // namespace zfx
