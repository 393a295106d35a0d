#include <doctest.h>

#include "support/oracles.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/forcing.hpp"

using namespace zfx;

namespace {

std::vector<Count> as_counts(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("forcing") {

TEST_CASE("closure examples") {
    CHECK(closure(make_path(3), VertexSet::of(3, {0})) == VertexSet::all(3));
    CHECK(closure(make_complete(3), VertexSet::of(3, {0})) == VertexSet::of(3, {0}));
    CHECK(closure(make_cycle(4), VertexSet::of(4, {0, 1})) == VertexSet::all(4));
}

TEST_CASE("is_forcing examples") {
    CHECK(is_forcing(make_path(4), VertexSet::of(4, {0})));
    CHECK_FALSE(is_forcing(make_cycle(4), VertexSet::of(4, {0, 2})));
    for (int n = 1; n <= 5; ++n) CHECK_FALSE(is_forcing(make_complete(n), VertexSet::none(n)));
    CHECK(is_forcing(Graph(0), VertexSet::none(0)));
}

TEST_CASE("profile examples") {
    CHECK(zf_profile(make_path(4)).z == std::vector<Count>{0, 2, 6, 4, 1});
    CHECK(zf_profile(make_complete(3)).z == std::vector<Count>{0, 0, 3, 1});
    CHECK(zf_profile(make_cycle(4)).z == std::vector<Count>{0, 0, 4, 4, 1});
    const auto k4 = zf_profile(make_complete(4));
    CHECK(k4.zf_number == 3);
    CHECK(k4.zprime_at(2) == 6);
}

TEST_CASE("empty graph conventions") {
    const auto p = zf_profile(Graph(0));
    CHECK(p.z == std::vector<Count>{1});
    CHECK(p.zprime == std::vector<Count>{0});
    CHECK_FALSE(p.zf_number.has_value());
    CHECK(p.polynomial().degree() == 0);
    CHECK(p.z_at(-1) == 0);
    CHECK(p.z_at(1) == 0);
}

TEST_CASE("total accessors and polynomial") {
    const auto p = zf_profile(make_path(5));
    CHECK(p.z_at(-1) == 0);
    CHECK(p.z_at(6) == 0);
    CHECK(p.zprime_at(-2) == 0);
    CHECK(p.zprime_at(7) == 0);
    const auto poly = p.polynomial();
    CHECK(poly.degree() == 5);
    for (int k = 1; k <= 5; ++k) CHECK(poly.coefficient(k) == p.z[k]);
    CHECK(poly.coefficient(0) == 0);
    CHECK(poly.coefficient(6) == 0);
}

TEST_CASE("profiles match brute force on every graph up to 6 vertices") {
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            const oracle::Matrix m(g);
            const auto p = zf_profile(g);
            if (n > 0) CHECK(p.z == as_counts(oracle::forcing_counts(m)));
            if (n > 0) CHECK(p.zprime == as_counts(oracle::nonforcing_counts(m)));
        }
}

TEST_CASE("memo and stratum walks agree on random graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 7 + trial % 8;
        const Graph g = oracle::random_graph(n, 0.35, rng);
        const auto memo = zf_profile(g, {.max_vertices = 20, .memo_limit = 20});
        const auto strata = zf_profile(g, {.max_vertices = 20, .memo_limit = 0});
        CHECK(memo.z == strata.z);
        if (n <= 11) CHECK(memo.z == as_counts(oracle::forcing_counts(oracle::Matrix(g))));
    }
}

TEST_CASE("profile invariants") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 13;
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const auto p = zf_profile(g);
        REQUIRE(p.zf_number.has_value());
        for (int k = 0; k <= n; ++k) {
            CHECK(p.z[k] + p.zprime[k] == binomial(n, k));
            CHECK((p.z[k] > 0) == (k >= *p.zf_number));
        }
        CHECK(p.z[n] == 1);
    }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(zf_profile(make_path(21)), CapacityError);
    CHECK_NOTHROW(zf_profile(make_path(21), {.max_vertices = 21, .memo_limit = 20}));
}

TEST_CASE("closure is independent of force order") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            for (Mask s = 0; s <= g.vertex_mask(); ++s)
                REQUIRE(closure_mask(g, s, ForceOrder::lowest_first) == closure_mask(g, s, ForceOrder::highest_first));
}

TEST_CASE("closure agrees with the naive fixed point") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 16;
        const Graph g = oracle::random_graph(n, 0.25, rng);
        const Mask s = std::uniform_int_distribution<Mask>(0, g.vertex_mask())(rng);
        std::vector<char> blue(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) blue[v] = (s >> v) & 1U;
        const auto expected = oracle::closure(oracle::Matrix(g), blue);
        const Mask got = closure_mask(g, s);
        for (int v = 0; v < n; ++v) CHECK(((got >> v) & 1U) == static_cast<unsigned>(expected[v]));
    }
}

TEST_CASE("closure is monotone") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            for (Mask t = 0; t <= g.vertex_mask(); ++t)
                for (Mask s = t;; s = (s - 1) & t) {
                    const Mask cs = closure_mask(g, s);
                    const Mask ct = closure_mask(g, t);
                    REQUIRE((cs & ~ct) == 0);
                    if (s == 0) break;
                }
}

TEST_CASE("forts") {
    CHECK(is_fort(make_cycle(4), VertexSet::of(4, {1, 3})));
    CHECK_FALSE(is_fort(make_path(3), VertexSet::of(3, {2})));
    CHECK(is_fort(make_path(3), VertexSet::none(3)));
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            const oracle::Matrix m(g);
            for (Mask f = 0; f <= g.vertex_mask(); ++f) CHECK(is_fort(g, VertexSet(f, n)) == oracle::is_fort(m, f));
        }
}

TEST_CASE("fort avoidance floor") {
    CHECK(fort_avoidance_floor(make_cycle(4), VertexSet::of(4, {1, 3})) == std::vector<Count>{1, 2, 1, 0, 0});
    const auto k4 = fort_avoidance_floor(make_complete(4), VertexSet::of(4, {0, 1}));
    CHECK(k4[2] == 1);
    CHECK(k4[2] <= zf_profile(make_complete(4)).zprime[2]);
    CHECK(fort_avoidance_floor(make_path(3), VertexSet::all(3)) == std::vector<Count>{1, 0, 0, 0});
    CHECK_THROWS_AS(fort_avoidance_floor(make_path(3), VertexSet::of(3, {2})), DomainError);
    CHECK_THROWS_AS(fort_avoidance_floor(make_path(3), VertexSet::none(3)), DomainError);
}

TEST_CASE("fort obstruction holds exhaustively up to 5 vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            const auto p = zf_profile(g);
            for (Mask f = 1; f <= g.vertex_mask(); ++f) {
                if (!is_fort(g, VertexSet(f, n))) continue;
                const Mask outside = g.vertex_mask() & ~f;
                for (Mask s = outside;; s = (s - 1) & outside) {
                    REQUIRE_FALSE(is_forcing_mask(g, s));
                    if (s == 0) break;
                }
                const auto floor = fort_avoidance_floor(g, VertexSet(f, n));
                for (int k = 0; k <= n; ++k) CHECK(floor[k] <= p.zprime[k]);
            }
        }
}

TEST_CASE("twin pairs are forts on every graph up to 6 vertices") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            for (const auto& t : oracle::twin_pairs(oracle::Matrix(g))) CHECK(is_fort(g, VertexSet(bit(t.u) | bit(t.v), n)));
}

}
