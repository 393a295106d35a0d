#include <doctest.h>

#include "support/oracles.hpp"
#include "zfx/dh.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/extremal.hpp"
#include "zfx/isomorphism.hpp"

using namespace zfx;

TEST_SUITE("dh") {

TEST_CASE("recognition examples") {
    const auto p5 = recognize_dh(make_path(5));
    REQUIRE(p5.has_value());
    CHECK(p5->final_ok);
    CHECK(p5->steps.size() == 4);
    for (const auto& s : p5->steps) CHECK(s.op == ConstructionOp::pendant);

    const auto c4 = recognize_dh(make_cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->steps.front() == EliminationStep{ConstructionOp::false_twin, 2, 0});
    CHECK(c4->steps[1].op == ConstructionOp::pendant);
    CHECK(replay_trace(*c4) == make_cycle(4));

    CHECK_FALSE(recognize_dh(make_cycle(5)).has_value());
    CHECK_THROWS_AS(recognize_dh(Graph(2)), DomainError);
    CHECK_THROWS_AS(recognize_dh(Graph(0)), DomainError);
}

TEST_CASE("metric oracle examples") {
    CHECK(dh_metric_oracle(make_path(6)));
    CHECK_FALSE(dh_metric_oracle(make_cycle(5)));
    CHECK_FALSE(dh_metric_oracle(make_cycle(6)));
    CHECK(dh_metric_oracle(make_complete(8)));
    CHECK_THROWS_AS(dh_metric_oracle(make_path(9)), CapacityError);
    CHECK_THROWS_AS(dh_metric_oracle(Graph(3)), DomainError);
}

TEST_CASE("replay") {
    const auto p3 = recognize_dh(make_path(3));
    REQUIRE(p3.has_value());
    CHECK(replay_trace(*p3) == make_path(3));
    CHECK(replay_trace(EliminationTrace{0, {}, true}) == Graph(1));
    EliminationTrace bad{0, {{ConstructionOp::pendant, 0, 0}}, true};
    CHECK_THROWS_AS(replay_trace(bad), TraceError);
    EliminationTrace stuck{0, {}, false};
    CHECK_THROWS_AS(replay_trace(stuck), DomainError);
}

TEST_CASE("traces replay to the input on every connected graph up to 8 vertices") {
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            const auto trace = recognize_dh(g);
            if (trace) REQUIRE(replay_trace(*trace) == g);
        });
}

TEST_CASE("greedy elimination agrees with the metric oracle up to 8 vertices") {
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, true, [](const Graph& g) { REQUIRE(recognize_dh(g).has_value() == dh_metric_oracle(g)); });
}

TEST_CASE("both recognisers agree with forbidden induced subgraphs up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            const bool expected = oracle::dh_by_forbidden_subgraphs(oracle::Matrix(g));
            CHECK(dh_metric_oracle(g) == expected);
            CHECK(recognize_dh(g).has_value() == expected);
        });
}

TEST_CASE("every DH graph has a leaf or a twin pair") {
    for (int n = 2; n <= 8; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            if (dh_metric_oracle(g)) REQUIRE((find_leaf(g).has_value() || find_twin_pair(g).has_value()));
        });
}

TEST_CASE("connected induced subgraphs of DH graphs are DH") {
    for (int n = 2; n <= 7; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            if (!dh_metric_oracle(g)) return;
            for (Mask keep = 1; keep <= g.vertex_mask(); ++keep)
                if (is_connected_within(g, keep)) REQUIRE(dh_metric_oracle(induced_subgraph(g, keep).graph));
        });
}

TEST_CASE("DH graphs up to 8 vertices are path-extremal") {
    long checked = 0;
    for (int n = 1; n <= 8; ++n)
        for_each_graph(n, true, [&](const Graph& g) {
            if (!dh_metric_oracle(g)) return;
            ++checked;
            REQUIRE(check_path_extremal(g).is_path_extremal);
        });
    CHECK(checked == 1 + 1 + 2 + 6 + 18 + 73 + 308 + 1484);
}

TEST_CASE("larger random DH graphs are recognised") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        // Grow by random pendant and twin additions.
        GraphBuilder b(1);
        const int n = 2 + trial % 30;
        for (int v = 1; v < n; ++v) {
            const int anchor = std::uniform_int_distribution<int>(0, v - 1)(rng);
            const int op = std::uniform_int_distribution<int>(0, 2)(rng);
            const int added = b.add_vertex();
            if (op == 0 || b.row(anchor) == 0) {
                b.add_edge(added, anchor);
                continue;
            }
            for (int w : vertices_of(b.row(anchor)))
                if (w != added) b.add_edge(added, w);
            if (op == 2) b.add_edge(added, anchor);
        }
        const Graph g = oracle::random_permutation_of(b.build(), rng);
        const auto trace = recognize_dh(g);
        REQUIRE(trace.has_value());
        CHECK(replay_trace(*trace) == g);
    }
}

}
