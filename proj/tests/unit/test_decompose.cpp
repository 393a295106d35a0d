#include <doctest.h>

#include <algorithm>
#include <map>

#include "support/oracles.hpp"
#include "zfx/decompose.hpp"
#include "zfx/dh.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/extremal.hpp"
#include "zfx/isomorphism.hpp"

using namespace zfx;

namespace {

std::map<BagKind, int> kind_counts(const GraphLabelledTree& t) {
    std::map<BagKind, int> out;
    for (const Bag& b : t.bags()) ++out[b.kind()];
    return out;
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("P4 is two stars joined leaf to leaf") {
    const auto t = decompose(make_path(4));
    REQUIRE(t.bag_count() == 2);
    for (const Bag& b : t.bags()) {
        CHECK(b.kind() == BagKind::star);
        CHECK(b.size() == 3);
        CHECK(b.star_center() != b.marker_for(0));
    }
    CHECK(reconstruct(t) == make_path(4));
    CHECK(validate_reduced(t).empty());
    CHECK(dump_tree(t) ==
          "tree vertices=4 bags=2 edges=1\n"
          "bag 0 star size=3 center=1 label=0-1,1-2 ordinary=0:0,1:1 markers=2:0\n"
          "bag 1 star size=3 center=0 label=0-1,0-2 ordinary=0:2,1:3 markers=2:0\n"
          "edge 0 0 1\n");
}

TEST_CASE("cliques, stars and small graphs are one bag") {
    CHECK(decompose(make_complete(4)).bag_count() == 1);
    CHECK(decompose(make_complete(4)).bag(0).kind() == BagKind::clique);
    CHECK(decompose(make_star(6)).bag_count() == 1);
    CHECK(decompose(make_star(6)).bag(0).kind() == BagKind::star);
    CHECK(decompose(Graph(1)).bag(0).kind() == BagKind::clique);
    CHECK(decompose(make_path(2)).bag_count() == 1);
    CHECK(decompose(make_path(3)).bag(0).kind() == BagKind::star);
    CHECK_THROWS_AS(decompose(Graph(0)), DomainError);
    CHECK_THROWS_AS(decompose(Graph(3)), DomainError);
}

TEST_CASE("C5 is a single prime bag") {
    const auto t = decompose(make_cycle(5));
    REQUIRE(t.bag_count() == 1);
    CHECK(t.bag(0).kind() == BagKind::prime);
}

TEST_CASE("C5 with a pendant") {
    const Graph g = attach_pendants(make_cycle(5), std::vector<int>{0});
    const auto t = decompose(g);
    CHECK(t.bag_count() == 2);
    const auto s = summarize(t);
    REQUIRE(s.unique_prime.has_value());
    CHECK(are_isomorphic(s.prime_labels.front(), make_cycle(5)));
    CHECK(s.star_centered_at_prime);
    const Bag& star = t.bag(1 - *s.unique_prime);
    CHECK(star.kind() == BagKind::star);
    CHECK(star.vertex(*star.star_center()) == ordinary_vertex(0));
    CHECK(reconstruct(t) == g);
}

TEST_CASE("round trip and reducedness on every connected graph up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            const auto t = decompose(g);
            REQUIRE(reconstruct(t) == g);
            REQUIRE(validate_reduced(t).empty());
        });
}

TEST_CASE("prime-free decomposition agrees with the metric oracle up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for_each_graph(n, true, [](const Graph& g) { REQUIRE(summarize(decompose(g)).is_dh == dh_metric_oracle(g)); });
}

TEST_CASE("prime bags are split-prime") {
    for (int n = 5; n <= 7; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            const auto t = decompose(g);
            for (const Bag& b : t.bags()) {
                if (b.kind() != BagKind::prime) continue;
                CHECK(is_connected(b.label()));
                CHECK(classify_shape(b.label()).shape == GraphShape::other);
                CHECK_FALSE(find_split(b.label()).has_value());
                CHECK_FALSE(oracle::has_split(oracle::Matrix(b.label())));
            }
        });
}

TEST_CASE("the decomposition does not depend on the split order") {
    for (int n = 4; n <= 7; ++n)
        for_each_graph(n, true, [](const Graph& g) {
            const auto a = decompose(g, {.split = {.order = SplitOrder::least_first}});
            const auto b = decompose(g, {.split = {.order = SplitOrder::greatest_first}});
            REQUIRE(kind_counts(a) == kind_counts(b));
            auto pa = summarize(a).prime_labels;
            auto pb = summarize(b).prime_labels;
            REQUIRE(pa.size() == pb.size());
            std::vector<std::uint64_t> ca;
            std::vector<std::uint64_t> cb;
            for (const auto& p : pa) ca.push_back(canonical_form(p).code);
            for (const auto& p : pb) cb.push_back(canonical_form(p).code);
            std::sort(ca.begin(), ca.end());
            std::sort(cb.begin(), cb.end());
            CHECK(ca == cb);
        });
}

TEST_CASE("the decomposition is invariant under relabeling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_connected_graph(5 + trial % 10, 0.15, rng);
        const Graph h = oracle::random_permutation_of(g, rng);
        const auto tg = decompose(g);
        const auto th = decompose(h);
        CHECK(reconstruct(tg) == g);
        CHECK(reconstruct(th) == h);
        CHECK(validate_reduced(tg).empty());
        CHECK(kind_counts(tg) == kind_counts(th));
    }
}

TEST_CASE("split budget") {
    CHECK_THROWS_AS(decompose(make_cycle(25)), CapacityError);
    CHECK_NOTHROW(decompose(make_cycle(12)));
}

}
