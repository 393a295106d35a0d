#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "zfx/decompose.hpp"
#include "zfx/enumerate.hpp"
#include "zfx/errors.hpp"
#include "zfx/extremal.hpp"
#include "zfx/isomorphism.hpp"
#include "zfx/prime_core.hpp"

using namespace zfx;

namespace {

Graph c5_pendant() { return attach_pendants(make_cycle(5), std::vector<int>{0}); }

// C_5 with the path 0 - 5 - 6 hanging off vertex 0.
Graph c5_pendant_path() { return attach_pendants(c5_pendant(), std::vector<int>{5}); }

// Path 0-1-2-3 closed by y=4 into a 5-cycle, c=5 a true twin of y, x=6 a pendant at c.
// Decomposes as prime - clique - star.
Graph prime_clique_star() {
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 3}, {5, 0}, {5, 3}, {5, 4}, {6, 5}});
}

int bag_of_kind(const GraphLabelledTree& t, BagKind kind) {
    for (int b = 0; b < t.bag_count(); ++b)
        if (t.bag(b).kind() == kind) return b;
    return -1;
}

}  // namespace

TEST_SUITE("prime_core") {

TEST_CASE("leaf bag classification") {
    const auto t = decompose(c5_pendant());
    const int star = bag_of_kind(t, BagKind::star);
    const auto cls = classify_leaf_bag(t, star);
    CHECK(cls.kind == LeafBagKind::star_leaf_attached);
    CHECK(cls.ordinary_leaf_count == 1);
    CHECK_THROWS_AS(classify_leaf_bag(t, bag_of_kind(t, BagKind::prime)), DomainError);

    // K_4 with a pendant path 3-4-5.
    const Graph k4p = attach_pendants(attach_pendants(make_complete(4), std::vector<int>{3}), std::vector<int>{4});
    const auto u = decompose(k4p);
    const int clique = bag_of_kind(u, BagKind::clique);
    REQUIRE(clique >= 0);
    CHECK(classify_leaf_bag(u, clique).kind == LeafBagKind::clique);
    for (int b = 0; b < u.bag_count(); ++b)
        if (!u.is_leaf_bag(b)) CHECK_THROWS_AS(classify_leaf_bag(u, b), DomainError);

    const auto twins = twin_from_leaf_bag(u, clique);
    REQUIRE(twins.has_value());
    CHECK(*twins == TwinPair{0, 1, TwinKind::true_twins});
}

TEST_CASE("hand-built center-attached star leaf bag") {
    // The marker of the C_5 bag stands for the two ordinary leaves 4 and 5 of the star.
    std::vector<Bag> bags{
        Bag(make_cycle(5), {marker_vertex(0), ordinary_vertex(0), ordinary_vertex(1), ordinary_vertex(2), ordinary_vertex(3)}),
        Bag(make_star(3), {marker_vertex(0), ordinary_vertex(4), ordinary_vertex(5)}),
    };
    const GraphLabelledTree t(6, std::move(bags), {{0, 1}});
    CHECK(validate_reduced(t).empty());
    const auto cls = classify_leaf_bag(t, 1);
    CHECK(cls.kind == LeafBagKind::star_center_attached);
    CHECK(cls.ordinary_leaf_count == 2);
    const auto twins = twin_from_leaf_bag(t, 1);
    REQUIRE(twins.has_value());
    CHECK(*twins == TwinPair{4, 5, TwinKind::false_twins});
    const Graph g = reconstruct(t);
    CHECK(g.row(4) == (bit(0) | bit(3)));
}

TEST_CASE("a single ordinary leaf is a leaf of G at the center") {
    const auto t = decompose(c5_pendant());
    const int star = bag_of_kind(t, BagKind::star);
    CHECK_FALSE(twin_from_leaf_bag(t, star).has_value());
    const Graph g = reconstruct(t);
    CHECK(g.degree(5) == 1);
    CHECK(g.adjacent(5, 0));
}

TEST_CASE("several ordinary leaves give false twins") {
    const Graph g = attach_pendants(make_cycle(5), std::vector<int>{0, 0});
    const auto t = decompose(g);
    const int star = bag_of_kind(t, BagKind::star);
    const auto cls = classify_leaf_bag(t, star);
    CHECK(cls.kind == LeafBagKind::star_leaf_attached);
    CHECK(cls.ordinary_leaf_count == 2);
    CHECK(twin_from_leaf_bag(t, star) == TwinPair{5, 6, TwinKind::false_twins});
}

TEST_CASE("picking the bag to peel") {
    const auto far = decompose(c5_pendant_path());
    REQUIRE(far.bag_count() == 3);
    const auto picked = pick_peelable_bag(far);
    REQUIRE(picked.has_value());
    CHECK(far.distances_from(*summarize(far).unique_prime)[*picked] == 2);
    CHECK(far.bag(*picked).kind() == BagKind::star);
    auto ids = far.bag(*picked).ordinary_ids();
    std::sort(ids.begin(), ids.end());
    CHECK(ids == std::vector<int>{5, 6});

    CHECK_FALSE(pick_peelable_bag(decompose(c5_pendant())).has_value());
    CHECK_THROWS_AS(pick_peelable_bag(decompose(make_path(5))), DomainError);
}

TEST_CASE("peeling the far star of C5 with a pendant path") {
    const Graph g = c5_pendant_path();
    const auto t = decompose(g);
    const auto r = peel(t, *pick_peelable_bag(t));
    CHECK(r.leaf == 6);
    CHECK(r.center == 5);
    CHECK(reconstruct(r.without_leaf) == remove_vertices(g, bit(6)));
    CHECK(reconstruct(r.without_leaf_and_center) == make_cycle(5));
    CHECK(r.without_leaf_ids == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(r.without_both_ids == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(validate_reduced(r.without_leaf).empty());
    CHECK(r.without_leaf_and_center.bag_count() == 1);
}

TEST_CASE("peeling next to a clique bag absorbs the leftover edge bag") {
    const Graph g = prime_clique_star();
    const auto t = decompose(g);
    REQUIRE(t.bag_count() == 3);
    const int clique = bag_of_kind(t, BagKind::clique);
    REQUIRE(clique >= 0);
    CHECK(t.bag(clique).size() == 3);
    const int star = bag_of_kind(t, BagKind::star);
    const auto r = peel(t, star);
    CHECK(reconstruct(r.without_leaf) == remove_vertices(g, bit(6)));
    CHECK(reconstruct(r.without_leaf_and_center) == remove_vertices(g, bit(5) | bit(6)));
    CHECK(r.without_leaf_and_center.bag_count() == 1);
    CHECK(r.without_leaf.bag_count() == 2);
}

TEST_CASE("peel preconditions") {
    const auto t = decompose(c5_pendant());
    CHECK_THROWS_AS(peel(t, bag_of_kind(t, BagKind::star)), DomainError);  // neighbour is prime
    const auto u = decompose(attach_pendants(make_cycle(5), std::vector<int>{0, 0}));
    CHECK_THROWS_AS(peel(u, bag_of_kind(u, BagKind::star)), DomainError);  // two ordinary leaves
}

TEST_CASE("a leaf star on a star center is refused") {
    // Not reduced on purpose: star(center 0; leaves 1, m) joined to star(center m; leaves 2, m').
    std::vector<Bag> bags{
        Bag(make_cycle(5), {marker_vertex(1), ordinary_vertex(3), ordinary_vertex(4), ordinary_vertex(5), ordinary_vertex(6)}),
        Bag(make_star(3), {marker_vertex(0), ordinary_vertex(2), marker_vertex(1)}),
        Bag(make_star(3), {ordinary_vertex(0), ordinary_vertex(1), marker_vertex(0)}),
    };
    const GraphLabelledTree t(7, std::move(bags), {{1, 2}, {0, 1}});
    CHECK_THROWS_AS(peel(t, 2), InvariantError);
}

TEST_CASE("prime core extraction") {
    const auto t = decompose(c5_pendant());
    const auto r = extract_prime_core(t);
    REQUIRE(std::holds_alternative<PrimeCore>(r));
    const auto& core = std::get<PrimeCore>(r);
    CHECK(are_isomorphic(core.core, make_cycle(5)));
    CHECK(core.core_ids == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(core.attach == std::vector<int>{0});
    CHECK(core.pendant_ids == std::vector<int>{5});

    const auto twins = extract_prime_core(decompose(attach_pendants(make_cycle(5), std::vector<int>{0, 0})));
    REQUIRE(std::holds_alternative<TwinPair>(twins));
    CHECK(std::get<TwinPair>(twins).kind == TwinKind::false_twins);

    const auto bare = extract_prime_core(decompose(make_cycle(5)));
    REQUIRE(std::holds_alternative<PrimeCore>(bare));
    CHECK(std::get<PrimeCore>(bare).core == make_cycle(5));
    CHECK(std::get<PrimeCore>(bare).attach.empty());

    CHECK_THROWS_AS(extract_prime_core(decompose(c5_pendant_path())), DomainError);
    CHECK_THROWS_AS(extract_prime_core(decompose(make_path(4))), DomainError);
}

TEST_CASE("pendants on every core vertex") {
    const Graph g = attach_pendants(make_cycle(5), std::vector<int>{0, 1, 2, 3, 4});
    const auto r = extract_prime_core(decompose(g));
    REQUIRE(std::holds_alternative<PrimeCore>(r));
    const auto& core = std::get<PrimeCore>(r);
    CHECK(core.core == make_cycle(5));
    CHECK(are_isomorphic(attach_pendants(core.core, core.attach), g));
    CHECK(check_pendant_extension(core.core, core.attach).verdict.is_path_extremal);
}

TEST_CASE("peels and cores on grown members of small prime classes") {
    // Start from each split-prime graph on 5 vertices and add random pendants and twins.
    std::mt19937_64 rng(43);
    std::vector<Graph> seeds;
    for (const Graph& g : enumerate_graphs(5, true))
        if (is_split_prime(g)) seeds.push_back(g);
    REQUIRE(seeds.size() == 3);
    long peels = 0;
    long cores = 0;
    for (int trial = 0; trial < 300; ++trial) {
        GraphBuilder b(seeds[trial % 3]);
        const int n = 6 + trial % 6;
        while (b.order() < n) {
            const int anchor = std::uniform_int_distribution<int>(0, b.order() - 1)(rng);
            const int op = std::uniform_int_distribution<int>(0, 3)(rng);
            const int added = b.add_vertex();
            if (op <= 1) {
                b.add_edge(added, anchor);
                continue;
            }
            for (int w : vertices_of(b.row(anchor)))
                if (w != added) b.add_edge(added, w);
            if (op == 3) b.add_edge(added, anchor);
        }
        const Graph g = b.build();
        const auto t = decompose(g);
        const auto s = summarize(t);
        REQUIRE(s.unique_prime.has_value());
        CHECK(s.prime_labels.front().order() == 5);
        if (s.star_centered_at_prime) {
            CHECK_NOTHROW(extract_prime_core(t));
            ++cores;
            continue;
        }
        for (int bag = 0; bag < t.bag_count(); ++bag) {
            if (bag == *s.unique_prime || !t.is_leaf_bag(bag)) continue;
            const auto cls = classify_leaf_bag(t, bag);
            if (cls.kind != LeafBagKind::star_leaf_attached || cls.ordinary_leaf_count != 1) continue;
            if (t.bag(t.other_end(cls.edge, bag)).kind() == BagKind::prime) continue;
            const auto r = peel(t, bag);
            CHECK(reconstruct(r.without_leaf) == remove_vertices(g, bit(r.leaf)));
            CHECK(validate_reduced(r.without_leaf_and_center).empty());
            ++peels;
        }
    }
    CHECK(peels > 0);
    CHECK(cores > 0);
}

}
