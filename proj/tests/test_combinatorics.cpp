#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cqsf/digraph.hpp"
#include "cqsf/errors.hpp"
#include "cqsf/orientation.hpp"
#include "cqsf/partition.hpp"
#include "cqsf/permutation.hpp"
#include "support/oracles.hpp"

using namespace cqsf;

TEST_CASE("partition and composition enumeration order") {
    CHECK(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(compositions_of(3) == std::vector<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    CHECK(compositions_of(0) == std::vector<Composition>{{}});
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(conjugate({4, 2, 1})) == Partition{4, 2, 1});

    CHECK(composition_from_subset({1, 3}, 5) == Composition{1, 2, 2});
    CHECK(subset_from_composition({1, 2, 2}) == std::vector<int>{1, 3});
    for (const Composition& c : compositions_of(6))
        CHECK(composition_from_subset(subset_from_composition(c), 6) == c);

    CHECK(rearrangements({2, 1, 1}) ==
          std::vector<Composition>{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
}

TEST_CASE("permutation validation") {
    const Permutation s({2, 3, 1});
    CHECK(s.at(1) == 2);
    CHECK(s.position(1) == 3);
    CHECK_THROWS_AS(Permutation({1, 1}), InvalidInputError);
    CHECK_THROWS_AS(Permutation({0, 1}), InvalidInputError);
    CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
}

TEST_CASE("digraph construction") {
    const Digraph d = digraph_from_edges(2, {{1, 2}});
    CHECK(d.n == 2);
    CHECK(d.has_edge(1, 2));
    CHECK_FALSE(d.has_edge(2, 1));

    const Digraph c3 = digraph_from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(c3.edges.size() == 3);
    CHECK(c3.underlying().edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    CHECK_THROWS_AS(digraph_from_edges(2, {{1, 1}}), InvalidInputError);
    CHECK_THROWS_AS(digraph_from_edges(2, {{1, 3}}), InvalidInputError);
    CHECK_THROWS_AS(digraph_from_edges(2, {{1, 2}, {1, 2}}), InvalidInputError);

    const Digraph bidi = digraph_from_edges(2, {{1, 2}, {2, 1}});
    CHECK_FALSE(is_oriented(bidi));
    CHECK(bidi.underlying().edges.size() == 1);
    CHECK(is_oriented(c3));
    CHECK_FALSE(is_acyclic(c3));
    CHECK(is_acyclic(d));
    CHECK_FALSE(is_acyclic(bidi));
}

TEST_CASE("proper circular arc recognition") {
    CHECK(is_proper_circular_arc(digraph_from_edges(3, {{1, 2}, {2, 3}})).ok);

    const auto k21 = is_proper_circular_arc(digraph_from_edges(3, {{1, 3}, {2, 3}}));
    CHECK_FALSE(k21.ok);
    REQUIRE(k21.witness.has_value());
    CHECK(k21.witness->kind == PcaWitness::Kind::in_star);
    CHECK(std::set<int>{k21.witness->a, k21.witness->b, k21.witness->c} ==
          std::set<int>{1, 2, 3});

    const auto k12 = is_proper_circular_arc(digraph_from_edges(3, {{1, 2}, {1, 3}}));
    CHECK_FALSE(k12.ok);
    CHECK(k12.witness->kind == PcaWitness::Kind::out_star);

    CHECK(is_proper_circular_arc(directed_cycle(4)).ok);

    const auto bidi = is_proper_circular_arc(digraph_from_edges(2, {{1, 2}, {2, 1}}));
    CHECK_FALSE(bidi.ok);
    CHECK(bidi.witness->kind == PcaWitness::Kind::bidirected_pair);

    CHECK(is_unit_interval_digraph(digraph_from_edges(3, {{1, 2}, {2, 3}})));
    CHECK_FALSE(is_unit_interval_digraph(directed_cycle(3)));
    CHECK_FALSE(is_unit_interval_digraph(family_digraph(FamilyKind::circular, 5, 2)));
}

TEST_CASE("families") {
    CHECK(family_digraph(FamilyKind::circular, 5, 2).edges ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    CHECK(family_digraph(FamilyKind::interval, 4, 1).edges.empty());
    CHECK(family_digraph(FamilyKind::interval, 3, 3).edges ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(directed_path(3).edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(directed_cycle(2).edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});

    CHECK_THROWS_AS(family_digraph(FamilyKind::interval, 4, 5), InvalidInputError);
    CHECK_THROWS_AS(family_digraph(FamilyKind::interval, 4, 0), InvalidInputError);
    CHECK_THROWS_AS(family_digraph(FamilyKind::circular, 6, 4), InvalidInputError);
    CHECK_THROWS_AS(family_digraph(FamilyKind::cycle, 1), InvalidInputError);

    for (int n = 1; n <= 9; ++n) {
        for (int r = 1; r <= (n + 1) / 2; ++r)
            CHECK(is_proper_circular_arc(family_digraph(FamilyKind::circular, n, r)).ok);
        for (int r = 1; r <= n; ++r)
            CHECK(is_unit_interval_digraph(family_digraph(FamilyKind::interval, n, r)));
    }
}

TEST_CASE("acyclic orientation enumeration") {
    SUBCASE("single edge") {
        const Digraph ref = digraph_from_edges(2, {{1, 2}});
        const auto records = acyclic_orientations(ref.underlying(), ref);
        REQUIRE(records.size() == 2);
        CHECK(records[0].sinks == std::vector<int>{2});
        CHECK(records[0].asc == 1);
        CHECK(records[1].sinks == std::vector<int>{1});
        CHECK(records[1].asc == 0);
    }

    SUBCASE("triangle against the directed 3-cycle") {
        const Digraph ref = directed_cycle(3);
        const Graph g = ref.underlying();
        const auto records = acyclic_orientations(g, ref);
        REQUIRE(records.size() == 6);
        std::multiset<int> asc;
        for (const auto& rec : records) {
            CHECK(rec.sinks.size() == 1);
            asc.insert(rec.asc);
        }
        CHECK(asc == std::multiset<int>{1, 1, 1, 2, 2, 2});
    }

    SUBCASE("path on three vertices") {
        const Digraph ref = directed_path(3);
        const auto records = acyclic_orientations(ref.underlying(), ref);
        REQUIRE(records.size() == 4);
        std::multiset<std::size_t> sink_counts;
        for (const auto& rec : records) sink_counts.insert(rec.sinks.size());
        CHECK(sink_counts == std::multiset<std::size_t>{1, 1, 1, 2});
    }

    SUBCASE("graph/reference mismatch is rejected") {
        const Digraph ref = directed_path(3);
        CHECK_THROWS_AS(acyclic_orientations(graph_from_edges(3, {{1, 3}}), ref),
                        InvalidInputError);
    }
}

TEST_CASE("orientation records are acyclic and consistent") {
    int orientation_budget = 0;
    testsupport::for_each_graph(4, [&](const Graph& g) {
        const std::vector<std::pair<int, int>> as_directed(g.edges.begin(), g.edges.end());
        const Digraph ref = digraph_from_edges(g.n, as_directed);
        const auto records = acyclic_orientations(g, ref);
        CHECK(Int(records.size()) == testsupport::acyclic_orientation_count(g));
        for (const auto& rec : records) {
            CHECK(orientation_is_acyclic(g, rec.directions));
            CHECK(orientation_sinks(g, rec.directions) == rec.sinks);
            CHECK(rec.asc <= static_cast<int>(g.edges.size()));
        }
        orientation_budget += static_cast<int>(records.size());
    });
    CHECK(orientation_budget > 0);

    // Spot-check the orientation count oracle on n = 5 as well.
    testsupport::for_each_graph(5, [&](const Graph& g) {
        const std::vector<std::pair<int, int>> as_directed(g.edges.begin(), g.edges.end());
        const Digraph ref = digraph_from_edges(g.n, as_directed);
        CHECK(Int(acyclic_orientations(g, ref).size()) ==
              testsupport::acyclic_orientation_count(g));
    });
}

TEST_CASE("sink gap partitions") {
    CHECK(cycle_sink_gap_partition(9, {2, 6, 8}) == Partition{4, 3, 2});
    CHECK(path_sink_gap_partition(8, {2, 6, 8}) == Partition{4, 2, 2});
    CHECK(cycle_sink_gap_partition(3, {2}) == Partition{3});
    CHECK(path_sink_gap_partition(1, {1}) == Partition{1});
    CHECK(path_sink_gap_partition(3, {1, 3}) == Partition{2, 1});
}

TEST_CASE("random generators produce what they claim") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 30; ++i) {
        const Digraph b = random_digraph_with_bidirected(4, rng);
        CHECK_FALSE(is_oriented(b));
        const Digraph k = random_proper_circular_arc_digraph(5, rng);
        CHECK(is_proper_circular_arc(k).ok);
        const Digraph u = random_unit_interval_digraph(5, rng);
        CHECK(is_unit_interval_digraph(u));
    }
}
