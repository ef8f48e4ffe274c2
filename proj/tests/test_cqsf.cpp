#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cqsf/cqsf.hpp"
#include "cqsf/errors.hpp"
#include "cqsf/orientation.hpp"
#include "support/oracles.hpp"

using namespace cqsf;

namespace {

TPoly poly(std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int x : coeffs) c.emplace_back(x);
    return TPoly(std::move(c));
}

QSymT qm(int n, std::initializer_list<std::pair<std::vector<int>, TPoly>> terms) {
    QSymT q{n, QBasis::M, {}};
    for (const auto& [key, c] : terms) q.add_term(key, c);
    return q;
}

const TPoly one_plus_t = TPoly(std::vector<Rat>{Rat(1), Rat(1)});

}  // namespace

TEST_CASE("coloring oracle on the smallest digraphs") {
    CHECK(chromatic_qsym_direct(digraph_from_edges(1, {})) == qm(1, {{{1}, TPoly(1)}}));
    CHECK(chromatic_qsym_direct(digraph_from_edges(2, {{1, 2}})) ==
          qm(2, {{{1, 1}, one_plus_t}}));
    CHECK(chromatic_qsym_direct(directed_cycle(3)) == qm(3, {{{1, 1, 1}, poly({0, 3, 3})}}));
    // Empty digraph on zero vertices is the scalar 1.
    CHECK(chromatic_qsym_direct(digraph_from_edges(0, {})) == qm(0, {{{}, TPoly(1)}}));
    // The bidirected pair: both colorings have exactly one ascending edge.
    CHECK(chromatic_qsym_direct(directed_cycle(2)) == qm(2, {{{1, 1}, poly({0, 2})}}));
}

TEST_CASE("coloring oracle agrees with the palette enumeration oracle") {
    for_each_oriented_digraph(3, [&](const Digraph& d) {
        CHECK(chromatic_qsym_direct(d) == testsupport::palette_coloring_qsym(d));
    });
    std::mt19937_64 rng(99);
    for (int i = 0; i < 15; ++i) {
        const Digraph d = random_digraph_with_bidirected(4, rng);
        CHECK(chromatic_qsym_direct(d) == testsupport::palette_coloring_qsym(d));
    }
}

TEST_CASE("coloring class validation") {
    const Digraph d = digraph_from_edges(2, {{1, 2}});
    validate_coloring(d, {{1, 1}, {1, 2}});
    validate_coloring(d, {{1, 1}, {2, 1}});
    CHECK(coloring_ascents(d, {1, 2}) == 1);
    CHECK(coloring_ascents(d, {2, 1}) == 0);
    CHECK_THROWS_AS(validate_coloring(d, {{2}, {1, 1}}), InvalidInputError);     // not proper
    CHECK_THROWS_AS(validate_coloring(d, {{1, 1}, {1, 1}}), InvalidInputError);  // bad content
    CHECK_THROWS_AS(validate_coloring(d, {{1, 1}, {1}}), InvalidInputError);     // wrong size
}

TEST_CASE("digraph inversions") {
    CHECK(inv_digraph(digraph_from_edges(2, {{1, 2}}), Permutation({2, 1})) == 1);
    CHECK(inv_digraph(directed_cycle(3), Permutation({1, 3, 2})) == 2);
    CHECK(inv_digraph(digraph_from_edges(2, {{1, 2}}), Permutation({1, 2})) == 0);
    CHECK_THROWS_AS(inv_digraph(directed_cycle(3), Permutation({1, 2})), InvalidInputError);
}

TEST_CASE("graph descent sets") {
    SUBCASE("nine-cycle worked example") {
        const Graph c9 = directed_cycle(9).underlying();
        const auto data = g_descent_set(c9, Permutation({2, 3, 4, 6, 5, 8, 9, 7, 1}));
        CHECK(data.descents == std::vector<int>{3, 5, 7});
        const auto rank_class = [&](int r) {
            std::vector<int> xs;
            for (int x = 1; x <= 9; ++x)
                if (data.rank[x - 1] == r) xs.push_back(x);
            return xs;
        };
        CHECK(rank_class(1) == std::vector<int>{2, 6, 8});
        CHECK(rank_class(2) == std::vector<int>{3, 7, 9});
        CHECK(rank_class(3) == std::vector<int>{1, 4});
        CHECK(rank_class(4) == std::vector<int>{5});
    }
    SUBCASE("edgeless ties break by letter") {
        const auto data = g_descent_set(graph_from_edges(2, {}), Permutation({2, 1}));
        CHECK(data.rank == std::vector<int>{1, 1});
        CHECK(data.descents == std::vector<int>{1});
    }
    SUBCASE("descending word on a path has no descents") {
        const Graph path = directed_path(3).underlying();
        const auto data = g_descent_set(path, Permutation({3, 2, 1}));
        CHECK(data.rank == std::vector<int>{3, 2, 1});  // rank of letter x
        CHECK(data.descents.empty());
    }
}

TEST_CASE("F-basis expansion examples") {
    const Digraph edge = digraph_from_edges(2, {{1, 2}});
    QSymT expected_f{2, QBasis::F, {}};
    expected_f.add_term({}, one_plus_t);
    CHECK(omega_x_f_expansion(edge) == expected_f);
    CHECK(chromatic_qsym_via_f(edge) == qm(2, {{{1, 1}, one_plus_t}}));

    QSymT vertex_f{1, QBasis::F, {}};
    vertex_f.add_term({}, TPoly(1));
    CHECK(omega_x_f_expansion(digraph_from_edges(1, {})) == vertex_f);

    CHECK(chromatic_qsym_via_f(directed_cycle(3)) == chromatic_qsym_direct(directed_cycle(3)));
}

TEST_CASE("F-basis expansion matches the oracle exhaustively on n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        for_each_oriented_digraph(n, [&](const Digraph& d) {
            CHECK(chromatic_qsym_via_f(d) == chromatic_qsym_direct(d));
        });
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const Digraph d = random_digraph_with_bidirected(4, rng);
        CHECK(chromatic_qsym_via_f(d) == chromatic_qsym_direct(d));
    }
}

TEST_CASE("factorial budget is enforced") {
    SweepOptions tight;
    tight.factorial_budget = 3;
    CHECK_THROWS_AS(omega_x_f_expansion(directed_cycle(4), tight), BudgetError);
    CHECK_THROWS_AS(chromatic_qsym_direct(directed_cycle(4), tight), BudgetError);
    CHECK_THROWS_AS(p_expansion_via_n(directed_cycle(4), tight), BudgetError);
}

TEST_CASE("N_{G,lambda} membership") {
    const Graph c9 = directed_cycle(9).underlying();
    const Permutation sigma({2, 3, 4, 6, 5, 8, 9, 7, 1});
    CHECK(n_lambda_contains(c9, sigma, {3, 2, 2, 1, 1}));
    CHECK_FALSE(n_lambda_contains(c9, sigma, {3, 2, 2, 2}));
    CHECK_THROWS_AS(n_lambda_contains(c9, sigma, {3, 2, 2}), InvalidInputError);

    // Every permutation lies in N_{G,(1^n)}.
    const Digraph d4 = family_digraph(FamilyKind::interval, 4, 3);
    const auto all = n_g_lambda(d4.underlying(), d4, {1, 1, 1, 1});
    CHECK(all.size() == 24);

    // Listing agrees with membership and carries inversion counts.
    const Digraph c3 = directed_cycle(3);
    const auto members = n_g_lambda(c3.underlying(), c3, {3});
    CHECK(members.size() == 6);
    TPoly total;
    for (const auto& [perm, inv] : members) {
        CHECK(inv == inv_digraph(c3, perm));
        total += TPoly::monomial(inv);
    }
    CHECK(total == poly({0, 3, 3}));
}

TEST_CASE("unique-sink orientations count N_{G,(n)} at t = 1") {
    for (int n = 2; n <= 5; ++n) {
        testsupport::for_each_graph(n, [&](const Graph& g) {
            if (!testsupport::is_connected(g)) return;
            const std::vector<std::pair<int, int>> as_directed(g.edges.begin(), g.edges.end());
            const Digraph ref = digraph_from_edges(g.n, as_directed);
            const auto members = n_g_lambda(g, ref, Partition{n});
            std::size_t unique_sink = 0;
            for (const auto& rec : acyclic_orientations(g, ref))
                if (rec.sinks.size() == 1) ++unique_sink;
            CHECK(members.size() == unique_sink);
        });
    }
}

TEST_CASE("power-sum expansion") {
    SUBCASE("single vertex") {
        SymT expected{1, SBasis::p, {}};
        expected.add_term({1}, TPoly(1));
        CHECK(p_expansion_via_n(digraph_from_edges(1, {})) == expected);
    }
    SUBCASE("single edge") {
        SymT expected{2, SBasis::p, {}};
        expected.add_term({2}, one_plus_t.divided(2));
        expected.add_term({1, 1}, one_plus_t.divided(2));
        CHECK(p_expansion_via_n(digraph_from_edges(2, {{1, 2}})) == expected);
    }
    SUBCASE("directed 3-cycle") {
        const TPoly t_one_plus_t = one_plus_t.shifted(1);  // t(1+t)
        SymT expected{3, SBasis::p, {}};
        expected.add_term({3}, t_one_plus_t);
        expected.add_term({2, 1}, t_one_plus_t.scaled(Rat(3, 2)));
        expected.add_term({1, 1, 1}, t_one_plus_t.scaled(Rat(1, 2)));
        CHECK(p_expansion_via_n(directed_cycle(3)) == expected);
    }
    SUBCASE("non-symmetric input fails loudly") {
        CHECK_THROWS_AS(p_expansion_via_n(digraph_from_edges(3, {{1, 3}, {2, 3}})),
                        NotSymmetricError);
    }
}

TEST_CASE("power-sum expansion equals omega of the oracle") {
    std::mt19937_64 rng(17);
    std::vector<Digraph> pool;
    for (int n = 2; n <= 5; ++n) {
        pool.push_back(directed_cycle(n));
        pool.push_back(directed_path(n));
        pool.push_back(random_proper_circular_arc_digraph(n, rng));
    }
    for (const Digraph& d : pool) {
        const SymT omega_oracle =
            omega_p(m_to_p(to_sym_m(chromatic_qsym_direct(d))));
        CHECK(p_expansion_via_n(d) == omega_oracle);
    }
}

TEST_CASE("power-sum expansion holds at its exact hypothesis") {
    // Every oriented digraph with symmetric X qualifies, not only the
    // star-free ones; n = 4 includes symmetric digraphs that are not proper
    // circular arc.
    long symmetric_count = 0, non_star_free = 0;
    for (int n = 1; n <= 4; ++n) {
        for_each_oriented_digraph(n, [&](const Digraph& d) {
            const QSymT x = chromatic_qsym_direct(d);
            if (!is_symmetric(x)) return;
            ++symmetric_count;
            if (!is_proper_circular_arc(d).ok) ++non_star_free;
            CHECK(p_expansion_via_n(d) == omega_p(m_to_p(to_sym_m(x))));
        });
    }
    CHECK(symmetric_count > 0);
    CHECK(non_star_free > 0);
}

TEST_CASE("cycle power-sum coefficients factor") {
    CHECK(cycle_p_coefficient(3, {3}) == poly({0, 3, 3}));
    CHECK(cycle_p_coefficient(3, {2, 1}) == poly({0, 3, 3}));
    CHECK(cycle_p_coefficient(3, {1, 1, 1}) == poly({0, 3, 3}));
    CHECK_THROWS_AS(cycle_p_coefficient(3, {2, 2}), InvalidInputError);

    for (int n = 2; n <= 6; ++n) {
        const Digraph cn = directed_cycle(n);
        const auto lambdas = partitions_of(n);
        const auto counts = kernels::n_lambda_inv_counts(cn, lambdas,
                                                         kernels::ExecMode::serial);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            std::vector<Rat> coeffs;
            for (auto c : counts[i]) coeffs.emplace_back(Int(c));
            CHECK(cycle_p_coefficient(n, lambdas[i]) == TPoly(std::move(coeffs)));
        }
    }
}

TEST_CASE("sink generating polynomials") {
    CHECK(sink_generating_polynomial(directed_cycle(3), 1) == poly({0, 3, 3}));
    CHECK(sink_generating_polynomial(digraph_from_edges(2, {{1, 2}}), 1) == one_plus_t);
    CHECK(sink_generating_polynomial(directed_cycle(3), 3) == TPoly());
}

TEST_CASE("sink identity against the e-expansion") {
    std::mt19937_64 rng(41);
    std::vector<Digraph> pool;
    for (int n = 2; n <= 5; ++n) {
        pool.push_back(directed_cycle(n));
        pool.push_back(directed_path(n));
        pool.push_back(random_proper_circular_arc_digraph(n, rng));
    }
    for (const Digraph& d : pool) {
        const SymT e_form = m_to_e(to_sym_m(chromatic_qsym_direct(d)));
        for (int k = 1; k <= d.n; ++k) {
            TPoly lhs;
            for (const auto& [lambda, coeff] : e_form.terms)
                if (static_cast<int>(lambda.size()) == k) lhs += coeff;
            CHECK(lhs == sink_generating_polynomial(d, k));
        }
    }
}

TEST_CASE("sink-gap polynomials for cycles and paths") {
    CHECK(ao_lambda_polynomial(directed_cycle(3), {3}) == poly({0, 3, 3}));
    CHECK_THROWS_AS(ao_lambda_polynomial(digraph_from_edges(3, {{1, 3}, {2, 3}}), {2, 1}),
                    InvalidInputError);

    // Gap polynomials refine the e-expansion of the oracle.
    for (int n = 2; n <= 6; ++n) {
        const Digraph cn = directed_cycle(n);
        const SymT e_cycle = m_to_e(to_sym_m(chromatic_qsym_direct(cn)));
        const Digraph pn = directed_path(n);
        const SymT e_path = m_to_e(to_sym_m(chromatic_qsym_direct(pn)));
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(ao_lambda_polynomial(cn, lambda) == e_cycle.coeff(lambda));
            CHECK(ao_lambda_polynomial(pn, lambda) == e_path.coeff(lambda));
        }
    }
}

TEST_CASE("pinned orientations from the nine-cycle and eight-path") {
    SUBCASE("cycle orientation with sinks 2, 6, 8") {
        const Digraph c9 = directed_cycle(9);
        const Graph g = c9.underlying();
        // 1->2, 3->2, 4->3, 5->4, 5->6, 7->6, 7->8, 9->8, 1->9.
        const std::vector<std::pair<int, int>> directed = {{1, 2}, {3, 2}, {4, 3}, {5, 4},
                                                           {5, 6}, {7, 6}, {7, 8}, {9, 8},
                                                           {1, 9}};
        std::vector<bool> dirs(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto [u, v] = g.edges[i];
            const bool forward =
                std::find(directed.begin(), directed.end(), std::make_pair(u, v)) !=
                directed.end();
            dirs[i] = !forward;
        }
        REQUIRE(orientation_is_acyclic(g, dirs));
        CHECK(orientation_sinks(g, dirs) == std::vector<int>{2, 6, 8});
        CHECK(cycle_sink_gap_partition(9, {2, 6, 8}) == Partition{4, 3, 2});
        CHECK(orientation_ascents(g, dirs, c9) == 3);
    }
    SUBCASE("path orientation with sinks 2, 6, 8") {
        const Digraph p8 = directed_path(8);
        const Graph g = p8.underlying();
        // 1->2, 3->2, 4->3, 4->5, 5->6, 7->6, 7->8.
        const std::vector<std::pair<int, int>> directed = {{1, 2}, {3, 2}, {4, 3}, {4, 5},
                                                           {5, 6}, {7, 6}, {7, 8}};
        std::vector<bool> dirs(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto [u, v] = g.edges[i];
            const bool forward =
                std::find(directed.begin(), directed.end(), std::make_pair(u, v)) !=
                directed.end();
            dirs[i] = !forward;
        }
        REQUIRE(orientation_is_acyclic(g, dirs));
        CHECK(orientation_sinks(g, dirs) == std::vector<int>{2, 6, 8});
        CHECK(path_sink_gap_partition(8, {2, 6, 8}) == Partition{4, 2, 2});
        CHECK(orientation_ascents(g, dirs, p8) == 4);
    }
}

TEST_CASE("t = 1 depends only on the underlying graph") {
    for (int n = 2; n <= 4; ++n) {
        testsupport::for_each_graph(n, [&](const Graph& g) {
            std::vector<std::map<Composition, Rat, RevLexLess>> specializations;
            const std::size_t m = g.edges.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (std::size_t i = 0; i < m; ++i) {
                    auto [u, v] = g.edges[i];
                    if ((mask >> i) & 1u) std::swap(u, v);
                    edges.emplace_back(u, v);
                }
                const QSymT x = chromatic_qsym_direct(digraph_from_edges(g.n, edges));
                std::map<Composition, Rat, RevLexLess> at_one;
                for (const auto& [key, poly] : x.terms) at_one[key] = poly.evaluate(1);
                specializations.push_back(std::move(at_one));
            }
            for (const auto& s : specializations) CHECK(s == specializations.front());
        });
    }
}

TEST_CASE("small-to-large orientations match the labeled-graph convention") {
    testsupport::for_each_graph(4, [&](const Graph& g) {
        const std::vector<std::pair<int, int>> as_directed(g.edges.begin(), g.edges.end());
        const Digraph d = digraph_from_edges(g.n, as_directed);
        CHECK(chromatic_qsym_direct(d) == testsupport::labeled_graph_qsym(g));
    });
}
