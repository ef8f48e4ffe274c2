#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cqsf/cqsf.hpp"
#include "cqsf/errors.hpp"
#include "cqsf/json_io.hpp"

using namespace cqsf;

TEST_CASE("digraph JSON round trip") {
    const Digraph d = directed_cycle(3);
    const json j = digraph_to_json(d);
    CHECK(j["n"] == 3);
    CHECK(j["edges"].size() == 3);
    CHECK(digraph_from_json(j) == d);

    CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"n": 2})")), InvalidInputError);
    CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"n": 2, "edges": [[1]]})")),
                    InvalidInputError);
    CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"n": 2, "edges": [[1, 1]]})")),
                    InvalidInputError);
}

TEST_CASE("polynomial JSON round trip") {
    const QSymT x = chromatic_qsym_direct(directed_cycle(4));
    CHECK(qsym_from_json(qsym_to_json(x)) == x);

    const QSymT f = omega_x_f_expansion(directed_cycle(4));
    CHECK(qsym_from_json(qsym_to_json(f)) == f);

    const SymT e = m_to_e(to_sym_m(x));
    CHECK(sym_from_json(sym_to_json(e)) == e);
    const SymT p = p_expansion_via_n(directed_cycle(4));
    CHECK(sym_from_json(sym_to_json(p)) == p);

    const auto var = poly_from_json(sym_to_json(p));
    CHECK(std::holds_alternative<SymT>(var));

    CHECK_THROWS_AS(
        sym_from_json(json::parse(R"({"n": 2, "basis": "q", "terms": []})")),
        InvalidInputError);
}

TEST_CASE("negative and fractional coefficients round trip") {
    SymT s{3, SBasis::e, {}};
    s.add_term({2, 1}, TPoly(std::vector<Rat>{Rat(-1, 3), Rat(0), Rat(7, 2)}));
    s.add_term({3}, TPoly(Rat(-5)));
    const json j = sym_to_json(s);
    CHECK(j["terms"][0]["t"][0] == "-5");
    CHECK(j["terms"][1]["t"] == json::array({"-1/3", "0", "7/2"}));
    CHECK(sym_from_json(j) == s);
}

TEST_CASE("rationals serialize as exact strings") {
    const SymT p = p_expansion_via_n(digraph_from_edges(2, {{1, 2}}));
    const json j = sym_to_json(p);
    // (1+t)/2 on both p_2 and p_11.
    CHECK(j["terms"][0]["t"][0] == "1/2");
    CHECK(j["terms"][0]["t"][1] == "1/2");
}

TEST_CASE("serialization is byte-deterministic") {
    const QSymT x = chromatic_qsym_direct(family_digraph(FamilyKind::circular, 5, 2));
    const QSymT y = chromatic_qsym_direct(family_digraph(FamilyKind::circular, 5, 2));
    CHECK(qsym_to_json(x).dump() == qsym_to_json(y).dump());

    // Term order in the dump follows revlex on the index.
    const json j = qsym_to_json(x);
    std::vector<std::vector<int>> keys;
    for (const auto& term : j["terms"]) keys.push_back(term["index"].get<std::vector<int>>());
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) CHECK(revlex_before(keys[i], keys[i + 1]));
}
