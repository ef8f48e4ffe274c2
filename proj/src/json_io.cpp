#include "cqsf/json_io.hpp"

#include <fstream>

#include "cqsf/errors.hpp"

namespace cqsf {

json digraph_to_json(const Digraph& d) {
    json j;
    j["n"] = d.n;
    json edges = json::array();
    for (auto [u, v] : d.edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Digraph digraph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidInputError("each edge must be a [u, v] pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return digraph_from_edges(n, std::move(edges));
    } catch (const json::exception& ex) {
        throw InvalidInputError(std::string("malformed digraph JSON: ") + ex.what());
    }
}

Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw InvalidInputError(std::string("cannot parse '") + path + "': " + ex.what());
    }
    return digraph_from_json(j);
}

json tpoly_to_json(const TPoly& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(rat_to_string(p.coeff(k)));
    return coeffs;
}

TPoly tpoly_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInputError("t-coefficients must be an array of strings");
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return TPoly(std::move(coeffs));
}

namespace {

template <typename Terms>
json terms_to_json(const Terms& terms) {
    json out = json::array();
    for (const auto& [key, poly] : terms) {
        json term;
        term["index"] = key;
        term["t"] = tpoly_to_json(poly);
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

json qsym_to_json(const QSymT& q) {
    json j;
    j["n"] = q.n;
    j["basis"] = basis_name(q.basis);
    j["terms"] = terms_to_json(q.terms);
    return j;
}

json sym_to_json(const SymT& s) {
    json j;
    j["n"] = s.n;
    j["basis"] = basis_name(s.basis);
    j["terms"] = terms_to_json(s.terms);
    return j;
}

namespace {

template <typename Poly>
void fill_terms(Poly& poly, const json& j) {
    for (const auto& term : j.at("terms")) {
        const auto key = term.at("index").get<std::vector<int>>();
        poly.add_term(key, tpoly_from_json(term.at("t")));
    }
}

}  // namespace

QSymT qsym_from_json(const json& j) {
    try {
        const std::string basis = j.at("basis").get<std::string>();
        QSymT q{j.at("n").get<int>(), QBasis::M, {}};
        if (basis == "M")
            q.basis = QBasis::M;
        else if (basis == "F")
            q.basis = QBasis::F;
        else
            throw InvalidInputError("expected quasisymmetric basis M or F, got '" + basis + "'");
        fill_terms(q, j);
        return q;
    } catch (const json::exception& ex) {
        throw InvalidInputError(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

SymT sym_from_json(const json& j) {
    try {
        const std::string basis = j.at("basis").get<std::string>();
        SymT s{j.at("n").get<int>(), SBasis::m, {}};
        if (basis == "m")
            s.basis = SBasis::m;
        else if (basis == "e")
            s.basis = SBasis::e;
        else if (basis == "p")
            s.basis = SBasis::p;
        else
            throw InvalidInputError("expected symmetric basis m, e or p, got '" + basis + "'");
        fill_terms(s, j);
        return s;
    } catch (const json::exception& ex) {
        throw InvalidInputError(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

std::variant<QSymT, SymT> poly_from_json(const json& j) {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis == "M" || basis == "F") return qsym_from_json(j);
    return sym_from_json(j);
}

}  // namespace cqsf
