#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "cqsf/digraph.hpp"
#include "cqsf/qsym.hpp"

namespace cqsf {

using json = nlohmann::ordered_json;

// Digraph schema: {"n": <int>, "edges": [[u, v], ...]} with 1-based vertices.
json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const json& j);
Digraph load_digraph(const std::string& path);

// Polynomial schema:
//   {"n": <int>, "basis": "M"|"F"|"m"|"e"|"p",
//    "terms": [{"index": [...], "t": ["<rat>", ...]}, ...]}
// "index" is a composition (M), descent set (F), or partition (m/e/p);
// "t" lists exact rationals as strings by ascending t-degree. Terms are
// emitted in revlex key order, so serialization is byte-deterministic.
json qsym_to_json(const QSymT& q);
json sym_to_json(const SymT& s);
QSymT qsym_from_json(const json& j);
SymT sym_from_json(const json& j);
std::variant<QSymT, SymT> poly_from_json(const json& j);

json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const json& j);

}  // namespace cqsf
