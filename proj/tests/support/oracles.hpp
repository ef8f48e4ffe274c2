#pragma once

// Independent brute-force oracles used only by the test suites. Nothing here
// may call the library paths it is used to check.

#include <functional>

#include "cqsf/digraph.hpp"
#include "cqsf/qsym.hpp"
#include "cqsf/rational.hpp"

namespace cqsf::testsupport {

/// Number of proper colorings of g with colors from [k], by deletion-contraction.
Int chromatic_polynomial(const Graph& g, int k);

/// |chi_g(-1)|, the number of acyclic orientations.
Int acyclic_orientation_count(const Graph& g);

/// X of the digraph computed by enumerating ALL functions kappa : V -> [n]
/// (n^n of them), bucketing monomials by color support. Verifies along the way
/// that the result is quasisymmetric (support classes agree), then reads the
/// M-coefficients off the {1..l} supports. Practical for n <= 5.
QSymT palette_coloring_qsym(const Digraph& d);

/// X(x, t) of a labeled undirected graph with ascents read from the labels:
/// asc(kappa) = #{{i,j} in E : i < j, kappa(i) < kappa(j)}. Same palette
/// enumeration as above.
QSymT labeled_graph_qsym(const Graph& g);

/// All undirected graphs on [n], one call per graph.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

bool is_connected(const Graph& g);

}  // namespace cqsf::testsupport
