#pragma once

#include <utility>
#include <vector>

#include "cqsf/digraph.hpp"
#include "cqsf/kernels.hpp"
#include "cqsf/permutation.hpp"
#include "cqsf/qsym.hpp"

namespace cqsf {

struct SweepOptions {
    int jobs = 0;              // 0 = let OpenMP decide
    int factorial_budget = 10; // permutation sweeps refuse n beyond this
    kernels::ExecMode mode = kernels::ExecMode::parallel;
};

// ---------------------------------------------------------------------------
// The coloring oracle
// ---------------------------------------------------------------------------

/// A proper coloring together with its color content: color i is used
/// content[i-1] times, colors are 1..l.
struct ColoringClass {
    Composition content;
    std::vector<int> colors;  // colors[v-1] = color of vertex v
};

/// Throws InvalidInputError unless the coloring is proper on d's underlying
/// graph and its color multiset matches content.
void validate_coloring(const Digraph& d, const ColoringClass& c);

/// Number of directed edges (u, v) with colors[u-1] < colors[v-1].
int coloring_ascents(const Digraph& d, const std::vector<int>& colors);

/// X of the digraph in the monomial quasisymmetric basis: the coefficient of
/// M_alpha is the sum of t^{asc} over proper colorings with content alpha.
/// This is the system's brute-force reference for everything else.
QSymT chromatic_qsym_direct(const Digraph& d, const SweepOptions& opts = {});

// ---------------------------------------------------------------------------
// Permutation statistics
// ---------------------------------------------------------------------------

/// Number of directed edges (i, j) with j appearing before i in sigma.
int inv_digraph(const Digraph& d, const Permutation& sigma);

struct GDescentData {
    Permutation sigma;
    std::vector<int> rank;      // rank[x-1] = graph rank of letter x
    std::vector<int> descents;  // positions i in [n-1], ascending
};

/// Graph ranks by the longest-adjacent-subword dynamic program, and the
/// G-descent set: position i is a descent when the rank drops from sigma_i to
/// sigma_{i+1}, or the ranks tie and sigma_i > sigma_{i+1}.
GDescentData g_descent_set(const Graph& g, const Permutation& sigma);

// ---------------------------------------------------------------------------
// F-basis expansion
// ---------------------------------------------------------------------------

/// omega X as sum over sigma of F_{n, DES_G(sigma)} t^{inv(sigma)}.
QSymT omega_x_f_expansion(const Digraph& d, const SweepOptions& opts = {});

/// X in the M basis, computed through the permutation formula (omega, then
/// expansion of F into M). Must agree with chromatic_qsym_direct exactly.
QSymT chromatic_qsym_via_f(const Digraph& d, const SweepOptions& opts = {});

// ---------------------------------------------------------------------------
// N_{G,lambda} and the power-sum expansion
// ---------------------------------------------------------------------------

/// Membership: splitting sigma into contiguous blocks of sizes lambda_1, ...,
/// every non-initial block letter has a G-neighbor earlier in its block, and
/// no G-descent of sigma lies strictly inside a block.
bool n_lambda_contains(const Graph& g, const Permutation& sigma, const Partition& lambda);

/// All (sigma, inv) with sigma in N_{G,lambda}, in lexicographic word order.
/// G is d's underlying graph; lambda must be a partition of d.n.
std::vector<std::pair<Permutation, int>> n_g_lambda(const Graph& g, const Digraph& d,
                                                    const Partition& lambda,
                                                    const SweepOptions& opts = {});

/// omega X in the power-sum basis: the coefficient of p_lambda is
/// z_lambda^{-1} sum over sigma in N_{G,lambda} of t^{inv(sigma)}.
/// Requires X symmetric; throws NotSymmetricError otherwise.
SymT p_expansion_via_n(const Digraph& d, const SweepOptions& opts = {});

/// Closed form of the N_{C_n,lambda} inversion polynomial for the directed
/// cycle: n t [n-1]_t when lambda = (n), and n t A_{k-1}(t) prod [lambda_i]_t
/// for k = l(lambda) >= 2.
TPoly cycle_p_coefficient(int n, const Partition& lambda);

// ---------------------------------------------------------------------------
// Acyclic-orientation statistics
// ---------------------------------------------------------------------------

/// Sum of t^{asc} over acyclic orientations of d's underlying graph with
/// exactly k sinks.
TPoly sink_generating_polynomial(const Digraph& d, int k, const SweepOptions& opts = {});

/// Sum of t^{asc} over acyclic orientations whose sink-gap partition equals
/// lambda. d must be the directed cycle (cyclic gaps) or the directed path
/// (interior gaps plus the merged end gap); anything else is invalid input.
TPoly ao_lambda_polynomial(const Digraph& d, const Partition& lambda,
                           const SweepOptions& opts = {});

}  // namespace cqsf
