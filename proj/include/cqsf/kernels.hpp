#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cqsf/digraph.hpp"
#include "cqsf/partition.hpp"

// Data-parallel sweep kernels. Every kernel exists in two builds selected by
// ExecMode: a plain serial loop (the reference implementation) and an OpenMP
// version. Tallies are exact 64-bit counts, so the parallel reductions are
// order-independent and results never depend on the worker count.

namespace cqsf::kernels {

enum class ExecMode { serial, parallel };

/// Threads to use: jobs if positive, otherwise the OpenMP default.
int resolve_jobs(int jobs);

/// For each composition `contents[i]` of d.n: counts[i][a] = number of proper
/// colorings of d using color c exactly contents[i][c-1] times, with exactly
/// `a` ascending directed edges.
std::vector<std::vector<std::uint64_t>> coloring_ascent_counts(
    const Digraph& d, const std::vector<Composition>& contents, ExecMode mode, int jobs = 0);

/// Sweep of all n! permutations: counts[mask][i] = number of sigma whose
/// G-descent set (as a bitmask over positions 1..n-1) is `mask` and whose
/// digraph inversion count is i. G is d's underlying graph.
std::vector<std::vector<std::uint64_t>> descent_inv_counts(const Digraph& d, ExecMode mode,
                                                           int jobs = 0);

/// counts[j][i] = number of sigma in N_{G,lambdas[j]} with inversion count i,
/// out of one sweep of all n! permutations.
std::vector<std::vector<std::uint64_t>> n_lambda_inv_counts(
    const Digraph& d, const std::vector<Partition>& lambdas, ExecMode mode, int jobs = 0);

/// Acyclic-orientation sweep of g: counts[k][a] = number of acyclic
/// orientations with k sinks and ascent count a relative to `reference`.
std::vector<std::vector<std::uint64_t>> sink_ascent_counts(const Graph& g,
                                                           const Digraph& reference,
                                                           ExecMode mode, int jobs = 0);

/// Acyclic-orientation sweep classified by sink-gap partition (cyclic gaps
/// when `cyclic`, merged-end path gaps otherwise). Keys are partitions of n.
std::map<Partition, std::vector<std::uint64_t>, RevLexLess> gap_ascent_counts(
    const Graph& g, const Digraph& reference, bool cyclic, ExecMode mode, int jobs = 0);

}  // namespace cqsf::kernels
