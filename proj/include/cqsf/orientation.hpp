#pragma once

#include <cstdint>
#include <vector>

#include "cqsf/digraph.hpp"
#include "cqsf/partition.hpp"

namespace cqsf {

/// One acyclic orientation of an undirected graph, together with its sink set
/// and its ascent count relative to a reference digraph on the same graph.
struct OrientationRecord {
    /// directions[i] = false orients edges[i] = (u, v) as u -> v, true as v -> u.
    std::vector<bool> directions;
    std::vector<int> sinks;  // vertices with out-degree 0, ascending
    int asc = 0;             // edges oriented as in the reference digraph

    std::vector<std::pair<int, int>> directed_edges(const Graph& g) const;
};

/// All acyclic orientations of g, ordered by direction bitmask (edge i is bit
/// i of the mask). `reference` must have g as its underlying graph. The sweep
/// is the direct 2^|E| one; |E| > 20 raises BudgetError.
std::vector<OrientationRecord> acyclic_orientations(const Graph& g, const Digraph& reference);

bool orientation_is_acyclic(const Graph& g, const std::vector<bool>& directions);
std::vector<int> orientation_sinks(const Graph& g, const std::vector<bool>& directions);
int orientation_ascents(const Graph& g, const std::vector<bool>& directions,
                        const Digraph& reference);

/// Sink-gap partition of an orientation of the cycle 1-2-...-n-1: for sinks at
/// cyclic positions s_1 < ... < s_k, the multiset of vertex counts strictly
/// between consecutive sinks (cyclically), each + 1, sorted decreasingly.
Partition cycle_sink_gap_partition(int n, const std::vector<int>& sinks);

/// Path variant for 1-2-...-n: the k-1 interior gaps plus one merged end gap
/// (vertices before the first sink and after the last), each + 1.
Partition path_sink_gap_partition(int n, const std::vector<int>& sinks);

}  // namespace cqsf
