#include "cqsf/orientation.hpp"

#include <algorithm>
#include <bit>

#include "cqsf/errors.hpp"

namespace cqsf {

std::vector<std::pair<int, int>> OrientationRecord::directed_edges(const Graph& g) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (directions[i]) std::swap(u, v);
        out.emplace_back(u, v);
    }
    return out;
}

bool orientation_is_acyclic(const Graph& g, const std::vector<bool>& directions) {
    std::vector<int> indeg(g.n, 0);
    std::vector<std::uint64_t> succ(std::max(g.n, 1), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (directions[i]) std::swap(u, v);
        succ[u - 1] |= std::uint64_t(1) << (v - 1);
        indeg[v - 1]++;
    }
    std::vector<int> queue;
    for (int v = 1; v <= g.n; ++v)
        if (indeg[v - 1] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        ++seen;
        std::uint64_t s = succ[u - 1];
        while (s) {
            const int v = std::countr_zero(s) + 1;
            s &= s - 1;
            if (--indeg[v - 1] == 0) queue.push_back(v);
        }
    }
    return seen == g.n;
}

std::vector<int> orientation_sinks(const Graph& g, const std::vector<bool>& directions) {
    std::vector<int> outdeg(g.n, 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (directions[i]) std::swap(u, v);
        outdeg[u - 1]++;
    }
    std::vector<int> sinks;
    for (int v = 1; v <= g.n; ++v)
        if (outdeg[v - 1] == 0) sinks.push_back(v);
    return sinks;
}

int orientation_ascents(const Graph& g, const std::vector<bool>& directions,
                        const Digraph& reference) {
    int asc = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if (directions[i]) std::swap(u, v);
        if (reference.has_edge(u, v)) ++asc;
    }
    return asc;
}

std::vector<OrientationRecord> acyclic_orientations(const Graph& g, const Digraph& reference) {
    if (!(reference.underlying() == g))
        throw InvalidInputError("reference digraph does not orient the given graph");
    const std::size_t m = g.edges.size();
    if (m > 20) throw BudgetError("orientation sweep capped at |E| <= 20");

    std::vector<OrientationRecord> records;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<bool> dirs(m);
        for (std::size_t i = 0; i < m; ++i) dirs[i] = (mask >> i) & 1u;
        if (!orientation_is_acyclic(g, dirs)) continue;
        OrientationRecord rec;
        rec.directions = std::move(dirs);
        rec.sinks = orientation_sinks(g, rec.directions);
        rec.asc = orientation_ascents(g, rec.directions, reference);
        records.push_back(std::move(rec));
    }
    return records;
}

Partition cycle_sink_gap_partition(int n, const std::vector<int>& sinks) {
    if (sinks.empty()) throw InvalidInputError("acyclic cycle orientation must have a sink");
    const int k = static_cast<int>(sinks.size());
    Partition gaps;
    for (int b = 0; b < k; ++b) {
        const int cur = sinks[b];
        const int next = sinks[(b + 1) % k];
        const int between = (next - cur - 1 + n) % n;  // n - 1 when k == 1
        gaps.push_back((k == 1 ? n - 1 : between) + 1);
    }
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    return gaps;
}

Partition path_sink_gap_partition(int n, const std::vector<int>& sinks) {
    if (sinks.empty()) throw InvalidInputError("acyclic path orientation must have a sink");
    const int k = static_cast<int>(sinks.size());
    Partition gaps;
    for (int b = 0; b + 1 < k; ++b) gaps.push_back(sinks[b + 1] - sinks[b] - 1 + 1);
    gaps.push_back((sinks[0] - 1) + (n - sinks[k - 1]) + 1);  // merged end segments
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    return gaps;
}

}  // namespace cqsf
