#include "cqsf/kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cqsf/errors.hpp"
#include "cqsf/orientation.hpp"

namespace cqsf::kernels {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// ---------------------------------------------------------------------------
// Coloring sweep
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> color_sweep_one(const Digraph& d, const Graph& g,
                                           const Composition& content) {
    std::vector<std::uint64_t> counts(d.edges.size() + 1, 0);
    const int n = d.n;
    if (weight(content) != n) throw InvalidInputError("content must be a composition of n");

    std::vector<int> word;
    word.reserve(n);
    for (std::size_t c = 0; c < content.size(); ++c)
        word.insert(word.end(), content[c], static_cast<int>(c) + 1);
    if (n == 0) {
        counts[0] = 1;  // the empty coloring
        return counts;
    }

    do {
        bool proper = true;
        for (auto [u, v] : g.edges)
            if (word[u - 1] == word[v - 1]) {
                proper = false;
                break;
            }
        if (!proper) continue;
        int asc = 0;
        for (auto [u, v] : d.edges)
            if (word[u - 1] < word[v - 1]) ++asc;
        counts[asc]++;
    } while (std::next_permutation(word.begin(), word.end()));
    return counts;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> coloring_ascent_counts(
    const Digraph& d, const std::vector<Composition>& contents, ExecMode mode, int jobs) {
    const Graph g = d.underlying();
    std::vector<std::vector<std::uint64_t>> result(contents.size());
    if (mode == ExecMode::serial) {
        for (std::size_t i = 0; i < contents.size(); ++i)
            result[i] = color_sweep_one(d, g, contents[i]);
        return result;
    }
    const int threads = resolve_jobs(jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(contents.size()); ++i)
        result[i] = color_sweep_one(d, g, contents[i]);
    return result;
}

// ---------------------------------------------------------------------------
// Permutation sweeps
// ---------------------------------------------------------------------------

namespace {

struct PermScratch {
    std::vector<int> pos;             // pos[x-1] = 1-based position of letter x
    std::vector<int> rank;            // rank[x-1]
    std::vector<int> last_nb_pos;     // per position (1-based), 0 if none
};

// Fills scratch and returns the G-descent bitmask (bit i-1 = descent at i).
std::uint64_t analyze_word(const std::vector<int>& word, const Graph& g, PermScratch& s) {
    const int n = static_cast<int>(word.size());
    std::uint64_t prefix = 0;
    for (int j = 1; j <= n; ++j) {
        const int x = word[j - 1];
        s.pos[x - 1] = j;
        std::uint64_t nb = g.neighbors_mask(x) & prefix;
        int best_rank = 0;
        int best_pos = 0;
        while (nb) {
            const int y = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            best_rank = std::max(best_rank, s.rank[y - 1]);
            best_pos = std::max(best_pos, s.pos[y - 1]);
        }
        s.rank[x - 1] = best_rank + 1;
        s.last_nb_pos[j - 1] = best_pos;
        prefix |= std::uint64_t(1) << (x - 1);
    }
    std::uint64_t desc = 0;
    for (int i = 1; i < n; ++i) {
        const int a = word[i - 1], b = word[i];
        const int ra = s.rank[a - 1], rb = s.rank[b - 1];
        if (ra > rb || (ra == rb && a > b)) desc |= std::uint64_t(1) << (i - 1);
    }
    return desc;
}

int word_inversions(const Digraph& d, const PermScratch& s) {
    int inv = 0;
    for (auto [u, v] : d.edges)
        if (s.pos[v - 1] < s.pos[u - 1]) ++inv;
    return inv;
}

// Runs fn(word, scratch, descmask) for every permutation of [n] whose first
// letter is `first`, in lexicographic order of the word.
template <typename Fn>
void sweep_with_first(int n, int first, const Graph& g, Fn&& fn) {
    std::vector<int> word;
    word.reserve(n);
    word.push_back(first);
    for (int x = 1; x <= n; ++x)
        if (x != first) word.push_back(x);
    PermScratch scratch;
    scratch.pos.assign(n, 0);
    scratch.rank.assign(n, 0);
    scratch.last_nb_pos.assign(n, 0);
    do {
        const std::uint64_t desc = analyze_word(word, g, scratch);
        fn(word, scratch, desc);
    } while (std::next_permutation(word.begin() + 1, word.end()));
}

void merge_matrix(std::vector<std::vector<std::uint64_t>>& into,
                  const std::vector<std::vector<std::uint64_t>>& from) {
    for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < from[i].size(); ++j) into[i][j] += from[i][j];
}

}  // namespace

std::vector<std::vector<std::uint64_t>> descent_inv_counts(const Digraph& d, ExecMode mode,
                                                           int jobs) {
    const int n = d.n;
    const Graph g = d.underlying();
    const std::size_t masks = n >= 1 ? (std::size_t(1) << (n - 1)) : 1;
    const std::size_t width = d.edges.size() + 1;
    std::vector<std::vector<std::uint64_t>> counts(masks,
                                                   std::vector<std::uint64_t>(width, 0));
    if (n == 0) {
        counts[0][0] = 1;
        return counts;
    }

    std::vector<std::vector<std::vector<std::uint64_t>>> chunks(
        n, std::vector<std::vector<std::uint64_t>>(masks, std::vector<std::uint64_t>(width, 0)));
    const auto run_chunk = [&](int first) {
        auto& local = chunks[first - 1];
        sweep_with_first(n, first, g,
                         [&](const std::vector<int>&, const PermScratch& s, std::uint64_t desc) {
                             local[desc][word_inversions(d, s)]++;
                         });
    };
    if (mode == ExecMode::serial) {
        for (int first = 1; first <= n; ++first) run_chunk(first);
    } else {
        const int threads = resolve_jobs(jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int first = 1; first <= n; ++first) run_chunk(first);
    }
    for (const auto& local : chunks) merge_matrix(counts, local);
    return counts;
}

namespace {

struct BlockPlan {
    // Per lambda: 1-based block start/end positions and the interior descent mask.
    std::vector<std::pair<int, int>> blocks;
    std::uint64_t interior_mask = 0;
};

BlockPlan plan_blocks(const Partition& lambda) {
    BlockPlan plan;
    int cum = 0;
    for (int part : lambda) {
        const int s = cum + 1;
        const int e = cum + part;
        plan.blocks.emplace_back(s, e);
        for (int i = s; i <= e - 1; ++i) plan.interior_mask |= std::uint64_t(1) << (i - 1);
        cum = e;
    }
    return plan;
}

bool blocks_admit(const BlockPlan& plan, const PermScratch& s, std::uint64_t desc) {
    if (desc & plan.interior_mask) return false;
    for (auto [start, end] : plan.blocks)
        for (int j = start + 1; j <= end; ++j)
            if (s.last_nb_pos[j - 1] < start) return false;
    return true;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> n_lambda_inv_counts(
    const Digraph& d, const std::vector<Partition>& lambdas, ExecMode mode, int jobs) {
    const int n = d.n;
    const Graph g = d.underlying();
    const std::size_t width = d.edges.size() + 1;
    std::vector<BlockPlan> plans;
    plans.reserve(lambdas.size());
    for (const auto& lambda : lambdas) {
        require_partition_of(lambda, n);
        plans.push_back(plan_blocks(lambda));
    }
    std::vector<std::vector<std::uint64_t>> counts(lambdas.size(),
                                                   std::vector<std::uint64_t>(width, 0));
    if (n == 0) return counts;

    std::vector<std::vector<std::vector<std::uint64_t>>> chunks(
        n, std::vector<std::vector<std::uint64_t>>(lambdas.size(),
                                                   std::vector<std::uint64_t>(width, 0)));
    const auto run_chunk = [&](int first) {
        auto& local = chunks[first - 1];
        sweep_with_first(n, first, g,
                         [&](const std::vector<int>&, const PermScratch& s, std::uint64_t desc) {
                             int inv = -1;
                             for (std::size_t j = 0; j < plans.size(); ++j) {
                                 if (!blocks_admit(plans[j], s, desc)) continue;
                                 if (inv < 0) inv = word_inversions(d, s);
                                 local[j][inv]++;
                             }
                         });
    };
    if (mode == ExecMode::serial) {
        for (int first = 1; first <= n; ++first) run_chunk(first);
    } else {
        const int threads = resolve_jobs(jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int first = 1; first <= n; ++first) run_chunk(first);
    }
    for (const auto& local : chunks) merge_matrix(counts, local);
    return counts;
}

// ---------------------------------------------------------------------------
// Orientation sweeps
// ---------------------------------------------------------------------------

namespace {

struct OrientationScratch {
    std::vector<int> indeg;
    std::vector<int> outdeg;
    std::vector<std::uint64_t> succ;
    std::vector<int> queue;
    std::vector<int> sinks;
};

// Decodes the direction mask; returns false if the orientation is cyclic,
// otherwise leaves sinks/asc in the scratch outputs.
bool decode_orientation(const Graph& g, const Digraph& ref, std::uint64_t mask,
                        OrientationScratch& s, int& asc_out) {
    const int n = g.n;
    s.indeg.assign(n, 0);
    s.outdeg.assign(n, 0);
    s.succ.assign(std::max(n, 1), 0);
    int asc = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        if ((mask >> i) & 1u) std::swap(u, v);
        s.succ[u - 1] |= std::uint64_t(1) << (v - 1);
        s.indeg[v - 1]++;
        s.outdeg[u - 1]++;
        if (ref.has_edge(u, v)) ++asc;
    }
    s.queue.clear();
    for (int v = 1; v <= n; ++v)
        if (s.indeg[v - 1] == 0) s.queue.push_back(v);
    int seen = 0;
    while (!s.queue.empty()) {
        const int u = s.queue.back();
        s.queue.pop_back();
        ++seen;
        std::uint64_t succ = s.succ[u - 1];
        while (succ) {
            const int v = std::countr_zero(succ) + 1;
            succ &= succ - 1;
            if (--s.indeg[v - 1] == 0) s.queue.push_back(v);
        }
    }
    if (seen != n) return false;
    s.sinks.clear();
    for (int v = 1; v <= n; ++v)
        if (s.outdeg[v - 1] == 0) s.sinks.push_back(v);
    asc_out = asc;
    return true;
}

void check_orientation_inputs(const Graph& g, const Digraph& reference) {
    if (!(reference.underlying() == g))
        throw InvalidInputError("reference digraph does not orient the given graph");
    if (g.edges.size() > 20) throw BudgetError("orientation sweep capped at |E| <= 20");
}

}  // namespace

std::vector<std::vector<std::uint64_t>> sink_ascent_counts(const Graph& g,
                                                           const Digraph& reference,
                                                           ExecMode mode, int jobs) {
    check_orientation_inputs(g, reference);
    const std::size_t m = g.edges.size();
    const std::uint64_t total = std::uint64_t(1) << m;
    std::vector<std::vector<std::uint64_t>> counts(g.n + 1,
                                                   std::vector<std::uint64_t>(m + 1, 0));

    const int threads = mode == ExecMode::serial ? 1 : resolve_jobs(jobs);
    const std::uint64_t block = std::max<std::uint64_t>(1, total / std::max(threads * 8, 1));
    const int nblocks = static_cast<int>((total + block - 1) / block);
    std::vector<std::vector<std::vector<std::uint64_t>>> partial(
        nblocks,
        std::vector<std::vector<std::uint64_t>>(g.n + 1, std::vector<std::uint64_t>(m + 1, 0)));

    const auto run_block = [&](int b) {
        OrientationScratch scratch;
        auto& local = partial[b];
        const std::uint64_t lo = b * block;
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + block);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            int asc = 0;
            if (!decode_orientation(g, reference, mask, scratch, asc)) continue;
            local[scratch.sinks.size()][asc]++;
        }
    };
    if (mode == ExecMode::serial) {
        for (int b = 0; b < nblocks; ++b) run_block(b);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int b = 0; b < nblocks; ++b) run_block(b);
    }
    for (const auto& local : partial) merge_matrix(counts, local);
    return counts;
}

std::map<Partition, std::vector<std::uint64_t>, RevLexLess> gap_ascent_counts(
    const Graph& g, const Digraph& reference, bool cyclic, ExecMode mode, int jobs) {
    check_orientation_inputs(g, reference);
    const std::size_t m = g.edges.size();
    const std::uint64_t total = std::uint64_t(1) << m;

    const int threads = mode == ExecMode::serial ? 1 : resolve_jobs(jobs);
    const std::uint64_t block = std::max<std::uint64_t>(1, total / std::max(threads * 8, 1));
    const int nblocks = static_cast<int>((total + block - 1) / block);
    std::vector<std::map<Partition, std::vector<std::uint64_t>, RevLexLess>> partial(nblocks);

    const auto run_block = [&](int b) {
        OrientationScratch scratch;
        auto& local = partial[b];
        const std::uint64_t lo = b * block;
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + block);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            int asc = 0;
            if (!decode_orientation(g, reference, mask, scratch, asc)) continue;
            const Partition key = cyclic ? cycle_sink_gap_partition(g.n, scratch.sinks)
                                         : path_sink_gap_partition(g.n, scratch.sinks);
            auto& row = local[key];
            if (row.empty()) row.assign(m + 1, 0);
            row[asc]++;
        }
    };
    if (mode == ExecMode::serial) {
        for (int b = 0; b < nblocks; ++b) run_block(b);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int b = 0; b < nblocks; ++b) run_block(b);
    }

    std::map<Partition, std::vector<std::uint64_t>, RevLexLess> counts;
    for (const auto& local : partial)
        for (const auto& [key, row] : local) {
            auto& into = counts[key];
            if (into.empty()) into.assign(m + 1, 0);
            for (std::size_t i = 0; i < row.size(); ++i) into[i] += row[i];
        }
    return counts;
}

}  // namespace cqsf::kernels
