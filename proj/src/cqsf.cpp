#include "cqsf/cqsf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cqsf/errors.hpp"
#include "cqsf/orientation.hpp"

namespace cqsf {

namespace {

void check_factorial_budget(int n, const SweepOptions& opts, const char* what) {
    if (n > opts.factorial_budget) {
        std::ostringstream os;
        os << what << " on n = " << n << " exceeds the factorial budget "
           << opts.factorial_budget;
        throw BudgetError(os.str());
    }
}

TPoly poly_from_counts(const std::vector<std::uint64_t>& counts) {
    std::vector<Rat> coeffs;
    coeffs.reserve(counts.size());
    for (const auto c : counts) coeffs.emplace_back(Int(c));
    return TPoly(std::move(coeffs));
}

}  // namespace

// ---------------------------------------------------------------------------
// Coloring oracle
// ---------------------------------------------------------------------------

void validate_coloring(const Digraph& d, const ColoringClass& c) {
    if (static_cast<int>(c.colors.size()) != d.n)
        throw InvalidInputError("coloring must assign a color to every vertex");
    if (!is_composition(c.content) || weight(c.content) != d.n)
        throw InvalidInputError("content must be a composition of n");
    const int l = static_cast<int>(c.content.size());
    std::vector<int> used(l, 0);
    for (int color : c.colors) {
        if (color < 1 || color > l) throw InvalidInputError("color out of range [1, l]");
        used[color - 1]++;
    }
    for (int i = 0; i < l; ++i)
        if (used[i] != c.content[i])
            throw InvalidInputError("color multiset does not match the content");
    const Graph g = d.underlying();
    for (auto [u, v] : g.edges)
        if (c.colors[u - 1] == c.colors[v - 1])
            throw InvalidInputError("coloring is not proper");
}

int coloring_ascents(const Digraph& d, const std::vector<int>& colors) {
    int asc = 0;
    for (auto [u, v] : d.edges)
        if (colors[u - 1] < colors[v - 1]) ++asc;
    return asc;
}

QSymT chromatic_qsym_direct(const Digraph& d, const SweepOptions& opts) {
    check_factorial_budget(d.n, opts, "coloring sweep");
    const auto contents = compositions_of(d.n);
    const auto counts = kernels::coloring_ascent_counts(d, contents, opts.mode, opts.jobs);
    QSymT out{d.n, QBasis::M, {}};
    for (std::size_t i = 0; i < contents.size(); ++i)
        out.add_term(contents[i], poly_from_counts(counts[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Permutation statistics
// ---------------------------------------------------------------------------

int inv_digraph(const Digraph& d, const Permutation& sigma) {
    if (sigma.size() != d.n)
        throw InvalidInputError("permutation size does not match the digraph");
    int inv = 0;
    for (auto [u, v] : d.edges)
        if (sigma.position(v) < sigma.position(u)) ++inv;
    return inv;
}

GDescentData g_descent_set(const Graph& g, const Permutation& sigma) {
    if (sigma.size() != g.n)
        throw InvalidInputError("permutation size does not match the graph");
    const int n = g.n;
    GDescentData data;
    data.sigma = sigma;
    data.rank.assign(n, 0);
    for (int j = 1; j <= n; ++j) {
        const int x = sigma.at(j);
        int best = 0;
        for (int i = 1; i < j; ++i) {
            const int y = sigma.at(i);
            if (g.adjacent(x, y)) best = std::max(best, data.rank[y - 1]);
        }
        data.rank[x - 1] = best + 1;
    }
    for (int i = 1; i < n; ++i) {
        const int a = sigma.at(i), b = sigma.at(i + 1);
        const int ra = data.rank[a - 1], rb = data.rank[b - 1];
        if (ra > rb || (ra == rb && a > b)) data.descents.push_back(i);
    }
    return data;
}

// ---------------------------------------------------------------------------
// F-basis expansion
// ---------------------------------------------------------------------------

QSymT omega_x_f_expansion(const Digraph& d, const SweepOptions& opts) {
    check_factorial_budget(d.n, opts, "permutation sweep");
    const auto counts = kernels::descent_inv_counts(d, opts.mode, opts.jobs);
    QSymT out{d.n, QBasis::F, {}};
    for (std::size_t mask = 0; mask < counts.size(); ++mask) {
        TPoly poly = poly_from_counts(counts[mask]);
        if (poly.is_zero()) continue;
        std::vector<int> subset;
        for (int i = 1; i < std::max(d.n, 1); ++i)
            if ((mask >> (i - 1)) & 1u) subset.push_back(i);
        out.add_term(subset, poly);
    }
    return out;
}

QSymT chromatic_qsym_via_f(const Digraph& d, const SweepOptions& opts) {
    return f_to_m(omega_f(omega_x_f_expansion(d, opts)));
}

// ---------------------------------------------------------------------------
// N_{G,lambda}
// ---------------------------------------------------------------------------

bool n_lambda_contains(const Graph& g, const Permutation& sigma, const Partition& lambda) {
    require_partition_of(lambda, g.n);
    if (sigma.size() != g.n)
        throw InvalidInputError("permutation size does not match the graph");
    const GDescentData data = g_descent_set(g, sigma);
    std::uint64_t desc = 0;
    for (int i : data.descents) desc |= std::uint64_t(1) << (i - 1);

    int cum = 0;
    for (int part : lambda) {
        const int start = cum + 1;
        const int end = cum + part;
        for (int i = start; i <= end - 1; ++i)
            if ((desc >> (i - 1)) & 1u) return false;
        for (int j = start + 1; j <= end; ++j) {
            const int x = sigma.at(j);
            bool has_earlier_neighbor = false;
            for (int i = start; i < j; ++i)
                if (g.adjacent(x, sigma.at(i))) {
                    has_earlier_neighbor = true;
                    break;
                }
            if (!has_earlier_neighbor) return false;  // x is G-isolated in its block
        }
        cum = end;
    }
    return true;
}

std::vector<std::pair<Permutation, int>> n_g_lambda(const Graph& g, const Digraph& d,
                                                    const Partition& lambda,
                                                    const SweepOptions& opts) {
    if (!(d.underlying() == g))
        throw InvalidInputError("digraph does not orient the given graph");
    require_partition_of(lambda, g.n);
    check_factorial_budget(g.n, opts, "permutation enumeration");

    std::vector<std::pair<Permutation, int>> out;
    std::vector<int> word(g.n);
    std::iota(word.begin(), word.end(), 1);
    if (g.n == 0) return out;
    do {
        Permutation sigma(word);
        if (n_lambda_contains(g, sigma, lambda))
            out.emplace_back(sigma, inv_digraph(d, sigma));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

SymT p_expansion_via_n(const Digraph& d, const SweepOptions& opts) {
    check_factorial_budget(d.n, opts, "permutation sweep");
    // The expansion is only valid for symmetric X; fail loudly otherwise.
    const QSymT oracle = chromatic_qsym_direct(d, opts);
    if (const auto w = symmetry_witness(oracle)) {
        std::ostringstream os;
        os << "p-expansion requires symmetric X";
        throw NotSymmetricError(os.str(), w->a, w->b, w->t_degree);
    }
    const auto lambdas = partitions_of(d.n);
    const auto counts = kernels::n_lambda_inv_counts(d, lambdas, opts.mode, opts.jobs);
    SymT out{d.n, SBasis::p, {}};
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const TPoly poly = poly_from_counts(counts[i]);
        if (poly.is_zero()) continue;
        out.add_term(lambdas[i], poly.divided(Rat(z_lambda(lambdas[i]))));
    }
    return out;
}

TPoly cycle_p_coefficient(int n, const Partition& lambda) {
    if (n < 2) throw InvalidInputError("cycle_p_coefficient requires n >= 2");
    require_partition_of(lambda, n);
    const int k = static_cast<int>(lambda.size());
    if (k == 1) return TPoly(Rat(n)).shifted(1) * t_bracket(n - 1);
    TPoly out = TPoly(Rat(n)).shifted(1) * eulerian_polynomial(k - 1);
    for (int part : lambda) out *= t_bracket(part);
    return out;
}

// ---------------------------------------------------------------------------
// Acyclic-orientation statistics
// ---------------------------------------------------------------------------

TPoly sink_generating_polynomial(const Digraph& d, int k, const SweepOptions& opts) {
    const Graph g = d.underlying();
    const auto counts = kernels::sink_ascent_counts(g, d, opts.mode, opts.jobs);
    if (k < 0 || k > d.n) return {};
    return poly_from_counts(counts[k]);
}

TPoly ao_lambda_polynomial(const Digraph& d, const Partition& lambda, const SweepOptions& opts) {
    require_partition_of(lambda, d.n);
    bool cyclic;
    if (d.n >= 2 && d == directed_cycle(d.n)) {
        cyclic = true;
    } else if (d.n >= 1 && d == directed_path(d.n)) {
        cyclic = false;
    } else {
        throw InvalidInputError(
            "sink-gap statistics are defined for the directed cycle 1->2->...->n->1 "
            "and the directed path 1->2->...->n");
    }
    const auto counts = kernels::gap_ascent_counts(d.underlying(), d, cyclic, opts.mode, opts.jobs);
    const auto it = counts.find(lambda);
    return it == counts.end() ? TPoly{} : poly_from_counts(it->second);
}

}  // namespace cqsf
