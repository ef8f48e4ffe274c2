#include "cqsf/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cqsf/errors.hpp"

namespace cqsf {

namespace {

void check_vertex_count(int n) {
    if (n < 0 || n > 64) throw InvalidInputError("vertex count must be in [0, 64]");
}

void check_vertex(int v, int n) {
    if (v < 1 || v > n) {
        std::ostringstream os;
        os << "vertex " << v << " out of range [1, " << n << "]";
        throw InvalidInputError(os.str());
    }
}

}  // namespace

Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges) {
    check_vertex_count(n);
    Graph g;
    g.n = n;
    g.adj.assign(std::max(n, 1), 0);
    for (auto& [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw InvalidInputError("loop edge rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidInputError("duplicate undirected edge rejected");
    g.edges = std::move(edges);
    for (auto [u, v] : g.edges) {
        g.adj[u - 1] |= std::uint64_t(1) << (v - 1);
        g.adj[v - 1] |= std::uint64_t(1) << (u - 1);
    }
    return g;
}

Graph Digraph::underlying() const {
    std::vector<std::pair<int, int>> und;
    und.reserve(edges.size());
    for (auto [u, v] : edges)
        if (u < v || !has_edge(v, u)) und.emplace_back(std::min(u, v), std::max(u, v));
    return graph_from_edges(n, std::move(und));
}

Digraph digraph_from_edges(int n, std::vector<std::pair<int, int>> edges) {
    check_vertex_count(n);
    Digraph d;
    d.n = n;
    d.out.assign(std::max(n, 1), 0);
    d.in.assign(std::max(n, 1), 0);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidInputError("duplicate directed edge rejected");
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw InvalidInputError("loop edge rejected");
        d.out[u - 1] |= std::uint64_t(1) << (v - 1);
        d.in[v - 1] |= std::uint64_t(1) << (u - 1);
    }
    d.edges = std::move(edges);
    return d;
}

bool is_oriented(const Digraph& d) {
    for (auto [u, v] : d.edges)
        if (d.has_edge(v, u)) return false;
    return true;
}

bool is_acyclic(const Digraph& d) {
    // Kahn's algorithm on the directed edges.
    std::vector<int> indeg(d.n, 0);
    for (auto [u, v] : d.edges) indeg[v - 1]++;
    std::vector<int> queue;
    for (int v = 1; v <= d.n; ++v)
        if (indeg[v - 1] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        ++seen;
        std::uint64_t succ = d.out[u - 1];
        while (succ) {
            const int v = std::countr_zero(succ) + 1;
            succ &= succ - 1;
            if (--indeg[v - 1] == 0) queue.push_back(v);
        }
    }
    return seen == d.n;
}

std::string PcaWitness::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::bidirected_pair:
            os << "bidirected pair {" << a << ", " << b << "}";
            break;
        case Kind::out_star:
            os << "out-star " << a << "->" << b << ", " << a << "->" << c << " with " << b
               << ", " << c << " non-adjacent";
            break;
        case Kind::in_star:
            os << "in-star " << b << "->" << a << ", " << c << "->" << a << " with " << b << ", "
               << c << " non-adjacent";
            break;
    }
    return os.str();
}

PcaResult is_proper_circular_arc(const Digraph& d) {
    for (auto [u, v] : d.edges)
        if (u < v && d.has_edge(v, u))
            return {false, PcaWitness{PcaWitness::Kind::bidirected_pair, u, v, 0}};

    const auto adjacent = [&](int x, int y) { return d.has_edge(x, y) || d.has_edge(y, x); };
    for (int u = 1; u <= d.n; ++u) {
        for (int v = 1; v <= d.n; ++v) {
            if (!d.has_edge(u, v)) continue;
            for (int w = v + 1; w <= d.n; ++w) {
                if (!d.has_edge(u, w)) continue;
                if (!adjacent(v, w))
                    return {false, PcaWitness{PcaWitness::Kind::out_star, u, v, w}};
            }
        }
        for (int v = 1; v <= d.n; ++v) {
            if (!d.has_edge(v, u)) continue;
            for (int w = v + 1; w <= d.n; ++w) {
                if (!d.has_edge(w, u)) continue;
                if (!adjacent(v, w))
                    return {false, PcaWitness{PcaWitness::Kind::in_star, u, v, w}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_unit_interval_digraph(const Digraph& d) {
    return is_proper_circular_arc(d).ok && is_acyclic(d);
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "interval") return FamilyKind::interval;
    if (s == "circular") return FamilyKind::circular;
    if (s == "path") return FamilyKind::path;
    if (s == "cycle") return FamilyKind::cycle;
    throw InvalidInputError("unknown family kind '" + s + "'");
}

Digraph family_digraph(FamilyKind kind, int n, int r) {
    check_vertex_count(n);
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case FamilyKind::path:
            return family_digraph(FamilyKind::interval, n, 2);
        case FamilyKind::cycle: {
            // The n = 2 cycle is the bidirected pair; it cannot be expressed
            // as a circular band digraph because those forbid bidirection.
            if (n < 2) throw InvalidInputError("directed cycle requires n >= 2");
            for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
            return digraph_from_edges(n, std::move(edges));
        }
        case FamilyKind::interval: {
            if (r < 1 || r > n)
                throw InvalidInputError("interval family requires 1 <= r <= n");
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n && j - i < r; ++j) edges.emplace_back(i, j);
            return digraph_from_edges(n, std::move(edges));
        }
        case FamilyKind::circular: {
            if (r < 1 || r > (n + 1) / 2)
                throw InvalidInputError("circular family requires 1 <= r <= ceil(n/2)");
            for (int i = 1; i <= n; ++i)
                for (int step = 1; step < r; ++step)
                    edges.emplace_back(i, (i - 1 + step) % n + 1);
            return digraph_from_edges(n, std::move(edges));
        }
    }
    throw InvalidInputError("unknown family kind");
}

Digraph directed_path(int n) { return family_digraph(FamilyKind::path, n); }
Digraph directed_cycle(int n) { return family_digraph(FamilyKind::cycle, n); }

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

void enumerate_digraphs(int n, int states, const std::function<void(const Digraph&)>& fn) {
    const auto pairs = vertex_pairs(n);
    std::vector<int> assign(pairs.size(), 0);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto [u, v] = pairs[i];
            if (assign[i] == 1 || assign[i] == 3) edges.emplace_back(u, v);
            if (assign[i] == 2 || assign[i] == 3) edges.emplace_back(v, u);
        }
        fn(digraph_from_edges(n, std::move(edges)));
        std::size_t k = 0;
        while (k < assign.size() && assign[k] == states - 1) assign[k++] = 0;
        if (k == assign.size()) break;
        ++assign[k];
    }
}

}  // namespace

void for_each_oriented_digraph(int n, const std::function<void(const Digraph&)>& fn) {
    enumerate_digraphs(n, 3, fn);
}

void for_each_digraph(int n, const std::function<void(const Digraph&)>& fn) {
    enumerate_digraphs(n, 4, fn);
}

Digraph random_digraph_with_bidirected(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidInputError("bidirected sample requires n >= 2");
    const auto pairs = vertex_pairs(n);
    std::uniform_int_distribution<int> state(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> assign(pairs.size());
    bool any_bidirected = false;
    for (auto& a : assign) {
        a = state(rng);
        any_bidirected |= (a == 3);
    }
    if (!any_bidirected) assign[pick(rng)] = 3;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [u, v] = pairs[i];
        if (assign[i] == 1 || assign[i] == 3) edges.emplace_back(u, v);
        if (assign[i] == 2 || assign[i] == 3) edges.emplace_back(v, u);
    }
    return digraph_from_edges(n, std::move(edges));
}

Digraph random_unit_interval_digraph(int n, std::mt19937_64& rng) {
    // Weakly increasing bound function i <= bound(i) <= n; edges i -> j for
    // i < j <= bound(i).
    std::vector<int> bound(n);
    int prev = 1;
    for (int i = 1; i <= n; ++i) {
        std::uniform_int_distribution<int> pick(std::max(i, prev), n);
        bound[i - 1] = pick(rng);
        prev = bound[i - 1];
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= bound[i - 1]; ++j) edges.emplace_back(i, j);
    return digraph_from_edges(n, std::move(edges));
}

Digraph random_proper_circular_arc_digraph(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> strategy(0, 2);
    switch (strategy(rng)) {
        case 0:
            return random_unit_interval_digraph(n, rng);
        case 1: {
            // Relabeled circular band digraph (star-freeness is label-invariant).
            std::uniform_int_distribution<int> pick_r(1, std::max((n + 1) / 2, 1));
            const Digraph base = family_digraph(FamilyKind::circular, n, pick_r(rng));
            std::vector<int> relabel(n);
            std::iota(relabel.begin(), relabel.end(), 1);
            std::shuffle(relabel.begin(), relabel.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : base.edges) edges.emplace_back(relabel[u - 1], relabel[v - 1]);
            return digraph_from_edges(n, std::move(edges));
        }
        default: {
            // Rejection sampling; falls back to a unit interval digraph if the
            // density makes hits too rare.
            std::uniform_int_distribution<int> state(0, 2);
            for (int attempt = 0; attempt < 20000; ++attempt) {
                std::vector<std::pair<int, int>> edges;
                for (auto [u, v] : vertex_pairs(n)) {
                    switch (state(rng)) {
                        case 1: edges.emplace_back(u, v); break;
                        case 2: edges.emplace_back(v, u); break;
                        default: break;
                    }
                }
                Digraph d = digraph_from_edges(n, std::move(edges));
                if (is_proper_circular_arc(d).ok) return d;
            }
            return random_unit_interval_digraph(n, rng);
        }
    }
}

}  // namespace cqsf
