#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cqsf {

/// Simple undirected graph on vertices 1..n. Edges are stored as (u, v) with
/// u < v, sorted; adjacency is kept as per-vertex bitmasks (n <= 64).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> adj;  // bit (v-1) of adj[u-1] set iff u ~ v

    bool adjacent(int u, int v) const { return (adj[u - 1] >> (v - 1)) & 1u; }
    std::uint64_t neighbors_mask(int u) const { return adj[u - 1]; }
    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges);

/// Simple digraph on vertices 1..n: no loops, no duplicate directed edges.
/// Both (u,v) and (v,u) may be present (a bidirected pair).
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // sorted lexicographically
    std::vector<std::uint64_t> out;          // bit (v-1) of out[u-1] set iff u -> v
    std::vector<std::uint64_t> in;

    bool has_edge(int u, int v) const { return (out[u - 1] >> (v - 1)) & 1u; }
    Graph underlying() const;
    bool operator==(const Digraph& o) const { return n == o.n && edges == o.edges; }
};

/// Validates and normalizes; throws InvalidInputError on loops, duplicate
/// edges, out-of-range vertices, or n outside [0, 64].
Digraph digraph_from_edges(int n, std::vector<std::pair<int, int>> edges);

/// True iff the digraph has no bidirected pair.
bool is_oriented(const Digraph& d);

/// True iff the digraph has no directed cycle (bidirected pairs count).
bool is_acyclic(const Digraph& d);

// ---------------------------------------------------------------------------
// Forbidden-configuration recognizer
// ---------------------------------------------------------------------------

struct PcaWitness {
    enum class Kind { bidirected_pair, out_star, in_star };
    Kind kind;
    // bidirected_pair: (a, b); out_star: a->b, a->c with b,c non-adjacent;
    // in_star: b->a, c->a with b,c non-adjacent.
    int a = 0, b = 0, c = 0;
    std::string describe() const;
};

struct PcaResult {
    bool ok = false;
    std::optional<PcaWitness> witness;
    explicit operator bool() const { return ok; }
};

/// Proper circular arc digraph test: oriented (no bidirected pair) and free of
/// the induced out-star {u->v, u->w, v !~ w} and in-star {v->u, w->u, v !~ w}.
PcaResult is_proper_circular_arc(const Digraph& d);

/// Acyclic proper circular arc digraph (a natural unit interval graph oriented
/// from smaller to larger label, up to relabeling).
bool is_unit_interval_digraph(const Digraph& d);

// ---------------------------------------------------------------------------
// Graph families
// ---------------------------------------------------------------------------

enum class FamilyKind { interval, circular, path, cycle };

FamilyKind family_kind_from_string(const std::string& s);

/// interval: vertices [n], edge i -> j for i < j with j - i < r (1 <= r <= n).
/// circular: edge i -> j when 0 < (j - i) mod n < r (1 <= r <= ceil(n/2)).
/// path = interval with r = 2; cycle = the directed cycle 1 -> 2 -> ... -> n -> 1
/// for n >= 2 (n = 2 yields the bidirected pair). r is ignored for path/cycle.
Digraph family_digraph(FamilyKind kind, int n, int r = 0);

Digraph directed_path(int n);
Digraph directed_cycle(int n);

// ---------------------------------------------------------------------------
// Enumeration and sampling (used by verification suites)
// ---------------------------------------------------------------------------

/// All assignments of {absent, u->v, v->u} to the vertex pairs of [n].
void for_each_oriented_digraph(int n, const std::function<void(const Digraph&)>& fn);

/// All assignments of {absent, u->v, v->u, both} to the vertex pairs of [n].
void for_each_digraph(int n, const std::function<void(const Digraph&)>& fn);

/// Random digraph containing at least one bidirected pair.
Digraph random_digraph_with_bidirected(int n, std::mt19937_64& rng);

/// Random proper circular arc digraph. Mixes three strategies: a random
/// natural unit interval digraph, a random relabeling of a circular band
/// digraph, and rejection sampling of random oriented digraphs.
Digraph random_proper_circular_arc_digraph(int n, std::mt19937_64& rng);

/// Random natural unit interval digraph on [n] (always acyclic and
/// star-free): edges i -> j for i < j <= bound(i) with a random weakly
/// increasing bound function.
Digraph random_unit_interval_digraph(int n, std::mt19937_64& rng);

}  // namespace cqsf
