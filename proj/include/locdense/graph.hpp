#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdense/rational.hpp"
#include "locdense/vertex_set.hpp"

namespace locdense {

// Simple undirected graph on vertices {0,...,n-1}, adjacency stored as one
// bit-row per vertex. Immutable once constructed; every construction path
// verifies symmetry, an empty diagonal, and the edge count.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Edge-list text format: first line "n m", then m lines "u v" with
    // 0 <= u < v < n, whitespace separated, LF line endings, no comments.
    // Errors name the offending 1-based line.
    static Graph from_edge_list(const std::string& text);

    // Canonical serialization: header, then edges in lexicographic order.
    // from_edge_list(to_edge_list()) reproduces the graph bit for bit.
    std::string to_edge_list() const;

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    // e(X): number of edges with both endpoints in X.
    Integer induced_edge_count(const VertexSet& x) const;

    std::vector<std::pair<int, int>> edges() const; // lexicographic

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> adj_;

    void check_invariants() const;
};

// G(n, p) with exact rational p in [0,1]. Pairs (u,v), u < v, are scanned in
// lexicographic order and kept independently with probability p, driven by
// GMP's Mersenne Twister stream, so a (n, p, seed) triple names one graph on
// every platform.
Graph gen_random(int n, const Rational& p, unsigned long seed);

struct FamilySpec {
    enum class Kind { complete, multipartite, clique_union, blowup };
    Kind kind;
    int n = 0;                     // complete: K_n
    std::vector<int> parts;        // multipartite: complete multipartite with these part sizes
    int cliques = 0;               // clique_union: number of disjoint cliques
    int clique_size = 0;           //               size of each clique
    int blowup_factor = 0;         // blowup: every base vertex becomes this many copies
    std::optional<Graph> base;     // blowup base graph
};

// Deterministic named families; parts and cliques occupy increasing index blocks.
Graph gen_family(const FamilySpec& spec);

} // namespace locdense
