#pragma once

// Internal kernel for exhaustive subset scans on graphs with at most 62
// vertices: include/exclude depth-first search over 64-bit masks with an
// incrementally maintained induced-edge count. The parallel driver splits the
// search on a fixed prefix of vertices and merges per-task accumulators in
// task order, so results can never depend on the thread schedule.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "locdense/errors.hpp"
#include "locdense/exec.hpp"
#include "locdense/graph.hpp"

namespace locdense::detail {

inline constexpr int kMaxMaskVertices = 62;
inline constexpr int kSplitVertices = 10; // prefix assigned per parallel task

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v).low_word();
    return adj;
}

// true when `a` precedes `b` among masks of equal popcount: the set owning
// the lowest differing vertex comes first (ascending-vertex lexicographic).
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & -diff)) != 0;
}

// Extends `mask` by any subset of the vertices in [v, n); calls
// leaf(mask, size, edges) for every completion of size at least min_size.
template <class Leaf>
void subset_dfs(const std::vector<std::uint64_t>& adj, int n, int v, std::uint64_t mask,
                int size, long long edges, int min_size, Leaf&& leaf) {
    if (size + (n - v) < min_size) return;
    if (v == n) {
        leaf(mask, size, edges);
        return;
    }
    subset_dfs(adj, n, v + 1, mask, size, edges, min_size, leaf);
    const std::uint64_t bit = std::uint64_t{1} << v;
    subset_dfs(adj, n, v + 1, mask | bit, size + 1,
               edges + std::popcount(adj[static_cast<size_t>(v)] & mask), min_size, leaf);
}

// Visits every subset of V(g) with at least min_size vertices. leaf(acc,
// mask, size, edges) mutates a task-local copy of `init`; merge(total, part)
// folds the task results left to right in task order.
template <class Acc, class Leaf, class Merge>
Acc subset_scan(const Graph& g, int min_size, const Acc& init, Leaf leaf, Merge merge,
                Exec exec) {
    const int n = g.vertex_count();
    if (n > kMaxMaskVertices)
        throw ResourceLimitError("subset enumeration is limited to " +
                                 std::to_string(kMaxMaskVertices) + " vertices, got " +
                                 std::to_string(n));
    const auto adj = adjacency_masks(g);
    const int split = n < kSplitVertices ? n : kSplitVertices;
    const int tasks = 1 << split;
    std::vector<Acc> acc(static_cast<size_t>(tasks), init);
    auto run_task = [&](int t) {
        const std::uint64_t mask = static_cast<std::uint64_t>(t);
        const int size = std::popcount(mask);
        if (size + (n - split) < min_size) return;
        long long edges = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            edges += std::popcount(adj[static_cast<size_t>(v)] & mask &
                                   ((std::uint64_t{1} << v) - 1));
        }
        Acc& local = acc[static_cast<size_t>(t)];
        subset_dfs(adj, n, split, mask, size, edges, min_size,
                   [&](std::uint64_t m, int s, long long e) { leaf(local, m, s, e); });
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < tasks; ++t) run_task(t);
    } else {
        for (int t = 0; t < tasks; ++t) run_task(t);
    }
    Acc total = init;
    for (int t = 0; t < tasks; ++t) merge(total, acc[static_cast<size_t>(t)]);
    return total;
}

} // namespace locdense::detail
