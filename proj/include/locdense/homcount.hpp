#pragma once

#include <vector>

#include "locdense/exec.hpp"
#include "locdense/graph.hpp"
#include "locdense/rational.hpp"

namespace locdense {

// q(x,y): number of walks with exactly `edges` edges from x to y. Vertices
// may repeat; consecutive ones must be adjacent. Exact integers throughout.
struct WalkTable {
    int n = 0;
    int edges = 0;
    std::vector<Integer> q; // row-major n*n

    const Integer& at(int x, int y) const { return q[static_cast<size_t>(x) * n + y]; }
    Integer& at(int x, int y) { return q[static_cast<size_t>(x) * n + y]; }

    Integer trace() const;
    Integer entry_sum() const;
    Integer row_sum(int x) const;
};

// Iterated exact product of the adjacency relation; edges = 0 yields the
// identity table. Row-parallel under Exec::parallel with bit-identical output.
WalkTable walk_table(const Graph& g, int edges, Exec exec = Exec::parallel);

// Exact table product; walk lengths add.
WalkTable multiply(const WalkTable& a, const WalkTable& b, Exec exec = Exec::parallel);

// C_r(G): vertex sequences (x_1,...,x_r) whose consecutive pairs and the
// wrap-around pair are all edges. Trace of the r-edge walk table.
Integer count_cycle_homs(const Graph& g, int r, Exec exec = Exec::parallel);

// Same count through the split over the middle edge: with r = 2m+1 and q the
// m-edge table, sums q(x,y) q(x,z) over all x and ordered adjacent (y,z).
Integer cycle_homs_via_decomposition(const Graph& g, int r, Exec exec = Exec::parallel);

// Homomorphisms of the k-edge path: sum of all entries of the k-edge table;
// k = 0 counts the vertices.
Integer count_path_homs(const Graph& g, int k, Exec exec = Exec::parallel);

struct HomCountReport {
    Integer count;
    Rational bound;
    bool holds = false; // count >= bound, exactly
};

// Checks count_path_homs(G,k) >= d^k n^(k+1) with d = 2m/n^2, the edge
// density that the graph meets with equality. Requires n >= 1, k >= 1.
HomCountReport blakley_roy_check(const Graph& g, int k, Exec exec = Exec::parallel);

inline constexpr long long kBruteForceBudget = 300'000'000;

// Independent oracle: exhaustive backtracking over V^r checking all r edge
// constraints including the wrap-around. Refuses when n^r exceeds the budget.
Integer brute_force_cycle_homs(const Graph& g, int r, long long budget = kBruteForceBudget);

} // namespace locdense
