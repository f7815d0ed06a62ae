#include <utility>
#include <vector>

#include "doctest.h"

#include "locdense/errors.hpp"
#include "locdense/graph.hpp"
#include "locdense/homcount.hpp"
#include "locdense/rng.hpp"

using namespace locdense;

namespace {

Graph complete(int n) {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::complete;
    spec.n = n;
    return gen_family(spec);
}

// 5-cycle: odd girth 5, so the only closed 3-walks are trivial and the only
// closed 5-walks are full loops.
Graph five_cycle() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

// Outer 5-cycle, inner pentagram, spokes. 3-regular, girth 5; the spectrum
// {3, 1 (x5), -2 (x4)} gives trace(A^5) = 243 + 5 - 128 = 120 by hand.
Graph petersen() {
    return Graph::from_edges(10, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {0, 4},
                                  {5, 7},
                                  {7, 9},
                                  {6, 9},
                                  {6, 8},
                                  {5, 8},
                                  {0, 5},
                                  {1, 6},
                                  {2, 7},
                                  {3, 8},
                                  {4, 9}});
}

} // namespace

TEST_CASE("closed-walk counts match hand values on cliques and cycles") {
    CHECK(count_cycle_homs(complete(3), 3) == Integer(6));
    CHECK(count_cycle_homs(complete(4), 3) == Integer(24));
    CHECK(count_cycle_homs(complete(8), 3) == Integer(336));
    CHECK(count_cycle_homs(five_cycle(), 3) == Integer(0));
    CHECK(count_cycle_homs(five_cycle(), 5) == Integer(10));
    CHECK(count_cycle_homs(petersen(), 3) == Integer(0));
    CHECK(count_cycle_homs(petersen(), 5) == Integer(120));

    FamilySpec cu;
    cu.kind = FamilySpec::Kind::clique_union;
    cu.cliques = 2;
    cu.clique_size = 3;
    CHECK(count_cycle_homs(gen_family(cu), 3) == Integer(12));

    cu.cliques = 2;
    cu.clique_size = 10;
    CHECK(count_cycle_homs(gen_family(cu), 3) == Integer(1440));
}

TEST_CASE("odd closed walks vanish on bipartite graphs") {
    FamilySpec bip;
    bip.kind = FamilySpec::Kind::multipartite;
    bip.parts = {4, 5};
    const Graph g = gen_family(bip);
    for (int r : {3, 5, 7, 9}) CHECK(count_cycle_homs(g, r) == Integer(0));
    CHECK(count_cycle_homs(g, 4) > Integer(0));
}

TEST_CASE("walk tables compose and obey the per-entry ceiling") {
    const Graph g = gen_random(9, Rational(1, 2), 5);

    const WalkTable q0 = walk_table(g, 0);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) CHECK(q0.at(x, y) == Integer(x == y ? 1 : 0));

    const WalkTable q2 = walk_table(g, 2);
    const WalkTable q3 = walk_table(g, 3);
    const WalkTable q5 = multiply(q2, q3);
    CHECK(q5.edges == 5);
    const WalkTable q5_direct = walk_table(g, 5);
    CHECK(q5.q == q5_direct.q);

    // Each entry counts walks, so q(x,y) <= n^(edges-1) for edges >= 1.
    for (int edges : {1, 2, 3, 4, 5}) {
        const WalkTable q = walk_table(g, edges);
        Integer ceiling(1);
        for (int i = 1; i < edges; ++i) ceiling *= 9;
        for (const Integer& entry : q.q) CHECK(entry <= ceiling);
    }

    // Row sums, trace and entry sum are consistent.
    Integer total(0);
    for (int x = 0; x < 9; ++x) total += q3.row_sum(x);
    CHECK(total == q3.entry_sum());
}

TEST_CASE("trace, middle-edge split and brute force agree on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(5)); // 3..7
        const Graph g = gen_random(n, Rational(1, 2), 100 + trial);
        for (int r : {3, 5, 7}) {
            const Integer via_trace = count_cycle_homs(g, r);
            const Integer via_split = cycle_homs_via_decomposition(g, r);
            const Integer via_brute = brute_force_cycle_homs(g, r);
            CHECK(via_trace == via_split);
            CHECK(via_trace == via_brute);
        }
    }
}

TEST_CASE("serial and parallel kernels produce identical results") {
    const Graph g = gen_random(14, Rational(2, 5), 77);
    for (int r : {3, 5, 7}) {
        CHECK(count_cycle_homs(g, r, Exec::serial) == count_cycle_homs(g, r, Exec::parallel));
        CHECK(cycle_homs_via_decomposition(g, r, Exec::serial) ==
              cycle_homs_via_decomposition(g, r, Exec::parallel));
    }
    for (int k : {0, 1, 4, 6})
        CHECK(count_path_homs(g, k, Exec::serial) == count_path_homs(g, k, Exec::parallel));
}

TEST_CASE("path homomorphism counts match closed forms") {
    // k = 0 counts vertices; k = 1 counts ordered edges.
    const Graph g = gen_random(11, Rational(1, 2), 9);
    CHECK(count_path_homs(g, 0) == Integer(11));
    CHECK(count_path_homs(g, 1) == Integer(static_cast<long>(2 * g.edge_count())));

    // On the 5-cycle the 2-edge walks are centre times ordered neighbor pairs:
    // 5 * 2 * 2 = 20.
    CHECK(count_path_homs(five_cycle(), 2) == Integer(20));

    // On K_n there are n*(n-1)^k walks with k edges.
    CHECK(count_path_homs(complete(6), 3) == Integer(6 * 5 * 5 * 5));
}

TEST_CASE("path counts meet the edge-density lower bound") {
    // d = 2m/n^2; the bound d^k n^(k+1) must never exceed the true count.
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(14)); // 2..15
        const int k = 1 + static_cast<int>(rng.below(6));  // 1..6
        const Graph g = gen_random(n, Rational(1, 3), 500 + trial);
        const HomCountReport rep = blakley_roy_check(g, k);
        CHECK(rep.holds);
        CHECK(Rational(rep.count) >= rep.bound);
    }

    // The 5-cycle at k = 2 meets the bound with equality: 20 = (2/5)^2 * 125.
    const HomCountReport tight = blakley_roy_check(five_cycle(), 2);
    CHECK(tight.count == Integer(20));
    CHECK(tight.bound == Rational(20));
    CHECK(tight.holds);

    // Complete graphs meet it with equality for every k.
    const HomCountReport complete_tight = blakley_roy_check(complete(7), 4);
    CHECK(Rational(complete_tight.count) == complete_tight.bound);
}

TEST_CASE("hom-count preconditions and budget guards") {
    const Graph g = complete(4);
    CHECK_THROWS_AS(count_cycle_homs(g, 1), InputError);
    CHECK_THROWS_AS(count_cycle_homs(g, 0), InputError);
    CHECK_THROWS_AS(cycle_homs_via_decomposition(g, 4), InputError);
    CHECK_THROWS_AS(cycle_homs_via_decomposition(g, 1), InputError);
    CHECK_THROWS_AS(count_path_homs(g, -1), InputError);
    CHECK_THROWS_AS(brute_force_cycle_homs(g, 3, 10), ResourceLimitError);
    CHECK_THROWS_AS(blakley_roy_check(Graph::empty(0), 2), InputError);

    // Even lengths are fine for the trace kernel: closed 2-walks = 2m.
    CHECK(count_cycle_homs(g, 2) == Integer(12));
}
