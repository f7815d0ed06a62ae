#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "locdense/errors.hpp"
#include "locdense/graph.hpp"
#include "locdense/vertex_set.hpp"

using namespace locdense;

TEST_CASE("graph construction checks symmetry and bounds") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(0) == 1);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), InputError);
}

TEST_CASE("edge-list text round trips byte for byte") {
    const Graph g = Graph::from_edges(5, {{0, 4}, {1, 2}, {0, 1}});
    const std::string text = g.to_edge_list();
    CHECK(text == "5 3\n0 1\n0 4\n1 2\n");
    CHECK(Graph::from_edge_list(text) == g);

    const Graph empty = Graph::empty(3);
    CHECK(empty.to_edge_list() == "3 0\n");
    CHECK(Graph::from_edge_list("3 0\n") == empty);
}

TEST_CASE("edge-list parse errors name the offending line") {
    CHECK_THROWS_AS(Graph::from_edge_list(""), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list("abc\n"), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list("3 1\n"), InputError);           // missing edge line
    CHECK_THROWS_AS(Graph::from_edge_list("3 1\n0 1\n1 2\n"), InputError); // extra edge line
    CHECK_THROWS_AS(Graph::from_edge_list("3 1\n1 1\n"), InputError);      // loop
    CHECK_THROWS_AS(Graph::from_edge_list("3 1\n2 1\n"), InputError);      // u >= v
    CHECK_THROWS_AS(Graph::from_edge_list("3 1\n0 7\n"), InputError);      // out of range
    CHECK_THROWS_AS(Graph::from_edge_list("3 2\n0 1\n0 1\n"), InputError); // duplicate

    try {
        Graph::from_edge_list("3 2\n0 1\nbroken\n");
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("induced edge counts agree with direct enumeration") {
    const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(g.induced_edge_count(VertexSet::from_vertices(6, {0, 1, 2})) == Integer(3));
    CHECK(g.induced_edge_count(VertexSet::from_vertices(6, {0, 1, 2, 3})) == Integer(4));
    CHECK(g.induced_edge_count(VertexSet::from_vertices(6, {0, 3, 5})) == Integer(0));
    CHECK(g.induced_edge_count(VertexSet(6)) == Integer(0));

    // Full set recovers the edge count.
    VertexSet all(6);
    for (int v = 0; v < 6; ++v) all.set(v);
    CHECK(g.induced_edge_count(all) == Integer(6));
}

TEST_CASE("complete and multipartite families have the expected shape") {
    FamilySpec complete;
    complete.kind = FamilySpec::Kind::complete;
    complete.n = 6;
    const Graph k6 = gen_family(complete);
    CHECK(k6.vertex_count() == 6);
    CHECK(k6.edge_count() == 15);

    FamilySpec tripartite;
    tripartite.kind = FamilySpec::Kind::multipartite;
    tripartite.parts = {2, 2, 2};
    const Graph g = gen_family(tripartite);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    CHECK_FALSE(g.adjacent(0, 1)); // same part
    CHECK(g.adjacent(0, 2));       // across parts

    FamilySpec bipartite;
    bipartite.kind = FamilySpec::Kind::multipartite;
    bipartite.parts = {3, 4};
    CHECK(gen_family(bipartite).edge_count() == 12);
}

TEST_CASE("clique unions and blowups have the expected shape") {
    FamilySpec cu;
    cu.kind = FamilySpec::Kind::clique_union;
    cu.cliques = 2;
    cu.clique_size = 3;
    const Graph g = gen_family(cu);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(2, 3)); // across cliques

    FamilySpec bu;
    bu.kind = FamilySpec::Kind::blowup;
    bu.base = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    bu.blowup_factor = 2;
    const Graph b = gen_family(bu);
    CHECK(b.vertex_count() == 6);
    CHECK(b.edge_count() == 12); // 3 base edges, 4 copies each
    CHECK_THROWS_AS(gen_family(FamilySpec{FamilySpec::Kind::blowup, 0, {}, 0, 0, 2, {}}),
                    InputError);
}

TEST_CASE("random graphs are reproducible and respect degenerate probabilities") {
    const Graph a = gen_random(12, Rational(1, 2), 42);
    const Graph b = gen_random(12, Rational(1, 2), 42);
    CHECK(a == b);

    const Graph c = gen_random(12, Rational(1, 2), 43);
    CHECK(a != c); // overwhelmingly likely and fixed by the seeds above

    CHECK(gen_random(10, Rational(0), 1).edge_count() == 0);
    CHECK(gen_random(10, Rational(1), 1).edge_count() == 45);
    CHECK_THROWS_AS(gen_random(5, Rational(3, 2), 1), InputError);
    CHECK_THROWS_AS(gen_random(5, Rational(-1, 2), 1), InputError);
}

TEST_CASE("vertex sets order by size then lexicographic membership") {
    const VertexSet small = VertexSet::from_vertices(8, {0, 5});
    const VertexSet larger = VertexSet::from_vertices(8, {1, 2, 3});
    CHECK(VertexSet::size_lex_less(small, larger));
    CHECK_FALSE(VertexSet::size_lex_less(larger, small));

    // Same size: the set owning the lowest differing vertex comes first.
    const VertexSet a = VertexSet::from_vertices(8, {0, 3});
    const VertexSet b = VertexSet::from_vertices(8, {0, 4});
    CHECK(VertexSet::size_lex_less(a, b));
    CHECK_FALSE(VertexSet::size_lex_less(b, a));
    CHECK_FALSE(VertexSet::size_lex_less(a, a));

    CHECK(VertexSet::from_vertices(8, {2, 5, 7}).str() == "2 5 7");
    CHECK(VertexSet(4).str() == "");
    CHECK(VertexSet::from_mask(6, 0b101011ull).count() == 4);
}
