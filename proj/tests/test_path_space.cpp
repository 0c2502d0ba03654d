#include <doctest.h>

#include <sstream>

#include "necklical/complex_io.hpp"
#include "necklical/path_space.hpp"
#include "necklical/relations.hpp"
#include "necklical/suites.hpp"

using namespace necklical;

TEST_CASE("faces of path cells")
{
    const LoopSpace W(wedge_of_circles(1));
    const PathCell a = parse_path_cell(W, "a | <e>");
    CHECK(format_path_cell(W, path_face(W, a, 1, 0)) == "x0 | a");
    CHECK(format_path_cell(W, path_face(W, a, 1, 1)) == "x0 | <e>");

    const LoopSpace T(standard_simplex(2));
    const PathCell s = parse_path_cell(T, "012 | 02^op");
    CHECK(dim(T, s) == 2);
    CHECK(format_path_cell(T, path_face(T, s, 2, 0)) == "01 | 12;02^op");
    CHECK(format_path_cell(T, path_face(T, s, 1, 1)) == "12 | 02^op");
}

TEST_CASE("degeneracies of path cells")
{
    const LoopSpace T(standard_simplex(2));
    const PathCell v = parse_path_cell(T, "0 | <e>");
    CHECK(path_degeneracy(T, v, 1) == canonical(T, make_path_cell(T, degeneracy(T.base(), v.base, 0), v.tail)));

    const PathCell c = parse_path_cell(T, "01 | 01^op");
    const SimplexTerm top = degeneracy(T.base(), c.base, 1);
    CHECK(canonical(T, make_path_cell(T, top, c.tail)) ==
          canonical(T, make_path_cell(T, c.base, word_degeneracy(T, c.tail, 1))));
}

TEST_CASE("right action")
{
    const LoopSpace L(boundary_simplex(3));
    Rng rng(11);
    for (int k = 0; k < 200; ++k)
    {
        const PathCell c = random_path_cell(L, rng);
        const LoopWord u = reduce(L, random_loop(L, rng));
        const LoopWord v = reduce(L, random_loop(L, rng));
        CHECK(action(L, c, unit_word(L.basepoint())) == c);
        CHECK(action(L, action(L, c, u), v) == action(L, c, compose(L, u, v)));
        CHECK(action(L, iota(L, unit_word(L.basepoint())), u) == iota(L, u));
        CHECK(pr(iota(L, u)) == term(L.basepoint()));
    }
}

TEST_CASE("relation systems on random path cells")
{
    for (const char* spec : {"sphere:2", "boundary-simplex:2", "simplex:3"})
    {
        const LoopSpace L(builtin_complex(spec));
        const PathModel m{&L};
        Rng rng(default_seed);
        RelationReport rep;
        for (int k = 0; k < 200; ++k)
            rep.merge(check_all(m, random_path_cell(L, rng)));
        CAPTURE(spec);
        CHECK(rep.ok());
        for (const auto& f : rep.failures)
            MESSAGE(f.cell << ": " << f.relation);
    }
}

TEST_CASE("path cell literals")
{
    const LoopSpace T(boundary_simplex(2));
    CHECK_THROWS_AS((void)parse_path_cell(T, "01 | 02"), TopologyError);
    CHECK_THROWS_AS((void)make_path_cell(T, term(T.z().require("01")), unit_word(T.basepoint())), TopologyError);
}

TEST_CASE("covering graph of the wedge is the Cayley ball")
{
    const LoopSpace W(wedge_of_circles(2));
    const auto g = one_skeleton(W, 5);
    CHECK(g.vertices.size() == 485);
    CHECK(g.edges.size() == 484);
    CHECK(is_connected(g));
    CHECK(is_acyclic(g));
    CHECK(covering_violations(W, g).empty());
}

TEST_CASE("covering graph of the triangle is a segment")
{
    const LoopSpace T(boundary_simplex(2));
    const auto g = one_skeleton(T, 6);
    CHECK(is_connected(g));
    const auto deg = degrees(g);
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
    {
        if (!g.boundary[k])
            CHECK(deg[k] == 2);
    }
    CHECK(covering_violations(T, g).empty());
}

TEST_CASE("sphere has a one-point covering graph")
{
    const LoopSpace S(sphere_quotient(2));
    for (int K : {1, 3, 6})
    {
        const auto g = one_skeleton(S, K);
        CHECK(g.vertices.size() == 1);
        CHECK(g.edges.empty());
    }
}

TEST_CASE("graph export")
{
    const LoopSpace W(wedge_of_circles(1));
    const auto g = one_skeleton(W, 2);
    std::ostringstream adj;
    write_adjacency(adj, W, g);
    CHECK(adj.str().rfind("vertices 5 edges 4 max-length 2\n", 0) == 0);

    std::ostringstream dot;
    write_dot(dot, W, g);
    CHECK(dot.str().rfind("digraph", 0) == 0);
    CHECK(dot.str().back() == '\n');
}
