#include <doctest.h>

#include <functional>
#include <string>

#include "necklical/complex_io.hpp"
#include "necklical/simplicial.hpp"
#include "oracles.hpp"

using namespace necklical;

namespace {

SimplexTerm named(const SimplicialPresentation& X, const std::string& name, std::vector<int> degs = {})
{
    SimplexTerm t = term(X.require(name));
    t.degeneracies = DegeneracyWord::from_canonical(std::move(degs));
    return t;
}

std::vector<std::size_t> counts_by_dim(const SimplicialPresentation& X)
{
    std::vector<std::size_t> out(static_cast<std::size_t>(X.max_dim() + 1), 0);
    for (const auto& g : X.generators())
        ++out[static_cast<std::size_t>(g.dim)];
    return out;
}

const char* boundary_triangle_json = R"({
  "name": "triangle",
  "vertices": ["0", "1", "2"],
  "basepoint": "0",
  "generators": [
    {"name": "01", "dim": 1, "faces": ["1", "0"]},
    {"name": "12", "dim": 1, "faces": ["2", "1"]},
    {"name": "02", "dim": 1, "faces": [{"degeneracies": [], "generator": "2"}, "0"]}
  ]
})";

}   // namespace

TEST_CASE("faces of standard simplices")
{
    const auto D2 = standard_simplex(2);
    CHECK(face(D2, named(D2, "012"), 1) == named(D2, "02"));

    const auto D3 = standard_simplex(3);
    const SimplexTerm s1 = degeneracy(D3, named(D3, "013"), 1);
    CHECK(face(D3, s1, 3) == named(D3, "01", {1}));
    CHECK(to_string(D3, face(D3, s1, 3)) == "s1.01");

    const SimplexTerm v = named(D2, "1");
    const SimplexTerm s0v = degeneracy(D2, v, 0);
    CHECK(face(D2, s0v, 0) == v);
    CHECK(face(D2, s0v, 1) == v);
}

TEST_CASE("face and degeneracy agree with the vertex-list model of the 3-simplex")
{
    const auto X = standard_simplex(3);
    auto as_term = [&](const oracle::VertexList& l) {
        auto [name, degs] = l.normal_form();
        return named(X, name, degs);
    };

    // every simplex of dimension <= 4 reachable by degeneracies from a generator
    std::vector<oracle::VertexList> cells;
    std::function<void(std::vector<int>)> grow = [&](std::vector<int> v) {
        if (v.size() > 5)
            return;
        if (!v.empty())
            cells.push_back({v});
        for (int x = v.empty() ? 0 : v.back(); x <= 3; ++x)
        {
            auto w = v;
            w.push_back(x);
            grow(w);
        }
    };
    grow({});

    int checked = 0;
    for (const auto& c : cells)
    {
        const SimplexTerm t = as_term(c);
        const int n = static_cast<int>(c.v.size()) - 1;
        REQUIRE(dim(X, t) == n);
        for (int i = 0; n >= 1 && i <= n; ++i)
        {
            CHECK(face(X, t, i) == as_term(c.face(i)));
            ++checked;
        }
        for (int j = 0; j <= n; ++j)
        {
            CHECK(degeneracy(X, t, j) == as_term(c.degeneracy(j)));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("degeneracy words normalize")
{
    const std::vector<int> raw{1, 0};   // s_0 s_1 = s_2 s_0
    CHECK(DegeneracyWord::from_raw(raw).indices() == std::vector<int>{0, 2});
    CHECK(DegeneracyWord::from_canonical({0}).then(0).indices() == std::vector<int>{0, 1});
}

TEST_CASE("endpoints")
{
    const auto D2 = standard_simplex(2);
    const auto e = endpoints(D2, named(D2, "012"));
    CHECK(e.min == D2.require("0"));
    CHECK(e.max == D2.require("2"));

    const auto Z = z_extension(boundary_simplex(2));
    const auto a = Z.require("01");
    const auto a_op = *Z.op(a);
    CHECK(endpoints(Z, term(a_op)).min == endpoints(Z, term(a)).max);
    CHECK(endpoints(Z, term(a_op)).max == endpoints(Z, term(a)).min);

    const auto W = wedge_of_circles(1);
    const auto s0 = degeneracy(W, term(W.basepoint()), 0);
    CHECK(endpoints(W, s0).min == W.basepoint());
    CHECK(endpoints(W, s0).max == W.basepoint());
}

TEST_CASE("z extension")
{
    const auto Z1 = z_extension(wedge_of_circles(1));
    REQUIRE(Z1.of_dim(1).size() == 2);
    for (GeneratorId g : Z1.of_dim(1))
    {
        for (const auto& f : Z1.generator(g).faces)
            CHECK(f == term(Z1.basepoint()));
    }
    CHECK(Z1.op(Z1.require("a")) == Z1.require("a^op"));
    CHECK(Z1.op(Z1.require("a^op")) == Z1.require("a"));

    const auto S2 = sphere_quotient(2);
    CHECK(z_extension(S2).size() == S2.size());

    const auto Zt = z_extension(boundary_simplex(2));
    CHECK(Zt.of_dim(1).size() == 6);
    CHECK(validate(Zt).ok());
    CHECK_THROWS_AS((void)z_extension(Zt), TopologyError);
}

TEST_CASE("builtin fixtures")
{
    CHECK(counts_by_dim(sphere_quotient(2)) == std::vector<std::size_t>{1, 0, 1});
    CHECK(counts_by_dim(boundary_simplex(3)) == std::vector<std::size_t>{4, 6, 4});
    CHECK(counts_by_dim(wedge_of_circles(2)) == std::vector<std::size_t>{1, 2});
    for (const char* spec : {"sphere:2", "sphere:3", "wedge:2", "boundary-simplex:2", "boundary-simplex:3", "simplex:3"})
    {
        CAPTURE(spec);
        CHECK(validate(builtin_complex(spec)).ok());
    }
    CHECK_THROWS_AS((void)builtin_complex("torus:2"), TopologyError);
}

TEST_CASE("validate reports exactly the corrupted identity")
{
    // d2 of the triangle should be 01
    const std::string text = R"({
      "name": "bad", "vertices": ["0", "1", "2"], "basepoint": "0",
      "generators": [
        {"name": "01", "dim": 1, "faces": ["1", "0"]},
        {"name": "12", "dim": 1, "faces": ["2", "1"]},
        {"name": "02", "dim": 1, "faces": ["2", "0"]},
        {"name": "012", "dim": 2, "faces": ["12", "02", "02"]}
      ]})";
    const auto rep = validate(parse_complex_json(text));
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == Violation::Kind::SimplicialIdentity);
    CHECK(rep.violations[0].generator == "012");
    CHECK(rep.violations[0].i == 0);
    CHECK(rep.violations[0].j == 2);
}

TEST_CASE("complex documents")
{
    const auto X = parse_complex_json(boundary_triangle_json);
    CHECK(X.name() == "triangle");
    CHECK(counts_by_dim(X) == std::vector<std::size_t>{3, 3});
    CHECK(validate(X).ok());

    const auto Y = parse_complex_json(to_json(X));
    REQUIRE(Y.size() == X.size());
    for (std::size_t k = 0; k < X.size(); ++k)
    {
        const GeneratorId id{static_cast<std::int32_t>(k)};
        CHECK(Y.generator(id).name == X.generator(id).name);
        CHECK(Y.generator(id).faces == X.generator(id).faces);
    }

    const auto D3 = standard_simplex(3);
    const auto back = parse_complex_json(to_json(D3));
    CHECK(back.size() == D3.size());
    CHECK(validate(back).ok());
}

TEST_CASE("complex document errors carry a position")
{
    try
    {
        (void)parse_complex_json("{\n  \"name\": \"x\",\n  \"vertices\": [\"0\",]\n}");
        FAIL("no error");
    }
    catch (const ParseError& e)
    {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
    }

    const std::string unknown = R"({"name": "x", "vertices": ["0"], "basepoint": "0",
      "generators": [{"name": "a", "dim": 1, "faces": ["0", "ghost"]}]})";
    try
    {
        (void)parse_complex_json(unknown);
        FAIL("no error");
    }
    catch (const TopologyError& e)
    {
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("facet lists")
{
    const auto X = parse_facets("# tetrahedron edges\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(counts_by_dim(X) == std::vector<std::size_t>{4, 6});
    CHECK(validate(X).ok());

    const auto T = parse_facets("0 1 2\n");
    CHECK(counts_by_dim(T) == std::vector<std::size_t>{3, 3, 1});

    try
    {
        (void)parse_facets("0 1\n0 x\n");
        FAIL("no error");
    }
    catch (const ParseError& e)
    {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}
