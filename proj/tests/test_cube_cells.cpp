#include <doctest.h>

#include <map>

#include "necklical/cube_cells.hpp"
#include "necklical/relations.hpp"
#include "necklical/suites.hpp"

using namespace necklical;

namespace {

long binomial(int n, int k)
{
    long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

}   // namespace

TEST_CASE("top cells")
{
    CHECK(format_cell(top_cell(3, false)) == "[0,1,2,3]");
    CHECK(cube_dim(top_cell(3, false)) == 2);
    CHECK(format_cell(top_cell(2, true)) == "0,1,2]");
    CHECK(cube_dim(top_cell(2, true)) == 2);
    CHECK(format_cell(top_cell(1, false)) == "[0,1]");
    CHECK(cube_dim(top_cell(1, false)) == 0);
}

TEST_CASE("cube faces")
{
    CHECK(format_cell(cube_face(parse_cell("[0,1,2,3]"), 2, 0)) == "[0,1,2][2,3]");
    CHECK(format_cell(cube_face(parse_cell("[0,1,2,3]"), 1, 1)) == "[0,2,3]");
    CHECK(format_cell(cube_face(parse_cell("0,1,2]"), 1, 0)) == "0][0,1,2]");
}

TEST_CASE("cube degeneracies")
{
    CHECK(format_cell(cube_degeneracy(parse_cell("[0,1,2]"), 2)) == "[0,1,1,2]");
    CHECK(format_cell(cube_degeneracy(parse_cell("[0,1]"), 1)) == "[0,0,1]");
    CHECK(is_degenerate(cube_degeneracy(parse_cell("[0,1]"), 1)));
    CHECK_FALSE(is_degenerate(parse_cell("[0,1][1,2]")));
}

TEST_CASE("psi")
{
    CHECK(psi(parse_cell("0,1,2]")) == std::vector<int>{0, 1, 2});
    CHECK(psi(parse_cell("0][0,1,2]")) == std::vector<int>{0});
    CHECK(psi(parse_cell("0,2][2,3]")) == std::vector<int>{0, 2});
}

TEST_CASE("cell counts match the faces of a cube")
{
    // I^m has binomial(m, k) 2^(m-k) faces of dimension k
    for (int n = 1; n <= 6; ++n)
    {
        for (bool aug : {false, true})
        {
            const int m = aug ? n : n - 1;
            std::map<int, long> by_dim;
            for (const auto& c : enumerate_cube_cells(n, aug))
            {
                CHECK(is_valid(c));
                CHECK_FALSE(is_degenerate(c));
                ++by_dim[cube_dim(c)];
            }
            for (int k = 0; k <= m; ++k)
            {
                CAPTURE(n);
                CAPTURE(aug);
                CHECK(by_dim[k] == binomial(m, k) * (1L << (m - k)));
            }
        }
    }
}

TEST_CASE("cell literals round-trip")
{
    for (bool aug : {false, true})
    {
        for (const auto& c : enumerate_cube_cells(4, aug))
            CHECK(parse_cell(format_cell(c)) == c);
    }
    CHECK_THROWS_AS((void)parse_cell("[0,2,1]"), std::exception);
    CHECK_THROWS_AS((void)parse_cell("[0,1"), std::exception);
}

TEST_CASE("degeneracy followed by the matching d^1 is the identity on I^4")
{
    const CubeModel m;
    int checked = 0;
    for (bool aug : {false, true})
    {
        for (const auto& c : enumerate_cube_cells(4, aug))
        {
            const int d = cube_dim(c);
            const int slots = d + block_count(c) + (aug ? 0 : 1);
            for (int j = 1; j <= slots; ++j)
            {
                const auto up = cube_degeneracy(c, j);
                bool found = false;
                for (int i = 1; i <= cube_dim(up); ++i)
                    found = found || m.normalize(cube_face_raw(up, i, 1)) == m.normalize(c);
                CHECK(found);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("relation systems hold on every cell of I^4 and I^4_aug")
{
    const auto res = cube_suite(4);
    CHECK(res.checked > 1000);
    CHECK(res.ok());
}

TEST_CASE("the uniform early-face rule is refuted by the cube model")
{
    const auto res = cube_suite(4, EarlyFaceRule::Uniform);
    CHECK(res.failed > 0);
    REQUIRE_FALSE(res.failures.empty());
    CHECK(res.failures.front().find("d") != std::string::npos);
}
