#include <doctest.h>

#include "necklical/cobar.hpp"
#include "necklical/complex_io.hpp"
#include "necklical/suites.hpp"

using namespace necklical;

namespace {

SimplexTerm letter(const LoopSpace& L, const char* name)
{
    return parse_letter(L.z(), name);
}

CobarMonomial mono(const LoopSpace& L, const char* text)
{
    return to_monomial(parse_word(L, text));
}

std::string data_file(const char* name)
{
    return std::string(NECKLICAL_TEST_DATA) + "/" + name;
}

}   // namespace

TEST_CASE("interior faces")
{
    const LoopSpace T(standard_simplex(2));
    const auto d = d_A(T, letter(T, "012"), Variant::Normalized);
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == letter(T, "02"));
    CHECK(d[0].second == -1);
    CHECK(d_A(T, letter(T, "01"), Variant::Normalized).empty());

    const LoopSpace S(sphere_quotient(2));
    CHECK(d_A(S, letter(S, "sigma"), Variant::Normalized).empty());
    CHECK(d_A(S, letter(S, "sigma"), Variant::DE).empty());
}

TEST_CASE("reduced diagonal")
{
    const LoopSpace D(standard_simplex(3));
    const auto two = aw_reduced(D, letter(D, "012"));
    REQUIRE(two.size() == 1);
    CHECK(two[0] == std::pair{letter(D, "01"), letter(D, "12")});
    CHECK(aw_reduced(D, letter(D, "01")).empty());

    const auto three = aw_reduced(D, letter(D, "0123"));
    REQUIRE(three.size() == 2);
    CHECK(three[0] == std::pair{letter(D, "01"), letter(D, "123")});
    CHECK(three[1] == std::pair{letter(D, "012"), letter(D, "23")});
}

TEST_CASE("cobar boundary of single letters")
{
    const LoopSpace S(sphere_quotient(2));
    CHECK(cobar_boundary(S, mono(S, "sigma"), Variant::Normalized).empty());

    const LoopSpace T(standard_simplex(2));
    const auto d = cobar_boundary(T, mono(T, "012"), Variant::Normalized);
    CHECK(format_cobar_chain(T, d) == "-[01|12] + [02]");
}

TEST_CASE("hat reduction cancels adjacent inverse edges")
{
    const LoopSpace W(wedge_of_circles(2));
    CHECK(hat_reduce(W, mono(W, "a;b;b^op;a^op")).letters.empty());
    CHECK(hat_reduce(W, mono(W, "a;b")).letters.size() == 2);
}

TEST_CASE("cobar d^2 = 0 on random monomials")
{
    int nonzero = 0;
    for (const char* spec : {"sphere:3", "boundary-simplex:3", "simplex:3", "wedge:2"})
    {
        const LoopSpace L(builtin_complex(spec));
        Rng rng(default_seed);
        SampleOptions o;
        o.degenerate_rate = 0.0;
        for (int k = 0; k < 300; ++k)
        {
            const CobarMonomial m = hat_reduce(L, to_monomial(random_loop(L, rng, o)));
            for (Variant v : {Variant::Normalized, Variant::DE})
            {
                const auto d = cobar_boundary(L, m, v);
                nonzero += d.empty() ? 0 : 1;
                CAPTURE(format_monomial(L, m));
                CHECK(cobar_boundary(L, d, v).empty());
            }
        }
    }
    CHECK(nonzero > 100);
}

TEST_CASE("loop and cobar boundaries agree")
{
    for (Variant v : {Variant::Normalized, Variant::DE})
    {
        const LoopSpace S(sphere_quotient(2));
        CHECK(compare_theorem2(S, 4, 4, v).ok());

        const LoopSpace B(boundary_simplex(3));
        const auto rep = compare_theorem2(B, 2, 4, v);
        CHECK(rep.words > 0);
        CHECK(rep.ok());

        const LoopSpace C(load_complex_file(data_file("wedge_cell.json")));
        const auto cell = compare_theorem2(C, 2, 4, v);
        CHECK(cell.words > 100);
        CHECK(cell.ok());
        for (const auto& m : cell.mismatches)
            MESSAGE(m.word << ": " << m.loop_side << " vs " << m.cobar_side);
    }
}

TEST_CASE("translation is a chain map on a nonzero boundary")
{
    const LoopSpace T(boundary_simplex(3));
    const LoopWord w = parse_word(T, "012;02^op");
    const auto lhs = translate(T, boundary<Integer>(T, w, Variant::Normalized));
    auto rhs = cobar_boundary(T, to_monomial(w), Variant::Normalized);
    for (auto& [m, c] : rhs)
        c = -c;
    CHECK_FALSE(lhs.empty());
    CHECK(lhs == rhs);
}

TEST_CASE("extended cobar")
{
    const LoopSpace W(wedge_of_circles(2));
    const ExtendedCobar E(W);

    SUBCASE("degree zero is the group ring")
    {
        for (int G = 0; G <= 3; ++G)
        {
            long want = 2;
            for (int q = 0; q < G; ++q)
                want *= 3;
            CHECK(static_cast<long>(E.basis(0, G).size()) == want - 1);
        }
    }

    SUBCASE("inverse runs merge to the unit")
    {
        const auto m = E.merge(mono(W, "a;a^op"));
        CHECK(m.items.empty());
        CHECK(E.format(m) == "1");
        CHECK(E.format(E.merge(mono(W, "a;b;b^op"))) == "{a}");
    }

    const LoopSpace C(load_complex_file(data_file("wedge_cell.json")));
    const ExtendedCobar EC(C);

    SUBCASE("degree one monomials are g sigma h")
    {
        const int G = 2;
        const long groups = static_cast<long>(EC.basis(0, G).size());   // includes the unit
        CHECK(static_cast<long>(EC.basis(1, G).size()) == groups * groups);
    }

    SUBCASE("boundary squares to zero")
    {
        const auto basis = EC.basis(1, 2);
        for (const auto& m : basis)
        {
            ExtendedChain dd;
            for (const auto& [n, c] : EC.boundary(m))
            {
                for (const auto& [q, k] : EC.boundary(n))
                {
                    dd[q] += c * k;
                    if (dd[q] == 0)
                        dd.erase(q);
                }
            }
            CHECK(dd.empty());
        }
        const auto sigma = EC.merge(mono(C, "sigma"));
        const auto d = EC.boundary(sigma);
        CHECK_FALSE(d.empty());
        for (const auto& [n, c] : d)
            CHECK(EC.degree(n) == 0);
    }

    CHECK_THROWS_AS((void)ExtendedCobar(LoopSpace(boundary_simplex(2))), TopologyError);
}
