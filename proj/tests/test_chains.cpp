#include <doctest.h>

#include "necklical/chains.hpp"
#include "necklical/complex_io.hpp"
#include "necklical/suites.hpp"

using namespace necklical;

namespace {

const char* fixtures[] = {"sphere:2", "sphere:3", "boundary-simplex:2", "boundary-simplex:3", "wedge:2", "simplex:3"};

Chain<Integer> gen(const LoopSpace& L, const char* text, Variant v = Variant::Normalized)
{
    return Chain<Integer>::word(L, parse_word(L, text), v);
}

}   // namespace

TEST_CASE("boundaries on the sphere vanish")
{
    const LoopSpace S(sphere_quotient(2));
    for (Variant v : {Variant::Normalized, Variant::DE})
    {
        CHECK(boundary(S, gen(S, "sigma", v)).is_zero_chain());
        CHECK(boundary(S, gen(S, "sigma;sigma", v)).is_zero_chain());
    }
}

TEST_CASE("boundary of a 2-simplex letter")
{
    const LoopSpace T(standard_simplex(2));
    const auto d = boundary(T, gen(T, "012;02^op"));
    Chain<Integer> want(Variant::Normalized);
    want.add(T, parse_word(T, "01;12;02^op"), 1);
    want.add(T, parse_word(T, "02;02^op"), -1);
    CHECK(d == want);
    CHECK(format_chain(T, d) == "-[<e>] + [01;12;02^op]");
}

TEST_CASE("products")
{
    const LoopSpace S(sphere_quotient(2));
    const auto e = Chain<Integer>::word(S, unit_word(S.basepoint()), Variant::Normalized);
    const auto s = gen(S, "sigma");
    CHECK(multiply(S, e, s) == s);
    CHECK(multiply(S, s, e) == s);
    CHECK(multiply(S, s, s) == gen(S, "sigma;sigma"));
    CHECK_THROWS_AS((void)multiply(S, s, gen(S, "sigma", Variant::DE)), TopologyError);
}

TEST_CASE("kill rules")
{
    const LoopSpace D(standard_simplex(3));
    // s1 of a 2-simplex is degenerate only in an interior direction
    const LoopWord inner = parse_word(D, "s1.013;03^op");
    CHECK(chain_generator(D, inner, Variant::DE).has_value());
    CHECK_FALSE(chain_generator(D, inner, Variant::Normalized).has_value());

    const LoopWord bottom = parse_word(D, "s0.013;03^op");
    CHECK_FALSE(chain_generator(D, bottom, Variant::DE).has_value());

    const LoopWord vertex = parse_word(D, "01;s1.s0.1;01^op");
    CHECK_FALSE(chain_generator(D, vertex, Variant::DE).has_value());

    CHECK(parse_variant("de") == Variant::DE);
    CHECK(parse_variant("norm") == Variant::Normalized);
    CHECK_THROWS_AS((void)parse_variant("x"), TopologyError);
    CHECK(basis_policy(Variant::DE) == LetterPolicy::InnerDegeneracies);
}

TEST_CASE("d^2 = 0 and the quotient map commutes with d")
{
    for (const char* spec : fixtures)
    {
        const LoopSpace L(builtin_complex(spec));
        SuiteOptions o;
        o.samples = 200;
        const auto res = dsq_suite(L, o);
        CAPTURE(spec);
        CHECK(res.ok());
        for (const auto& f : res.failures)
            MESSAGE(f);
    }
}

TEST_CASE("Leibniz rule")
{
    for (const char* spec : fixtures)
    {
        const LoopSpace L(builtin_complex(spec));
        SuiteOptions o;
        o.samples = 200;
        const auto res = leibniz_suite(L, o);
        CAPTURE(spec);
        CHECK(res.ok());
        for (const auto& f : res.failures)
            MESSAGE(f);
    }
}

TEST_CASE("chains over other scalars")
{
    const LoopSpace T(standard_simplex(2));
    const auto dq = boundary<Rational>(T, parse_word(T, "012;02^op"), Variant::Normalized);
    CHECK(dq.size() == 2);
    const auto half = dq.scaled(Rational(1, 2));
    CHECK(format_chain(T, half) == "-1/2 [<e>] + 1/2 [01;12;02^op]");

    const auto dp = boundary<ModP>(T, parse_word(T, "012;02^op"), Variant::Normalized);
    CHECK(dp.scaled(ModP(0, 5)).is_zero_chain());
}
