#include <doctest.h>

#include <numeric>

#include "necklical/complex_io.hpp"
#include "necklical/homology.hpp"
#include "necklical/suites.hpp"
#include "oracles.hpp"

using namespace necklical;

namespace {

IntegerMatrix dense(std::initializer_list<std::initializer_list<int>> rows)
{
    IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows)
    {
        Eigen::Index j = 0;
        for (int x : r)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

bool same(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
    {
        for (Eigen::Index j = 0; j < a.cols(); ++j)
        {
            if (a(i, j) != b(i, j))
                return false;
        }
    }
    return true;
}

std::vector<Integer> factors(const IntegerMatrix& m)
{
    return smith_normal_form(SparseIntMatrix::from_dense(m)).factors;
}

}   // namespace

TEST_CASE("boundary matrices")
{
    const LoopSpace S2(sphere_quotient(2));
    const auto b1 = boundary_matrix(S2, 1, Variant::Normalized, 2);
    CHECK(b1.matrix.rows() == 1);
    CHECK(b1.matrix.cols() == 1);
    CHECK(b1.matrix.is_zero());

    const LoopSpace S3(sphere_quotient(3));
    CHECK(boundary_matrix(S3, 2, Variant::Normalized, 3).matrix.is_zero());

    const LoopSpace W1(wedge_of_circles(1));
    const auto w = boundary_matrix(W1, 1, Variant::Normalized, 2);
    CHECK(w.matrix.cols() == 0);
    CHECK(w.matrix.is_zero());
}

TEST_CASE("boundary matrix columns match chain boundaries")
{
    const LoopSpace L(boundary_simplex(3));
    const auto b = boundary_matrix(L, 1, Variant::Normalized, 3);
    REQUIRE(b.domain.size() == static_cast<std::size_t>(b.matrix.cols()));
    const IntegerMatrix m = b.matrix.to_dense();
    for (int c = 0; c < b.matrix.cols(); ++c)
    {
        const auto d = boundary<Integer>(L, b.domain[static_cast<std::size_t>(c)], Variant::Normalized);
        Integer total = 0;
        for (int r = 0; r < b.matrix.rows(); ++r)
        {
            if (m(r, c) == 0)
                continue;
            const auto& row = b.codomain[static_cast<std::size_t>(r)];
            REQUIRE(d.terms().count(row) == 1);
            CHECK(d.terms().at(row) == m(r, c));
            total += 1;
        }
        CHECK(total == static_cast<long>(d.size()));
    }
}

TEST_CASE("Smith normal form examples")
{
    CHECK(factors(dense({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
    const auto z = smith_normal_form(SparseIntMatrix(1, 1));
    CHECK(z.factors.empty());
    CHECK(z.rank == 0);
    CHECK(factors(dense({{0, 2}, {3, 0}})) == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(SparseIntMatrix::from_dense(dense({{2, 0}, {0, 3}, {0, 0}}))).torsion() ==
          std::vector<Integer>{6});
}

TEST_CASE("oracles agree with each other on known cases")
{
    const auto m = dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(oracle::snf_elementary(m) == std::vector<Integer>{2, 6, 12});
    CHECK(oracle::snf_determinantal(m) == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("Smith normal form agrees with the elementary-operation oracle")
{
    std::mt19937_64 rng(default_seed);
    for (int k = 0; k < 200; ++k)
    {
        const IntegerMatrix m = oracle::random_matrix(rng, 6, -9, 9);
        const auto got = factors(m);
        CAPTURE(k);
        CHECK(got == oracle::snf_elementary(m));
        if (m.rows() <= 5 && m.cols() <= 5)
            CHECK(got == oracle::snf_determinantal(m));
    }
}

TEST_CASE("Smith normal form is invariant under permutations")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k)
    {
        IntegerMatrix m = oracle::random_matrix(rng, 6, -9, 9);
        const auto base = factors(m);
        std::vector<Eigen::Index> rows(static_cast<std::size_t>(m.rows()));
        std::vector<Eigen::Index> cols(static_cast<std::size_t>(m.cols()));
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        IntegerMatrix p(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
        {
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                p(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        }
        CHECK(factors(p) == base);
    }
}

TEST_CASE("field ranks")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k)
    {
        const IntegerMatrix m = oracle::random_matrix(rng, 6, -9, 9);
        const auto s = SparseIntMatrix::from_dense(m);
        const auto snf = smith_normal_form(s);
        CHECK(rank_rational(s) == snf.rank);
        for (std::uint64_t p : {2, 3, 5, 7})
        {
            std::size_t units = 0;
            for (const auto& f : snf.factors)
                units += (f % Integer(p) != 0) ? 1 : 0;
            CHECK(rank_mod_p(s, p) == units);
        }
    }
}

TEST_CASE("sparse matrices")
{
    const auto m = SparseIntMatrix::from_triplets(2, 3, {{0, 1, 2}, {0, 1, -2}, {1, 2, 5}, {1, 0, 1}});
    CHECK(m.nonzeros() == 2);
    CHECK(same(m.to_dense(), dense({{0, 0, 0}, {1, 0, 5}})));
    CHECK(same(m.select_columns({2, 0}).to_dense(), dense({{0, 0}, {5, 1}})));
    CHECK_THROWS_AS((void)SparseIntMatrix::from_triplets(1, 1, {{1, 0, 1}}), TopologyError);
}

TEST_CASE("coefficient specs")
{
    CHECK(parse_coefficients("z").kind == CoefficientSpec::Kind::Integers);
    CHECK(parse_coefficients("q").kind == CoefficientSpec::Kind::Rationals);
    CHECK(parse_coefficients("p:7").prime == 7);
    CHECK(to_string(parse_coefficients("p:7")) == "p:7");
    CHECK_THROWS_AS((void)parse_coefficients("p:4"), TopologyError);
    CHECK_THROWS_AS((void)parse_coefficients("r"), TopologyError);
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(1000000007));
}

TEST_CASE("homology of spheres")
{
    const LoopSpace S2(sphere_quotient(2));
    for (int n = 0; n <= 6; ++n)
    {
        const auto h = homology(S2, n, Variant::Normalized, {});
        CHECK(h.group() == "Z");
        CHECK(h.exact);
    }
    const LoopSpace S3(sphere_quotient(3));
    for (int n = 0; n <= 8; ++n)
    {
        for (Variant v : {Variant::Normalized, Variant::DE})
        {
            const auto h = homology(S3, n, v, {});
            CAPTURE(n);
            CHECK(h.group() == (n % 2 == 0 ? "Z" : "0"));
        }
    }
    const auto f = homology(S3, 4, Variant::Normalized, parse_coefficients("p:5"));
    CHECK(f.group() == "F_5");
}

TEST_CASE("degree zero of the wedge is the truncated group ring")
{
    const LoopSpace W(wedge_of_circles(2));
    for (int K = 0; K <= 4; ++K)
    {
        long want = 2;
        for (int q = 0; q < K; ++q)
            want *= 3;
        const auto h = homology(W, 0, Variant::Normalized, {}, K);
        CHECK(static_cast<long>(h.free_rank) == want - 1);
        CHECK(h.torsion.empty());
        CHECK_FALSE(h.exact);
    }
    CHECK_THROWS_AS((void)homology(W, 0, Variant::Normalized, {}), TopologyError);
}

TEST_CASE("field Betti numbers match integer ranks without p-torsion")
{
    for (const char* spec : {"boundary-simplex:3", "simplex:3"})
    {
        const LoopSpace L(builtin_complex(spec));
        for (int n = 0; n <= 2; ++n)
        {
            const auto z = homology(L, n, Variant::Normalized, {}, 3);
            const auto q = homology(L, n, Variant::Normalized, parse_coefficients("q"), 3);
            CHECK(q.free_rank == z.free_rank);
            for (std::uint64_t p : {2, 3, 5})
            {
                bool divisible = false;
                for (const auto& t : z.torsion)
                    divisible = divisible || t % Integer(p) == 0;
                if (divisible)
                    continue;
                const auto f = homology(L, n, Variant::Normalized, parse_coefficients("p:" + std::to_string(p)), 3);
                CHECK(f.free_rank == z.free_rank);
            }
        }
    }
}

TEST_CASE("ranks of consecutive boundaries fit in the chain group")
{
    for (const char* spec : {"boundary-simplex:3", "simplex:3", "sphere:3", "wedge:2"})
    {
        const LoopSpace L(builtin_complex(spec));
        for (Variant v : {Variant::Normalized, Variant::DE})
        {
            for (int n = 0; n <= 2; ++n)
            {
                const int K = 3;
                const auto dn = boundary_matrix(L, n, v, K);
                const auto up = boundary_matrix(L, n + 1, v, K);
                const auto dim = chain_basis(L, n, K, v).size();
                const auto r1 = rank_rational(dn.matrix);
                const auto r2 = rank_rational(up.matrix);
                CAPTURE(spec);
                CAPTURE(n);
                CHECK(r1 + r2 <= dim + (up.matrix.rows() - static_cast<int>(up.window_rows)));
                CHECK(rank_rational(up.matrix.select_columns(up.unflagged())) + r1 <= dim);
            }
        }
    }
}

TEST_CASE("stabilization scan")
{
    const LoopSpace S2(sphere_quotient(2));
    const auto rows = stabilization_scan(S2, 2, Variant::Normalized, {}, 1, 5);
    REQUIRE(rows.size() == 5);
    CHECK(rows.back().stabilized);
    CHECK(rows.back().group() == "Z");
}
