// Independent reference implementations used by the unit and acceptance tests.
#ifndef NECKLICAL_TESTS_ORACLES_HPP
#define NECKLICAL_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "necklical/homology.hpp"

namespace oracle {

using necklical::Integer;
using necklical::IntegerMatrix;

inline Integer abs_int(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, int max_side, int lo, int hi)
{
    std::uniform_int_distribution<int> side(1, max_side);
    std::uniform_int_distribution<int> entry(lo, hi);
    std::uniform_int_distribution<int> sparsity(0, 3);
    const int r = side(rng);
    const int c = side(rng);
    const bool sparse = sparsity(rng) == 0;
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i)
    {
        for (int j = 0; j < c; ++j)
            m(i, j) = (sparse && sparsity(rng) != 0) ? 0 : entry(rng);
    }
    return m;
}

/// Textbook Smith normal form by elementary row and column operations on a
/// dense copy: move a smallest entry to the corner, clear its row and column,
/// and fold in any row whose entries the corner does not divide.
inline std::vector<Integer> snf_elementary(IntegerMatrix a)
{
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Integer> out;
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t)
    {
        for (;;)
        {
            Eigen::Index pi = -1;
            Eigen::Index pj = -1;
            for (Eigen::Index i = t; i < rows; ++i)
            {
                for (Eigen::Index j = t; j < cols; ++j)
                {
                    if (a(i, j) != 0 && (pi < 0 || abs_int(a(i, j)) < abs_int(a(pi, pj))))
                    {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0)
                return out;
            a.row(t).swap(a.row(pi));
            a.col(t).swap(a.col(pj));

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i)
            {
                const Integer q = a(i, t) / a(t, t);
                for (Eigen::Index j = t; j < cols; ++j)
                    a(i, j) -= q * a(t, j);
                clean = clean && a(i, t) == 0;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j)
            {
                const Integer q = a(t, j) / a(t, t);
                for (Eigen::Index i = t; i < rows; ++i)
                    a(i, j) -= q * a(i, t);
                clean = clean && a(t, j) == 0;
            }
            if (!clean)
                continue;

            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
            {
                for (Eigen::Index j = t + 1; j < cols; ++j)
                {
                    if (a(i, j) % a(t, t) != 0)
                    {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad < 0)
                break;
            for (Eigen::Index j = t; j < cols; ++j)
                a(t, j) += a(bad, j);
        }
        out.push_back(abs_int(a(t, t)));
    }
    return out;
}

/// Fraction-free determinant.
inline Integer bareiss_det(IntegerMatrix a)
{
    const Eigen::Index n = a.rows();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k)
    {
        if (a(k, k) == 0)
        {
            Eigen::Index s = k + 1;
            while (s < n && a(s, k) == 0)
                ++s;
            if (s == n)
                return 0;
            a.row(k).swap(a.row(s));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
        {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur;
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(cur.size()) == k)
        {
            out.push_back(cur);
            return;
        }
        for (int x = from; x < n; ++x)
        {
            cur.push_back(x);
            go(x + 1);
            cur.pop_back();
        }
    };
    go(0);
}

/// Invariant factors as ratios of determinantal divisors (gcds of k x k minors).
inline std::vector<Integer> snf_determinantal(const IntegerMatrix& a)
{
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    std::vector<Integer> out;
    Integer previous = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k)
    {
        std::vector<std::vector<int>> rs;
        std::vector<std::vector<int>> cs;
        subsets(rows, k, rs);
        subsets(cols, k, cs);
        Integer g = 0;
        for (const auto& r : rs)
        {
            for (const auto& c : cs)
            {
                IntegerMatrix minor(k, k);
                for (int i = 0; i < k; ++i)
                {
                    for (int j = 0; j < k; ++j)
                        minor(i, j) = a(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
                }
                g = boost::integer::gcd(g, abs_int(bareiss_det(minor)));
            }
        }
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

/// Number of reduced words of each length <= max_length over r letters and
/// their inverses, by listing every word over the 2r symbols.
inline std::vector<long> reduced_word_counts(int r, int max_length)
{
    std::vector<long> counts(static_cast<std::size_t>(max_length + 1), 0);
    const int symbols = 2 * r;   // symbol s has inverse s ^ 1
    for (int len = 0; len <= max_length; ++len)
    {
        std::vector<int> w(static_cast<std::size_t>(len), 0);
        for (;;)
        {
            bool reduced = true;
            for (int k = 0; k + 1 < len && reduced; ++k)
                reduced = (w[static_cast<std::size_t>(k)] ^ 1) != w[static_cast<std::size_t>(k + 1)];
            if (reduced)
                ++counts[static_cast<std::size_t>(len)];
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == symbols - 1)
                w[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0)
                break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return counts;
}

/// Simplices of the standard simplex as weakly increasing vertex lists.
struct VertexList
{
    std::vector<int> v;

    [[nodiscard]] VertexList face(int i) const
    {
        VertexList out = *this;
        out.v.erase(out.v.begin() + i);
        return out;
    }

    [[nodiscard]] VertexList degeneracy(int j) const
    {
        VertexList out = *this;
        out.v.insert(out.v.begin() + j, v[static_cast<std::size_t>(j)]);
        return out;
    }

    /// Generator name (distinct vertices) and degeneracy positions k with v_k = v_{k+1}.
    [[nodiscard]] std::pair<std::string, std::vector<int>> normal_form() const
    {
        std::string name;
        std::vector<int> degs;
        for (std::size_t k = 0; k < v.size(); ++k)
        {
            if (k + 1 < v.size() && v[k] == v[k + 1])
                degs.push_back(static_cast<int>(k));
            else
                name += std::to_string(v[k]);
        }
        return {name, degs};
    }
};

}   // namespace oracle

#endif
