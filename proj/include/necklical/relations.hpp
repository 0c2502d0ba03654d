#ifndef NECKLICAL_RELATIONS_HPP
#define NECKLICAL_RELATIONS_HPP

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "necklical/cube_cells.hpp"
#include "necklical/loop_space.hpp"
#include "necklical/path_space.hpp"

namespace necklical {

/// Simplex dimensions of the beads of a cell; in an augmented layout the
/// first bead is the base and all of its vertices but the last are coordinates.
struct BeadLayout
{
    std::vector<int> dims;
    bool augmented = false;
};

struct RelationFailure
{
    std::string relation;
    std::string cell;
    std::string lhs;
    std::string rhs;
};

struct RelationReport
{
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<RelationFailure> failures;   // the first few, for display
    std::size_t keep = 8;

    [[nodiscard]] bool ok() const { return failed == 0; }

    void record(RelationFailure f)
    {
        ++failed;
        if (failures.size() < keep)
            failures.push_back(std::move(f));
    }

    void merge(const RelationReport& other)
    {
        checked += other.checked;
        for (const auto& f : other.failures)
        {
            if (failures.size() < keep)
                failures.push_back(f);
        }
        failed += other.failed;
    }
};

/// Which rule to apply to d^0_i eta_j when i lies before the repeated vertex.
/// `Derived` uses eta_j d^0_i (a split does not change the vertex count);
/// `Uniform` uses eta_{j-1} for both directions.
enum class EarlyFaceRule
{
    Derived,
    Uniform,
};

// -- models ----------------------------------------------------------------------

struct CubeModel
{
    using Cell = CubeCellLabel;

    [[nodiscard]] int dim(const Cell& c) const { return cube_dim(c); }
    [[nodiscard]] BeadLayout layout(const Cell& c) const
    {
        BeadLayout l{{}, c.augmented};
        for (const auto& b : c.blocks)
            l.dims.push_back(static_cast<int>(b.size()) - 1);
        return l;
    }
    [[nodiscard]] Cell face(const Cell& c, int i, int eps) const { return cube_face_raw(c, i, eps); }
    [[nodiscard]] Cell degeneracy(const Cell& c, int j) const { return cube_degeneracy(c, j); }
    [[nodiscard]] Cell normalize(Cell c) const { return cube_normalize(std::move(c)); }
    [[nodiscard]] std::string render(const Cell& c) const { return format_cell(c); }
};

struct WordModel
{
    using Cell = LoopWord;
    const LoopSpace* L = nullptr;

    [[nodiscard]] int dim(const Cell& w) const { return degree(*L, w); }
    [[nodiscard]] BeadLayout layout(const Cell& w) const { return {bead_dims(*L, w), false}; }
    [[nodiscard]] Cell face(const Cell& w, int i, int eps) const { return word_face_raw(*L, w, i, eps); }
    [[nodiscard]] Cell degeneracy(const Cell& w, int j) const { return word_degeneracy(*L, w, j); }
    [[nodiscard]] Cell normalize(Cell w) const { return reduce(*L, std::move(w)); }
    [[nodiscard]] std::string render(const Cell& w) const { return format_word(*L, w); }
};

struct PathModel
{
    using Cell = PathCell;
    const LoopSpace* L = nullptr;

    [[nodiscard]] int dim(const Cell& c) const { return necklical::dim(*L, c); }
    [[nodiscard]] BeadLayout layout(const Cell& c) const
    {
        BeadLayout l{{necklical::dim(L->z(), c.base)}, true};
        for (const auto& t : c.tail.letters)
            l.dims.push_back(necklical::dim(L->z(), t));
        return l;
    }
    [[nodiscard]] Cell face(const Cell& c, int i, int eps) const { return path_face_raw(*L, c, i, eps); }
    [[nodiscard]] Cell degeneracy(const Cell& c, int j) const { return path_degeneracy_raw(*L, c, j); }
    [[nodiscard]] Cell normalize(Cell c) const { return canonical(*L, std::move(c)); }
    [[nodiscard]] std::string render(const Cell& c) const { return format_path_cell(*L, c); }
};

// -- checks ------------------------------------------------------------------------

namespace detail {

template <class Model>
void compare(const Model& m, RelationReport& rep, const typename Model::Cell& cell, std::string relation,
             const typename Model::Cell& lhs, const typename Model::Cell& rhs)
{
    ++rep.checked;
    auto a = m.normalize(lhs);
    auto b = m.normalize(rhs);
    if (a != b)
        rep.record({std::move(relation), m.render(cell), m.render(a), m.render(b)});
}

inline std::string face_name(int i, int eps)
{
    return "d" + std::to_string(i) + "^" + std::to_string(eps);
}

// Positions of the two copies of the repeated vertex of eta_j, as coordinates
// of the degenerate cell; a copy that is not a coordinate is marked invalid.
struct CopySlots
{
    int first = 0;
    int second = 0;
    bool first_valid = false;
    bool second_valid = false;
};

inline CopySlots locate(const BeadLayout& l, int j)
{
    int g = j - 1;
    int before = 0;   // coordinates of earlier beads
    for (std::size_t r = 0; r < l.dims.size(); ++r)
    {
        const int m = l.dims[r];
        const bool aug = l.augmented && r == 0;
        const int owned = r == 0 ? m + 1 : m;
        if (g < owned)
        {
            const int t = r == 0 ? g : g + 1;
            CopySlots s;
            if (aug)
            {
                s.first = t + 1;
                s.second = t + 2;
                s.first_valid = true;
                s.second_valid = t + 1 <= m;
            }
            else
            {
                s.first = before + t;
                s.second = before + t + 1;
                s.first_valid = t >= 1;
                s.second_valid = t + 1 <= m;
            }
            return s;
        }
        g -= owned;
        before += aug ? m : m - 1;
    }
    return {};
}

}   // namespace detail

/// d_j^e d_i^e' = d_i^e' d_{j+1}^e for i <= j.
template <class Model>
RelationReport check_cubical(const Model& m, const typename Model::Cell& c)
{
    RelationReport rep;
    const int n = m.dim(c);
    for (int i = 1; i < n; ++i)
    {
        for (int j = i; j < n; ++j)
        {
            for (int e = 0; e < 2; ++e)
            {
                for (int e2 = 0; e2 < 2; ++e2)
                {
                    detail::compare(m, rep, c,
                                    detail::face_name(j, e) + " " + detail::face_name(i, e2) + " = " +
                                        detail::face_name(i, e2) + " " + detail::face_name(j + 1, e),
                                    m.face(m.face(c, i, e2), j, e), m.face(m.face(c, j + 1, e), i, e2));
                }
            }
        }
    }
    return rep;
}

/// Every face of every degeneracy of c, against the mixed relation table.
template <class Model>
RelationReport check_face_degeneracy(const Model& m, const typename Model::Cell& c,
                                     EarlyFaceRule rule = EarlyFaceRule::Derived)
{
    RelationReport rep;
    const BeadLayout l = m.layout(c);
    const int total = std::accumulate(l.dims.begin(), l.dims.end(), 0) + 1;
    for (int j = 1; j <= total; ++j)
    {
        const auto e = m.degeneracy(c, j);
        const int n = m.dim(e);
        const auto s = detail::locate(l, j);
        const int lo = s.first_valid ? s.first : s.second;
        const int hi = s.second_valid ? s.second : s.first;
        const std::string eta = "eta" + std::to_string(j);
        for (int i = 1; i <= n; ++i)
        {
            for (int eps = 0; eps < 2; ++eps)
            {
                const auto lhs = m.face(e, i, eps);
                const std::string name = detail::face_name(i, eps) + " " + eta;
                const bool copy = (s.first_valid && i == s.first) || (s.second_valid && i == s.second);
                if (copy)
                {
                    if (eps == 0 && s.first_valid && s.second_valid)
                    {
                        if (i == s.first)
                            detail::compare(m, rep, c, name + " = " + detail::face_name(s.second, 0) + " " + eta,
                                            lhs, m.face(e, s.second, 0));
                    }
                    else
                    {
                        detail::compare(m, rep, c, name + " = id", lhs, c);
                    }
                }
                else if (i < lo)
                {
                    const int shift = (eps == 1 || rule == EarlyFaceRule::Uniform) ? 1 : 0;
                    detail::compare(m, rep, c,
                                    name + " = eta" + std::to_string(j - shift) + " " + detail::face_name(i, eps),
                                    lhs, m.degeneracy(m.face(c, i, eps), j - shift));
                }
                else if (i > hi)
                {
                    detail::compare(m, rep, c, name + " = " + eta + " " + detail::face_name(i - 1, eps), lhs,
                                    m.degeneracy(m.face(c, i - 1, eps), j));
                }
            }
        }
    }
    return rep;
}

/// eta_i eta_j = eta_j eta_{i-1} for i > j.
template <class Model>
RelationReport check_degeneracies(const Model& m, const typename Model::Cell& c)
{
    RelationReport rep;
    const BeadLayout l = m.layout(c);
    const int total = std::accumulate(l.dims.begin(), l.dims.end(), 0) + 1;
    for (int j = 1; j <= total; ++j)
    {
        for (int i = j + 1; i <= total + 1; ++i)
        {
            detail::compare(m, rep, c,
                            "eta" + std::to_string(i) + " eta" + std::to_string(j) + " = eta" + std::to_string(j) +
                                " eta" + std::to_string(i - 1),
                            m.degeneracy(m.degeneracy(c, j), i), m.degeneracy(m.degeneracy(c, i - 1), j));
        }
    }
    return rep;
}

template <class Model>
RelationReport check_all(const Model& m, const typename Model::Cell& c, EarlyFaceRule rule = EarlyFaceRule::Derived)
{
    RelationReport rep = check_cubical(m, c);
    rep.merge(check_face_degeneracy(m, c, rule));
    rep.merge(check_degeneracies(m, c));
    return rep;
}

}   // namespace necklical

#endif
