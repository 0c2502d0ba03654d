#ifndef NECKLICAL_HOMOLOGY_HPP
#define NECKLICAL_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "necklical/chains.hpp"

namespace necklical {

using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

struct Triplet
{
    int row = 0;
    int col = 0;
    Integer value;
};

/// rows x cols integer matrix as (row, col, value) triples, sorted by (row, col),
/// no zeros stored.
class SparseIntMatrix
{
  public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    /// Sums duplicates and drops zeros.
    static SparseIntMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);
    static SparseIntMatrix from_dense(const IntegerMatrix& m);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const std::vector<Triplet>& entries() const { return entries_; }
    [[nodiscard]] std::size_t nonzeros() const { return entries_.size(); }
    [[nodiscard]] bool is_zero() const { return entries_.empty(); }

    [[nodiscard]] IntegerMatrix to_dense() const;
    /// Keeps the listed columns, in the given order.
    [[nodiscard]] SparseIntMatrix select_columns(const std::vector<int>& keep) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Triplet> entries_;
};

struct SmithForm
{
    std::vector<Integer> factors;   // positive, d_1 | d_2 | ...
    std::size_t rank = 0;

    /// Factors greater than one.
    [[nodiscard]] std::vector<Integer> torsion() const;
};

/// Minimal-magnitude pivoting, then a gcd/lcm pass to restore divisibility.
[[nodiscard]] SmithForm smith_normal_form(const SparseIntMatrix& m);

[[nodiscard]] std::size_t rank_rational(const SparseIntMatrix& m);
[[nodiscard]] std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

// -- coefficients -----------------------------------------------------------------

struct CoefficientSpec
{
    enum class Kind
    {
        Integers,
        Rationals,
        Prime,
    };
    Kind kind = Kind::Integers;
    std::uint64_t prime = 0;
};

/// `z`, `q`, `p:<prime>`.
[[nodiscard]] CoefficientSpec parse_coefficients(std::string_view text);
[[nodiscard]] std::string to_string(const CoefficientSpec& c);

// -- boundary assembly ---------------------------------------------------------------

/**
 * d_n from the degree-n window into degree n-1. Rows are the degree n-1
 * window followed by any words outside it hit by a boundary; `flagged`
 * lists the columns whose boundary leaves the window.
 */
struct BoundaryMatrix
{
    int degree = 0;
    std::vector<LoopWord> domain;
    std::vector<LoopWord> codomain;
    std::size_t window_rows = 0;
    std::vector<int> flagged;
    SparseIntMatrix matrix;

    [[nodiscard]] std::vector<int> unflagged() const;
};

/// Generators of the degree-n chains with at most max_length letters.
[[nodiscard]] std::vector<LoopWord> chain_basis(const LoopSpace& L, int degree, int max_length, Variant v);

[[nodiscard]] BoundaryMatrix boundary_matrix(const LoopSpace& L, int degree, Variant v, int max_length);

// -- homology -------------------------------------------------------------------------

struct HomologyRow
{
    int degree = 0;
    Variant variant = Variant::Normalized;
    CoefficientSpec coefficients;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    int max_length = 0;
    std::size_t window = 0;           // dim of the degree-n window
    std::size_t flagged_columns = 0;  // in degrees n and n+1
    bool exact = false;               // windows are complete
    bool stabilized = false;          // set by stabilization_scan

    [[nodiscard]] std::string group() const;   // "Z^2 + Z/3", "0", "F_5^2"
    friend bool operator==(const HomologyRow& a, const HomologyRow& b)
    {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

/// Smallest length cap that makes the degree-n computation exact, when one exists.
[[nodiscard]] std::optional<int> exact_length(const LoopSpace& L, int degree);

/// Without a cap the complex must be finite per degree.
[[nodiscard]] HomologyRow homology(const LoopSpace& L, int degree, Variant v, const CoefficientSpec& c,
                                   std::optional<int> max_length = std::nullopt);

/// Rows for caps from..to; a row is stabilized when it agrees with the previous one.
[[nodiscard]] std::vector<HomologyRow> stabilization_scan(const LoopSpace& L, int degree, Variant v,
                                                          const CoefficientSpec& c, int from, int to);

}   // namespace necklical

#endif
