#ifndef NECKLICAL_COBAR_HPP
#define NECKLICAL_COBAR_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "necklical/chains.hpp"

namespace necklical {

/// [a_1-bar | ... | a_k-bar]: desuspended simplices of Z(X), composable from
/// source to target. The empty monomial is the unit.
struct CobarMonomial
{
    std::vector<SimplexTerm> letters;
    GeneratorId source;
    GeneratorId target;

    auto operator<=>(const CobarMonomial&) const = default;
};

using CobarChain = std::map<CobarMonomial, Integer>;

/// Zero in the coalgebra: a vertex degeneracy of positive dimension (DE), or
/// any degenerate simplex (NORMALIZED).
[[nodiscard]] bool is_zero_letter(const LoopSpace& L, const SimplexTerm& a, Variant v);

/// Desuspended degree dim(a) - 1 summed over the letters.
[[nodiscard]] int degree(const LoopSpace& L, const CobarMonomial& m);

/// sum_{i=1}^{n-1} (-1)^i d_i a with zero letters dropped and equal terms merged.
[[nodiscard]] std::vector<std::pair<SimplexTerm, int>> d_A(const LoopSpace& L, const SimplexTerm& a, Variant v);

/// Front/back splits (0..i | i..n) for 0 < i < n.
[[nodiscard]] std::vector<std::pair<SimplexTerm, SimplexTerm>> aw_reduced(const LoopSpace& L, const SimplexTerm& a);

/// Cancels adjacent [a | a^op] pairs of 1-simplices.
[[nodiscard]] CobarMonomial hat_reduce(const LoopSpace& L, CobarMonomial m);

/**
 * d_1 + d_2 extended as a derivation: on the slot r the sign is (-1) to the sum
 * of desuspended degrees of the earlier letters; d_1[a] = -[d_A a] and
 * d_2[a] = sum (-1)^{|a'|} [a' | a'']. Outputs are hat-reduced; monomials with
 * a zero letter are dropped.
 */
[[nodiscard]] CobarChain cobar_boundary(const LoopSpace& L, const CobarMonomial& m, Variant v);
[[nodiscard]] CobarChain cobar_boundary(const LoopSpace& L, const CobarChain& c, Variant v);

[[nodiscard]] CobarMonomial to_monomial(const LoopWord& w);
[[nodiscard]] LoopWord to_word(const CobarMonomial& m);

/// `[02|12^op]`; the unit prints as `[]`.
[[nodiscard]] std::string format_monomial(const LoopSpace& L, const CobarMonomial& m);
[[nodiscard]] std::string format_cobar_chain(const LoopSpace& L, const CobarChain& c);

// -- comparison with the loop-space chains ------------------------------------------

struct Theorem2Mismatch
{
    std::string word;         // literal of the generator
    std::string loop_side;    // translated loop boundary
    std::string cobar_side;   // cobar boundary
};

struct Theorem2Report
{
    Variant variant = Variant::Normalized;
    std::size_t words = 0;
    std::vector<Theorem2Mismatch> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// The chain isomorphism w -> (-1)^{deg w} [w].
[[nodiscard]] CobarChain translate(const LoopSpace& L, const Chain<Integer>& ch);

/**
 * For every loop of degree <= max_degree and length <= max_length with
 * nondegenerate letters, compares the translated loop boundary with the cobar
 * boundary of the translated loop.
 */
[[nodiscard]] Theorem2Report compare_theorem2(const LoopSpace& L, int max_degree, int max_length, Variant v);

// -- single-vertex extended cobar --------------------------------------------------------

/// A factor of an extended monomial: either an element of the free group on
/// the 1-simplices (a nonempty reduced word, inverse letters written a^op) or
/// a single simplex of dimension >= 2.
struct ExtendedItem
{
    bool group = false;
    std::vector<SimplexTerm> letters;

    auto operator<=>(const ExtendedItem&) const = default;
};

/// Alternating product; adjacent group factors are always merged.
struct ExtendedMonomial
{
    std::vector<ExtendedItem> items;

    auto operator<=>(const ExtendedMonomial&) const = default;
};

using ExtendedChain = std::map<ExtendedMonomial, Integer>;

/**
 * The cobar complex of a one-vertex complex with the degree-zero part
 * replaced by the group ring of the free group on the 1-simplices, in the
 * normalized variant. Every nondegenerate 1-simplex is a cycle, so the
 * 1-simplices themselves form the chosen cycle basis.
 */
class ExtendedCobar
{
  public:
    explicit ExtendedCobar(const LoopSpace& L);

    [[nodiscard]] ExtendedMonomial merge(const CobarMonomial& m) const;
    [[nodiscard]] CobarMonomial expand(const ExtendedMonomial& m) const;

    [[nodiscard]] int degree(const ExtendedMonomial& m) const;
    [[nodiscard]] ExtendedChain boundary(const ExtendedMonomial& m) const;
    [[nodiscard]] ExtendedMonomial multiply(const ExtendedMonomial& a, const ExtendedMonomial& b) const;

    /// Monomials of the given degree whose group factors have length <= max_group_length.
    [[nodiscard]] std::vector<ExtendedMonomial> basis(int degree, int max_group_length) const;

    /// `{a;b^op} sigma {b}`; the unit prints as `1`.
    [[nodiscard]] std::string format(const ExtendedMonomial& m) const;

  private:
    const LoopSpace* L_;
};

}   // namespace necklical

#endif
