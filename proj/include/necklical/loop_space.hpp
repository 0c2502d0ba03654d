#ifndef NECKLICAL_LOOP_SPACE_HPP
#define NECKLICAL_LOOP_SPACE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "necklical/simplicial.hpp"

namespace necklical {

/**
 * Ambient data for the word model: a pointed simplicial set X together with
 * Z(X). Generator ids of X are also valid ids of Z(X) (z_extension copies the
 * generators in order), so words and path cells index into Z(X) throughout.
 */
class LoopSpace
{
  public:
    explicit LoopSpace(SimplicialPresentation X);

    [[nodiscard]] const SimplicialPresentation& base() const { return *base_; }
    [[nodiscard]] const SimplicialPresentation& z() const { return *z_; }
    [[nodiscard]] GeneratorId basepoint() const { return z_->basepoint(); }

    /// True for generators of X (as opposed to the added a^op).
    [[nodiscard]] bool in_base(GeneratorId g) const;

    /// Nondegenerate simplices of Z(X) of dimension degree+1, in generator order.
    [[nodiscard]] const std::vector<SimplexTerm>& letters(int degree) const;

    /// Degree of a letter (its dimension minus one).
    [[nodiscard]] int degree(const SimplexTerm& letter) const { return dim(*z_, letter) - 1; }

    /// Z(X) has no nondegenerate 1-simplices, so every degree holds finitely
    /// many reduced words with nondegenerate letters.
    [[nodiscard]] bool finite_per_degree() const { return letters(0).empty(); }

  private:
    PresentationPtr base_;
    PresentationPtr z_;
    std::vector<std::vector<SimplexTerm>> letters_by_degree_;
};

/// A composable word sigma_1-bar ... sigma_k-bar of simplices of Z(X) from
/// `source` to `target`. The empty word is the unit at source == target.
struct LoopWord
{
    std::vector<SimplexTerm> letters;
    GeneratorId source;
    GeneratorId target;

    [[nodiscard]] std::size_t length() const { return letters.size(); }
    [[nodiscard]] bool empty() const { return letters.empty(); }

    auto operator<=>(const LoopWord&) const = default;
};

struct Bidegree
{
    int degree = 0;   // sum of letter degrees
    int length = 0;   // number of letters

    auto operator<=>(const Bidegree&) const = default;
};

[[nodiscard]] LoopWord unit_word(GeneratorId x);

/// Checks composability and fills in the endpoints; no reduction.
[[nodiscard]] LoopWord make_word(const LoopSpace& L, std::vector<SimplexTerm> letters);

/**
 * Normal form of a word. Top degeneracies move to an s_0 on the following
 * letter, vertex degeneracies are absorbed, and adjacent (a, a^op) pairs of
 * 1-simplices cancel. Degeneracies at a junction pass to the right through
 * 1-simplices and land as s_0 on the next higher letter, or in a trailing
 * vertex degeneracy s_k...s_0(v) when the word ends. Idempotent.
 */
[[nodiscard]] LoopWord reduce(const LoopSpace& L, LoopWord raw);
[[nodiscard]] bool is_reduced(const LoopSpace& L, const LoopWord& w);

[[nodiscard]] Bidegree bidegree(const LoopSpace& L, const LoopWord& w);
[[nodiscard]] int degree(const LoopSpace& L, const LoopWord& w);

/// Concatenation followed by reduce; requires u.target == v.source.
[[nodiscard]] LoopWord compose(const LoopSpace& L, const LoopWord& u, const LoopWord& v);

/// Inverse of a degree-0 word: reversed, each letter replaced by its op.
[[nodiscard]] LoopWord invert(const LoopSpace& L, const LoopWord& w);

/// Cubical face d^eps_i, 1 <= i <= degree(w). The raw variant skips reduce.
[[nodiscard]] LoopWord word_face_raw(const LoopSpace& L, const LoopWord& w, int i, int eps);
[[nodiscard]] LoopWord word_face(const LoopSpace& L, const LoopWord& w, int i, int eps);

/// Degeneracy eta_j, 1 <= j <= degree + length + 1, applied to the letter
/// holding global vertex j-1 (the earlier letter at a junction). Returns the
/// raw word; the unit is treated as the one-letter word s_0(x).
[[nodiscard]] LoopWord word_degeneracy(const LoopSpace& L, const LoopWord& w, int j);

/// Bead dimensions (letter dimensions) of a raw word; the unit counts as one
/// 1-dimensional bead.
[[nodiscard]] std::vector<int> bead_dims(const LoopSpace& L, const LoopWord& w);

enum class LetterPolicy
{
    Nondegenerate,     // generators of the normalized complex
    InnerDegeneracies, // additionally letters whose degeneracies avoid s_0 and the top index
};

/// Letters of the given degree under a policy, deterministic order.
[[nodiscard]] std::vector<SimplexTerm> letters_of_degree(const LoopSpace& L, int degree, LetterPolicy policy);

/**
 * All reduced words of the given degree from `source` to `target` with at
 * most `max_length` letters, sorted by (length, letters). Without a length
 * cap the space must be finite per degree.
 */
[[nodiscard]] std::vector<LoopWord> enumerate_words(const LoopSpace& L, int degree,
                                                    std::optional<int> max_length, GeneratorId source,
                                                    GeneratorId target,
                                                    LetterPolicy policy = LetterPolicy::Nondegenerate);

/// Loops at the basepoint.
[[nodiscard]] std::vector<LoopWord> enumerate_loops(const LoopSpace& L, int degree, std::optional<int> max_length,
                                                    LetterPolicy policy = LetterPolicy::Nondegenerate);

// -- literals ------------------------------------------------------------------

/// Parses `02;12^op;01^op` style literals; `s1.gen` applies a degeneracy and
/// `<e>` (or an empty string) is the unit at the basepoint. Not reduced.
[[nodiscard]] LoopWord parse_word(const LoopSpace& L, std::string_view text);
[[nodiscard]] SimplexTerm parse_letter(const SimplicialPresentation& Z, std::string_view text);
[[nodiscard]] std::string format_word(const LoopSpace& L, const LoopWord& w);

// -- degree-zero group ---------------------------------------------------------

struct PowerDecomposition
{
    LoopWord root;
    int exponent = 0;   // w = root^exponent, exponent >= 1 unless w is the unit
};

[[nodiscard]] LoopWord power(const LoopSpace& L, const LoopWord& g, int k);

/// Writes a reduced degree-0 loop as a positive power of a primitive element.
[[nodiscard]] PowerDecomposition primitive_root(const LoopSpace& L, const LoopWord& w);

/// The integer k with w = g^k, if one exists.
[[nodiscard]] std::optional<int> power_of(const LoopSpace& L, const LoopWord& w, const LoopWord& g);

}   // namespace necklical

template <>
struct std::hash<necklical::LoopWord>
{
    std::size_t operator()(const necklical::LoopWord& w) const noexcept;
};

#endif
