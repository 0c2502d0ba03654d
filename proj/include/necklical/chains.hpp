#ifndef NECKLICAL_CHAINS_HPP
#define NECKLICAL_CHAINS_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "necklical/coefficients.hpp"
#include "necklical/loop_space.hpp"

namespace necklical {

/// DE kills the ideal generated by degeneracies of the unit; NORMALIZED kills
/// every word with a degenerate letter.
enum class Variant
{
    DE,
    Normalized,
};

[[nodiscard]] std::string_view to_string(Variant v);
[[nodiscard]] Variant parse_variant(std::string_view text);

/// Whether a reduced word vanishes in the quotient. Under DE a letter that is
/// a vertex degeneracy, or degenerate along its first or last vertex, puts the
/// word in the unit ideal; letters degenerate only in interior directions survive.
[[nodiscard]] bool killed(const LoopSpace& L, const LoopWord& reduced, Variant v);

/// reduce, then apply the kill rule.
[[nodiscard]] std::optional<LoopWord> chain_generator(const LoopSpace& L, LoopWord raw, Variant v);

/// Letters spanning the chain basis of a variant.
[[nodiscard]] LetterPolicy basis_policy(Variant v);

/// Sparse linear combination of canonical words.
template <class R>
class Chain
{
  public:
    using Scalar = R;
    using Terms = std::map<LoopWord, R>;

    explicit Chain(Variant v = Variant::Normalized) : variant_(v) {}

    static Chain word(const LoopSpace& L, LoopWord raw, Variant v, const R& c = R(1))
    {
        Chain out(v);
        out.add(L, std::move(raw), c);
        return out;
    }

    /// Adds c times the class of a raw word.
    void add(const LoopSpace& L, LoopWord raw, const R& c)
    {
        if (auto w = chain_generator(L, std::move(raw), variant_))
            add_canonical(*w, c);
    }

    void add_canonical(const LoopWord& w, const R& c)
    {
        if (is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted)
        {
            it->second += c;
            if (is_zero(it->second))
                terms_.erase(it);
        }
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] Variant variant() const { return variant_; }
    [[nodiscard]] bool is_zero_chain() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    Chain& operator+=(const Chain& o)
    {
        check(o);
        for (const auto& [w, c] : o.terms_)
            add_canonical(w, c);
        return *this;
    }

    Chain& operator-=(const Chain& o)
    {
        check(o);
        for (const auto& [w, c] : o.terms_)
            add_canonical(w, -c);
        return *this;
    }

    [[nodiscard]] Chain scaled(const R& s) const
    {
        Chain out(variant_);
        for (const auto& [w, c] : terms_)
            out.add_canonical(w, c * s);
        return out;
    }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend bool operator==(const Chain& a, const Chain& b) { return a.variant_ == b.variant_ && a.terms_ == b.terms_; }

    void check(const Chain& o) const
    {
        if (o.variant_ != variant_)
            throw TopologyError("chain variant mismatch");
    }

  private:
    Variant variant_;
    Terms terms_;
};

/// d = sum_i (-1)^i (d^1_i - d^0_i) on a single word.
template <class R>
[[nodiscard]] Chain<R> boundary(const LoopSpace& L, const LoopWord& w, Variant v)
{
    Chain<R> out(v);
    const int n = degree(L, w);
    for (int i = 1; i <= n; ++i)
    {
        const R sign = (i % 2 == 0) ? R(1) : R(-1);
        out.add(L, word_face_raw(L, w, i, 1), sign);
        out.add(L, word_face_raw(L, w, i, 0), -sign);
    }
    return out;
}

template <class R>
[[nodiscard]] Chain<R> boundary(const LoopSpace& L, const Chain<R>& ch)
{
    Chain<R> out(ch.variant());
    for (const auto& [w, c] : ch.terms())
        out += boundary<R>(L, w, ch.variant()).scaled(c);
    return out;
}

/// Bilinear extension of compose.
template <class R>
[[nodiscard]] Chain<R> multiply(const LoopSpace& L, const Chain<R>& u, const Chain<R>& v)
{
    u.check(v);
    Chain<R> out(u.variant());
    for (const auto& [a, ca] : u.terms())
    {
        for (const auto& [b, cb] : v.terms())
        {
            if (a.target != b.source)
                throw TopologyError("multiply: endpoint mismatch");
            LoopWord w{a.letters, a.source, b.target};
            w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
            out.add(L, std::move(w), ca * cb);
        }
    }
    return out;
}

/// Image in the normalized quotient.
template <class R>
[[nodiscard]] Chain<R> to_normalized(const LoopSpace& L, const Chain<R>& ch)
{
    Chain<R> out(Variant::Normalized);
    for (const auto& [w, c] : ch.terms())
        out.add(L, w, c);
    return out;
}

/// `2 [a;b] - [c]`; the zero chain prints as `0`.
template <class R>
[[nodiscard]] std::string format_chain(const LoopSpace& L, const Chain<R>& ch)
{
    if (ch.is_zero_chain())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : ch.terms())
    {
        std::ostringstream cs;
        cs << c;
        std::string coeff = cs.str();
        const bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative)
            coeff.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (coeff != "1")
            os << coeff << ' ';
        os << '[' << format_word(L, w) << ']';
        first = false;
    }
    return os.str();
}

}   // namespace necklical

#endif
