#include "necklical/cobar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace necklical {

bool is_zero_letter(const LoopSpace& L, const SimplexTerm& a, Variant v)
{
    if (a.nondegenerate())
        return false;
    return v == Variant::Normalized || is_vertex_degenerate(L.z(), a);
}

int degree(const LoopSpace& L, const CobarMonomial& m)
{
    int d = 0;
    for (const auto& a : m.letters)
        d += L.degree(a);
    return d;
}

std::vector<std::pair<SimplexTerm, int>> d_A(const LoopSpace& L, const SimplexTerm& a, Variant v)
{
    const auto& Z = L.z();
    const int n = dim(Z, a);
    std::map<SimplexTerm, int> acc;
    for (int i = 1; i < n; ++i)
    {
        SimplexTerm f = face(Z, a, i);
        if (is_zero_letter(L, f, v))
            continue;
        acc[f] += (i % 2 == 0) ? 1 : -1;
    }
    std::vector<std::pair<SimplexTerm, int>> out;
    for (auto& [t, c] : acc)
    {
        if (c != 0)
            out.emplace_back(t, c);
    }
    return out;
}

std::vector<std::pair<SimplexTerm, SimplexTerm>> aw_reduced(const LoopSpace& L, const SimplexTerm& a)
{
    const auto& Z = L.z();
    const int n = dim(Z, a);
    std::vector<std::pair<SimplexTerm, SimplexTerm>> out;
    for (int i = 1; i < n; ++i)
        out.emplace_back(front_face(Z, a, i), back_face(Z, a, i));
    return out;
}

CobarMonomial hat_reduce(const LoopSpace& L, CobarMonomial m)
{
    const auto& Z = L.z();
    std::vector<SimplexTerm> out;
    out.reserve(m.letters.size());
    for (auto& a : m.letters)
    {
        if (!out.empty() && out.back().nondegenerate() && a.nondegenerate())
        {
            auto o = Z.op(out.back().generator);
            if (o && *o == a.generator)
            {
                out.pop_back();
                continue;
            }
        }
        out.push_back(std::move(a));
    }
    m.letters = std::move(out);
    return m;
}

namespace {

void accumulate(const LoopSpace& L, CobarChain& out, CobarMonomial m, const Integer& c, Variant v)
{
    if (c == 0)
        return;
    for (const auto& a : m.letters)
    {
        if (is_zero_letter(L, a, v))
            return;
    }
    m = hat_reduce(L, std::move(m));
    auto [it, inserted] = out.try_emplace(std::move(m), c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            out.erase(it);
    }
}

}   // namespace

CobarChain cobar_boundary(const LoopSpace& L, const CobarMonomial& m, Variant v)
{
    const auto& Z = L.z();
    CobarChain out;
    for (const auto& a : m.letters)
    {
        if (is_zero_letter(L, a, v))
            return out;
    }
    int prefix = 0;
    for (std::size_t r = 0; r < m.letters.size(); ++r)
    {
        const SimplexTerm& a = m.letters[r];
        const int eps = (prefix % 2 == 0) ? 1 : -1;
        auto replaced = [&](std::vector<SimplexTerm> middle) {
            CobarMonomial n{{}, m.source, m.target};
            n.letters.insert(n.letters.end(), m.letters.begin(), m.letters.begin() + static_cast<long>(r));
            n.letters.insert(n.letters.end(), middle.begin(), middle.end());
            n.letters.insert(n.letters.end(), m.letters.begin() + static_cast<long>(r) + 1, m.letters.end());
            return n;
        };
        for (const auto& [c, s] : d_A(L, a, v))
            accumulate(L, out, replaced({c}), Integer(-s * eps), v);
        const auto splits = aw_reduced(L, a);
        for (std::size_t k = 0; k < splits.size(); ++k)
        {
            const int front_degree = dim(Z, splits[k].first);
            const int sign = (front_degree % 2 == 0) ? 1 : -1;
            accumulate(L, out, replaced({splits[k].first, splits[k].second}), Integer(sign * eps), v);
        }
        prefix += dim(Z, a) - 1;
    }
    return out;
}

CobarChain cobar_boundary(const LoopSpace& L, const CobarChain& c, Variant v)
{
    CobarChain out;
    for (const auto& [m, coeff] : c)
    {
        for (const auto& [n, k] : cobar_boundary(L, m, v))
        {
            auto [it, inserted] = out.try_emplace(n, Integer(k * coeff));
            if (!inserted)
            {
                it->second += k * coeff;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

CobarMonomial to_monomial(const LoopWord& w)
{
    return CobarMonomial{w.letters, w.source, w.target};
}

LoopWord to_word(const CobarMonomial& m)
{
    return LoopWord{m.letters, m.source, m.target};
}

std::string format_monomial(const LoopSpace& L, const CobarMonomial& m)
{
    std::string out = "[";
    for (std::size_t r = 0; r < m.letters.size(); ++r)
    {
        if (r > 0)
            out += '|';
        out += to_string(L.z(), m.letters[r]);
    }
    return out + "]";
}

std::string format_cobar_chain(const LoopSpace& L, const CobarChain& c)
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, k] : c)
    {
        const bool negative = k < 0;
        const Integer mag = negative ? Integer(-k) : k;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (mag != 1)
            os << mag << ' ';
        os << format_monomial(L, m);
        first = false;
    }
    return os.str();
}

// -- comparison ------------------------------------------------------------------------

CobarChain translate(const LoopSpace& L, const Chain<Integer>& ch)
{
    CobarChain out;
    for (const auto& [w, c] : ch.terms())
        out.emplace(to_monomial(w), degree(L, w) % 2 == 0 ? c : Integer(-c));
    return out;
}

Theorem2Report compare_theorem2(const LoopSpace& L, int max_degree, int max_length, Variant v)
{
    Theorem2Report rep;
    rep.variant = v;
    for (int n = 0; n <= max_degree; ++n)
    {
        for (const auto& w : enumerate_loops(L, n, max_length, LetterPolicy::Nondegenerate))
        {
            if (killed(L, w, v))
                continue;
            ++rep.words;
            const CobarChain lhs = translate(L, boundary<Integer>(L, w, v));
            CobarChain rhs = cobar_boundary(L, to_monomial(w), v);
            if (n % 2 == 1)
            {
                for (auto& [m, c] : rhs)
                    c = -c;
            }
            if (lhs != rhs)
                rep.mismatches.push_back({format_word(L, w), format_cobar_chain(L, lhs), format_cobar_chain(L, rhs)});
        }
    }
    return rep;
}

// -- extended cobar -----------------------------------------------------------------------

ExtendedCobar::ExtendedCobar(const LoopSpace& L) : L_(&L)
{
    if (L.base().of_dim(0).size() != 1)
        throw TopologyError("extended cobar: the complex must have exactly one vertex");
}

ExtendedMonomial ExtendedCobar::merge(const CobarMonomial& m) const
{
    const auto& Z = L_->z();
    ExtendedMonomial out;
    std::vector<SimplexTerm> run;
    auto flush = [&]() {
        if (!run.empty())
            out.items.push_back(ExtendedItem{true, std::move(run)});
        run.clear();
    };
    for (const auto& a : m.letters)
    {
        if (!a.nondegenerate())
            throw TopologyError("extended cobar: degenerate letter " + to_string(Z, a));
        if (dim(Z, a) == 1)
        {
            if (!run.empty() && Z.op(run.back().generator) == a.generator)
                run.pop_back();
            else
                run.push_back(a);
            continue;
        }
        flush();
        out.items.push_back(ExtendedItem{false, {a}});
    }
    flush();
    return out;
}

CobarMonomial ExtendedCobar::expand(const ExtendedMonomial& m) const
{
    CobarMonomial out{{}, L_->basepoint(), L_->basepoint()};
    for (const auto& item : m.items)
        out.letters.insert(out.letters.end(), item.letters.begin(), item.letters.end());
    return out;
}

int ExtendedCobar::degree(const ExtendedMonomial& m) const
{
    int d = 0;
    for (const auto& item : m.items)
    {
        if (!item.group)
            d += L_->degree(item.letters.front());
    }
    return d;
}

ExtendedChain ExtendedCobar::boundary(const ExtendedMonomial& m) const
{
    ExtendedChain out;
    for (const auto& [n, c] : cobar_boundary(*L_, expand(m), Variant::Normalized))
    {
        auto [it, inserted] = out.try_emplace(merge(n), c);
        if (!inserted)
        {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        }
    }
    return out;
}

ExtendedMonomial ExtendedCobar::multiply(const ExtendedMonomial& a, const ExtendedMonomial& b) const
{
    CobarMonomial m = expand(a);
    const CobarMonomial tail = expand(b);
    m.letters.insert(m.letters.end(), tail.letters.begin(), tail.letters.end());
    return merge(m);
}

std::vector<ExtendedMonomial> ExtendedCobar::basis(int degree, int max_group_length) const
{
    const auto& Z = L_->z();
    std::vector<SimplexTerm> edges = L_->letters(0);

    // nonempty reduced group words up to the length cap
    std::vector<std::vector<SimplexTerm>> group_words;
    std::vector<SimplexTerm> current;
    std::function<void()> grow = [&]() {
        if (static_cast<int>(current.size()) >= max_group_length)
            return;
        for (const auto& e : edges)
        {
            if (!current.empty() && Z.op(current.back().generator) == e.generator)
                continue;
            current.push_back(e);
            group_words.push_back(current);
            grow();
            current.pop_back();
        }
    };
    grow();

    std::vector<ExtendedMonomial> out;
    ExtendedMonomial m;
    // Slots alternate: optional group factor, then a higher letter or the end.
    std::function<void(int)> place = [&](int remaining) {
        auto higher = [&]() {
            if (remaining == 0)
                out.push_back(m);
            for (int d = 1; d <= remaining; ++d)
            {
                for (const auto& a : L_->letters(d))
                {
                    m.items.push_back(ExtendedItem{false, {a}});
                    place(remaining - d);
                    m.items.pop_back();
                }
            }
        };
        higher();
        for (const auto& g : group_words)
        {
            m.items.push_back(ExtendedItem{true, g});
            higher();
            m.items.pop_back();
        }
    };
    place(degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::string ExtendedCobar::format(const ExtendedMonomial& m) const
{
    if (m.items.empty())
        return "1";
    const auto& Z = L_->z();
    std::string out;
    for (std::size_t k = 0; k < m.items.size(); ++k)
    {
        if (k > 0)
            out += ' ';
        const auto& item = m.items[k];
        if (item.group)
        {
            out += '{';
            for (std::size_t q = 0; q < item.letters.size(); ++q)
            {
                if (q > 0)
                    out += ';';
                out += to_string(Z, item.letters[q]);
            }
            out += '}';
        }
        else
        {
            out += to_string(Z, item.letters.front());
        }
    }
    return out;
}

}   // namespace necklical
