#include "necklical/loop_space.hpp"

#include "necklical/complex_io.hpp"

#include <algorithm>
#include <functional>

namespace necklical {

// -- LoopSpace -----------------------------------------------------------------

LoopSpace::LoopSpace(SimplicialPresentation X)
    : base_(std::make_shared<const SimplicialPresentation>(std::move(X)))
{
    z_ = std::make_shared<const SimplicialPresentation>(z_extension(*base_));
    const int top = z_->max_dim();
    letters_by_degree_.resize(static_cast<std::size_t>(std::max(top, 1)));
    for (std::size_t k = 0; k < z_->size(); ++k)
    {
        const GeneratorId id{static_cast<std::int32_t>(k)};
        const int d = z_->generator(id).dim;
        if (d >= 1)
            letters_by_degree_[static_cast<std::size_t>(d - 1)].push_back(term(id));
    }
}

bool LoopSpace::in_base(GeneratorId g) const
{
    return g.index >= 0 && static_cast<std::size_t>(g.index) < base_->size();
}

const std::vector<SimplexTerm>& LoopSpace::letters(int degree) const
{
    static const std::vector<SimplexTerm> none;
    if (degree < 0 || static_cast<std::size_t>(degree) >= letters_by_degree_.size())
        return none;
    return letters_by_degree_[static_cast<std::size_t>(degree)];
}

// -- words -----------------------------------------------------------------------

LoopWord unit_word(GeneratorId x)
{
    return LoopWord{{}, x, x};
}

LoopWord make_word(const LoopSpace& L, std::vector<SimplexTerm> letters)
{
    const auto& Z = L.z();
    if (letters.empty())
        return unit_word(L.basepoint());
    for (std::size_t r = 0; r < letters.size(); ++r)
    {
        if (dim(Z, letters[r]) < 1)
            throw TopologyError("letter " + std::to_string(r + 1) + " (" + to_string(Z, letters[r]) +
                                ") has dimension 0");
        if (r > 0 && endpoints(Z, letters[r - 1]).max != endpoints(Z, letters[r]).min)
        {
            throw TopologyError("letters " + std::to_string(r) + " and " + std::to_string(r + 1) +
                                " are not composable: " + to_string(Z, letters[r - 1]) + " ends at " +
                                Z.generator(endpoints(Z, letters[r - 1]).max).name + ", " +
                                to_string(Z, letters[r]) + " starts at " +
                                Z.generator(endpoints(Z, letters[r]).min).name);
        }
    }
    const GeneratorId s = endpoints(Z, letters.front()).min;
    const GeneratorId t = endpoints(Z, letters.back()).max;
    return LoopWord{std::move(letters), s, t};
}

namespace {

bool op_pair(const SimplicialPresentation& Z, const SimplexTerm& a, const SimplexTerm& b)
{
    if (!a.nondegenerate() || !b.nondegenerate())
        return false;
    auto o = Z.op(a.generator);
    return o && *o == b.generator;
}

// k when the degeneracies of t are exactly s_{k-1}...s_0 (the first vertex
// repeated k times), otherwise -1.
int bottom_prefix(const SimplexTerm& t)
{
    const auto& idx = t.degeneracies.indices();
    for (std::size_t k = 0; k < idx.size(); ++k)
    {
        if (idx[k] != static_cast<int>(k))
            return -1;
    }
    return static_cast<int>(idx.size());
}

// One pass of unit absorption and free cancellation. Repeated first vertices
// of edge letters and the degeneracies of absorbed units are junction
// degeneracies; they travel right past edges and land as s_0 on the next
// higher letter, or in a trailing vertex degeneracy s_k...s_0(v).
void absorb_and_cancel(const SimplicialPresentation& Z, std::vector<SimplexTerm>& letters, GeneratorId target)
{
    std::vector<SimplexTerm> out;
    out.reserve(letters.size());
    int pending = 0;
    for (auto& t : letters)
    {
        if (is_vertex_degenerate(Z, t))
        {
            pending += dim(Z, t) - 1;
            continue;
        }
        const bool edge = Z.generator(t.generator).dim == 1;
        if (edge && bottom_prefix(t) > 0)
        {
            pending += bottom_prefix(t);
            t = term(t.generator);
        }
        if (edge && t.nondegenerate())
        {
            if (!out.empty() && op_pair(Z, out.back(), t))
                out.pop_back();
            else
                out.push_back(std::move(t));
            continue;
        }
        for (; pending > 0; --pending)
            t = degeneracy(Z, t, 0);
        out.push_back(std::move(t));
    }
    if (pending > 0)
        out.push_back(vertex_degeneracy(target, pending + 1));
    letters = std::move(out);
}

// Moves the leftmost movable top degeneracy one letter to the right.
bool push_top_degeneracy(const SimplicialPresentation& Z, std::vector<SimplexTerm>& letters)
{
    for (std::size_t r = 0; r < letters.size(); ++r)
    {
        const SimplexTerm t = letters[r];
        if (dim(Z, t) < 2 || !is_top_degenerate(Z, t))
            continue;
        const bool last = r + 1 == letters.size();
        if (last && is_vertex_degenerate(Z, t))
            continue;
        if (last)
            letters.push_back(degeneracy(Z, term(endpoints(Z, t).max), 0));
        letters[r] = strip_outer(t);
        letters[r + 1] = degeneracy(Z, letters[r + 1], 0);
        return true;
    }
    return false;
}

void check_index(int i, int lo, int hi, const char* what)
{
    if (i < lo || i > hi)
    {
        throw TopologyError(std::string(what) + " index " + std::to_string(i) + " out of range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}   // namespace

LoopWord reduce(const LoopSpace& L, LoopWord raw)
{
    const auto& Z = L.z();
    auto& letters = raw.letters;
    for (;;)
    {
        absorb_and_cancel(Z, letters, raw.target);
        if (!push_top_degeneracy(Z, letters))
            break;
    }
    return raw;
}

bool is_reduced(const LoopSpace& L, const LoopWord& w)
{
    return reduce(L, w) == w;
}

Bidegree bidegree(const LoopSpace& L, const LoopWord& w)
{
    Bidegree b;
    for (const auto& t : w.letters)
        b.degree += L.degree(t);
    b.length = static_cast<int>(w.letters.size());
    return b;
}

int degree(const LoopSpace& L, const LoopWord& w)
{
    return bidegree(L, w).degree;
}

LoopWord compose(const LoopSpace& L, const LoopWord& u, const LoopWord& v)
{
    if (u.target != v.source)
    {
        throw TopologyError("compose: endpoint mismatch (" + L.z().generator(u.target).name + " vs " +
                            L.z().generator(v.source).name + ")");
    }
    LoopWord w{u.letters, u.source, v.target};
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return reduce(L, std::move(w));
}

LoopWord invert(const LoopSpace& L, const LoopWord& w)
{
    const auto& Z = L.z();
    LoopWord out{{}, w.target, w.source};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    {
        if (dim(Z, *it) != 1)
            throw TopologyError("invert: letter " + to_string(Z, *it) + " has positive degree");
        if (!it->nondegenerate())
        {
            out.letters.push_back(*it);
            continue;
        }
        auto o = Z.op(it->generator);
        if (!o)
            throw TopologyError("invert: letter " + to_string(Z, *it) + " has no op-partner");
        out.letters.push_back(term(*o));
    }
    return reduce(L, std::move(out));
}

LoopWord word_face_raw(const LoopSpace& L, const LoopWord& w, int i, int eps)
{
    const auto& Z = L.z();
    if (eps != 0 && eps != 1)
        throw TopologyError("face direction must be 0 or 1");
    check_index(i, 1, degree(L, w), "word face");
    int before = 0;
    for (std::size_t r = 0; r < w.letters.size(); ++r)
    {
        const SimplexTerm& t = w.letters[r];
        const int m = L.degree(t);
        if (i > before + m)
        {
            before += m;
            continue;
        }
        const int local = i - before;
        LoopWord out{{}, w.source, w.target};
        out.letters.reserve(w.letters.size() + 1);
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(r));
        if (eps == 1)
        {
            out.letters.push_back(face(Z, t, local));
        }
        else
        {
            out.letters.push_back(front_face(Z, t, local));
            out.letters.push_back(back_face(Z, t, local));
        }
        out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<long>(r) + 1, w.letters.end());
        return out;
    }
    throw TopologyError("word face: coordinate bookkeeping failed");
}

LoopWord word_face(const LoopSpace& L, const LoopWord& w, int i, int eps)
{
    return reduce(L, word_face_raw(L, w, i, eps));
}

std::vector<int> bead_dims(const LoopSpace& L, const LoopWord& w)
{
    if (w.empty())
        return {1};
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (const auto& t : w.letters)
        out.push_back(dim(L.z(), t));
    return out;
}

LoopWord word_degeneracy(const LoopSpace& L, const LoopWord& w, int j)
{
    const auto& Z = L.z();
    LoopWord out = w;
    if (out.empty())
        out.letters.push_back(degeneracy(Z, term(w.source), 0));
    int total = 0;
    for (const auto& t : out.letters)
        total += dim(Z, t);
    check_index(j, 1, total + 1, "word degeneracy");

    const int g = j - 1;
    int before = 0;
    for (auto& t : out.letters)
    {
        const int m = dim(Z, t);
        if (g <= before + m)
        {
            t = degeneracy(Z, t, g - before);
            return out;
        }
        before += m;
    }
    throw TopologyError("word degeneracy: vertex bookkeeping failed");
}

// -- enumeration -------------------------------------------------------------------

std::vector<SimplexTerm> letters_of_degree(const LoopSpace& L, int degree, LetterPolicy policy)
{
    const auto& Z = L.z();
    std::vector<SimplexTerm> out = L.letters(degree);
    if (policy == LetterPolicy::Nondegenerate || degree < 1)
        return out;

    const int D = degree + 1;
    for (std::size_t k = 0; k < Z.size(); ++k)
    {
        const GeneratorId id{static_cast<std::int32_t>(k)};
        const int d0 = Z.generator(id).dim;
        if (d0 < 1 || d0 >= D)
            continue;
        const int m = D - d0;
        // canonical words i_1 < ... < i_m with i_k <= d0 + k - 1, avoiding 0 and D-1
        std::vector<int> idx;
        std::function<void(int)> rec = [&](int lo) {
            const int pos = static_cast<int>(idx.size());
            if (pos == m)
            {
                out.push_back(SimplexTerm{DegeneracyWord::from_canonical(idx), id});
                return;
            }
            const int hi = std::min(d0 + pos, D - 2);
            for (int v = std::max(lo, 1); v <= hi; ++v)
            {
                idx.push_back(v);
                rec(v + 1);
                idx.pop_back();
            }
        };
        rec(1);
    }
    return out;
}

std::vector<LoopWord> enumerate_words(const LoopSpace& L, int degree, std::optional<int> max_length,
                                      GeneratorId source, GeneratorId target, LetterPolicy policy)
{
    const auto& Z = L.z();
    if (degree < 0)
        return {};
    if (max_length && *max_length < 0)
        throw TopologyError("enumerate_words: negative length cap");
    if (!max_length && !L.finite_per_degree())
        throw TopologyError("enumerate_words: unbounded enumeration on a complex with nondegenerate 1-simplices");

    struct Letter
    {
        SimplexTerm term;
        int degree;
        GeneratorId min, max;
    };
    std::vector<std::vector<Letter>> by_source(Z.size());
    for (int d = 0; d <= degree; ++d)
    {
        for (auto& t : letters_of_degree(L, d, policy))
        {
            auto e = endpoints(Z, t);
            by_source[static_cast<std::size_t>(e.min.index)].push_back(Letter{t, d, e.min, e.max});
        }
    }

    std::vector<LoopWord> out;
    std::vector<SimplexTerm> current;
    std::function<void(GeneratorId, int)> rec = [&](GeneratorId at, int remaining) {
        if (remaining == 0 && at == target)
            out.push_back(LoopWord{current, source, target});
        if (max_length && static_cast<int>(current.size()) >= *max_length)
            return;
        for (const auto& l : by_source[static_cast<std::size_t>(at.index)])
        {
            if (l.degree > remaining)
                continue;
            if (!current.empty() && op_pair(Z, current.back(), l.term))
                continue;
            current.push_back(l.term);
            rec(l.max, remaining - l.degree);
            current.pop_back();
        }
    };
    rec(source, degree);

    std::sort(out.begin(), out.end(), [](const LoopWord& a, const LoopWord& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.letters < b.letters;
    });
    return out;
}

std::vector<LoopWord> enumerate_loops(const LoopSpace& L, int degree, std::optional<int> max_length,
                                      LetterPolicy policy)
{
    return enumerate_words(L, degree, max_length, L.basepoint(), L.basepoint(), policy);
}

// -- literals --------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}   // namespace

SimplexTerm parse_letter(const SimplicialPresentation& Z, std::string_view text)
{
    text = trim(text);
    std::vector<int> outer_first;
    for (;;)
    {
        if (Z.find(std::string(text)))
            break;
        if (text.size() < 3 || text[0] != 's')
            break;
        std::size_t k = 1;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9')
            ++k;
        if (k == 1 || k >= text.size() || text[k] != '.')
            break;
        outer_first.push_back(std::stoi(std::string(text.substr(1, k - 1))));
        text.remove_prefix(k + 1);
    }
    if (text.empty())
        throw TopologyError("empty letter");
    SimplexTerm t = term(Z.require(std::string(text)));
    for (auto it = outer_first.rbegin(); it != outer_first.rend(); ++it)
        t = degeneracy(Z, t, *it);
    return t;
}

LoopWord parse_word(const LoopSpace& L, std::string_view text)
{
    const std::string_view full = text;
    text = trim(text);
    if (text.empty() || text == "<e>")
        return unit_word(L.basepoint());
    const std::size_t offset = static_cast<std::size_t>(text.data() - full.data());
    std::vector<SimplexTerm> letters;
    std::size_t start = 0;
    for (;;)
    {
        const std::size_t stop = text.find(';', start);
        const auto piece = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
        try
        {
            letters.push_back(parse_letter(L.z(), piece));
        }
        catch (const ParseError&)
        {
            throw;
        }
        catch (const TopologyError& e)
        {
            std::size_t lead = piece.find_first_not_of(" \t");
            if (lead == std::string_view::npos)
                lead = 0;
            throw ParseError("word", 1, static_cast<int>(offset + start + lead) + 1, e.what());
        }
        if (stop == std::string_view::npos)
            break;
        start = stop + 1;
    }
    return make_word(L, std::move(letters));
}

std::string format_word(const LoopSpace& L, const LoopWord& w)
{
    if (w.empty())
        return "<e>";
    std::string out;
    for (std::size_t r = 0; r < w.letters.size(); ++r)
    {
        if (r > 0)
            out += ';';
        out += to_string(L.z(), w.letters[r]);
    }
    return out;
}

// -- degree-zero group -----------------------------------------------------------

namespace {

void require_degree_zero_loop(const LoopSpace& L, const LoopWord& w, const char* what)
{
    if (w.source != w.target)
        throw TopologyError(std::string(what) + ": word is not a loop");
    for (const auto& t : w.letters)
    {
        if (dim(L.z(), t) != 1)
            throw TopologyError(std::string(what) + ": letter " + to_string(L.z(), t) + " has positive degree");
    }
}

}   // namespace

LoopWord power(const LoopSpace& L, const LoopWord& g, int k)
{
    require_degree_zero_loop(L, g, "power");
    const LoopWord base = k < 0 ? invert(L, g) : reduce(L, g);
    LoopWord out = unit_word(g.source);
    for (int n = 0; n < (k < 0 ? -k : k); ++n)
        out = compose(L, out, base);
    return out;
}

PowerDecomposition primitive_root(const LoopSpace& L, const LoopWord& w0)
{
    require_degree_zero_loop(L, w0, "primitive_root");
    const auto& Z = L.z();
    const LoopWord w = reduce(L, w0);
    if (w.empty())
        return PowerDecomposition{w, 0};

    // w = c u c^-1 with u cyclically reduced
    std::size_t lo = 0;
    std::size_t hi = w.letters.size();
    while (hi - lo >= 2 && op_pair(Z, w.letters[lo], w.letters[hi - 1]))
    {
        ++lo;
        --hi;
    }
    const std::size_t n = hi - lo;
    std::size_t period = n;
    for (std::size_t p = 1; p < n; ++p)
    {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t k = p; k < n && periodic; ++k)
            periodic = w.letters[lo + k] == w.letters[lo + k - p];
        if (periodic)
        {
            period = p;
            break;
        }
    }
    LoopWord root{{}, w.source, w.target};
    root.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(lo + period));
    root.letters.insert(root.letters.end(), w.letters.begin() + static_cast<long>(hi), w.letters.end());
    return PowerDecomposition{reduce(L, std::move(root)), static_cast<int>(n / period)};
}

std::optional<int> power_of(const LoopSpace& L, const LoopWord& w, const LoopWord& g)
{
    const auto pw = primitive_root(L, w);
    const auto pg = primitive_root(L, g);
    if (pw.exponent == 0)
        return 0;
    if (pg.exponent == 0 || pw.exponent % pg.exponent != 0)
        return std::nullopt;
    const int q = pw.exponent / pg.exponent;
    if (pw.root == pg.root)
        return q;
    if (pw.root == invert(L, pg.root))
        return -q;
    return std::nullopt;
}

}   // namespace necklical

std::size_t std::hash<necklical::LoopWord>::operator()(const necklical::LoopWord& w) const noexcept
{
    std::size_t h = static_cast<std::size_t>(w.source.index) * 31u + static_cast<std::size_t>(w.target.index);
    std::hash<necklical::SimplexTerm> ht;
    for (const auto& t : w.letters)
        h = h * 0x9e3779b97f4a7c15ull ^ ht(t);
    return h;
}
