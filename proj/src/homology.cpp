#include "necklical/homology.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/miller_rabin.hpp>

namespace necklical {

bool is_prime(std::uint64_t p)
{
    return p >= 2 && boost::multiprecision::miller_rabin_test(Integer(p), 25);
}

// -- SparseIntMatrix -------------------------------------------------------------------

SparseIntMatrix SparseIntMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries)
{
    std::map<std::pair<int, int>, Integer> acc;
    for (auto& t : entries)
    {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw TopologyError("matrix entry (" + std::to_string(t.row) + "," + std::to_string(t.col) + ") out of range");
        acc[{t.row, t.col}] += t.value;
    }
    SparseIntMatrix out(rows, cols);
    for (auto& [rc, v] : acc)
    {
        if (v != 0)
            out.entries_.push_back({rc.first, rc.second, std::move(v)});
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntegerMatrix& m)
{
    std::vector<Triplet> t;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                t.push_back({static_cast<int>(r), static_cast<int>(c), m(r, c)});
    return from_triplets(static_cast<int>(m.rows()), static_cast<int>(m.cols()), std::move(t));
}

IntegerMatrix SparseIntMatrix::to_dense() const
{
    IntegerMatrix m = IntegerMatrix::Constant(rows_, cols_, Integer(0));
    for (const auto& t : entries_)
        m(t.row, t.col) = t.value;
    return m;
}

SparseIntMatrix SparseIntMatrix::select_columns(const std::vector<int>& keep) const
{
    std::vector<int> where(static_cast<std::size_t>(cols_), -1);
    for (std::size_t k = 0; k < keep.size(); ++k)
        where.at(static_cast<std::size_t>(keep[k])) = static_cast<int>(k);
    std::vector<Triplet> t;
    for (const auto& e : entries_)
    {
        if (const int c = where[static_cast<std::size_t>(e.col)]; c >= 0)
            t.push_back({e.row, c, e.value});
    }
    return from_triplets(rows_, static_cast<int>(keep.size()), std::move(t));
}

// -- Smith normal form ---------------------------------------------------------------

namespace {

using Row = std::map<int, Integer>;

class Workspace
{
  public:
    explicit Workspace(const SparseIntMatrix& m)
        : rows_(static_cast<std::size_t>(m.rows())), cols_(static_cast<std::size_t>(m.cols()))
    {
        for (const auto& t : m.entries())
        {
            rows_[static_cast<std::size_t>(t.row)][t.col] = t.value;
            cols_[static_cast<std::size_t>(t.col)].insert(t.row);
        }
    }

    [[nodiscard]] bool empty() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
    }

    std::pair<int, int> smallest() const
    {
        std::pair<int, int> best{-1, -1};
        const Integer* bv = nullptr;
        for (std::size_t r = 0; r < rows_.size(); ++r)
        {
            for (const auto& [c, v] : rows_[r])
            {
                if (!bv || abs(v) < abs(*bv))
                {
                    bv = &v;
                    best = {static_cast<int>(r), c};
                }
            }
        }
        return best;
    }

    const Integer& at(int r, int c) const { return rows_[static_cast<std::size_t>(r)].at(c); }

    // row r -= q * row p
    void row_op(int r, int p, const Integer& q)
    {
        Row& target = rows_[static_cast<std::size_t>(r)];
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(p)])
            set(target, r, c, target.count(c) ? target[c] - q * v : Integer(-q * v));
    }

    // col c -= q * col p
    void col_op(int c, int p, const Integer& q)
    {
        const std::set<int> touched = cols_[static_cast<std::size_t>(p)];
        for (int r : touched)
        {
            Row& row = rows_[static_cast<std::size_t>(r)];
            const Integer v = row.at(p);
            set(row, r, c, row.count(c) ? row[c] - q * v : Integer(-q * v));
        }
    }

    std::vector<int> column(int c) const
    {
        const auto& s = cols_[static_cast<std::size_t>(c)];
        return {s.begin(), s.end()};
    }

    std::vector<int> row_columns(int r) const
    {
        std::vector<int> out;
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)])
            out.push_back(c);
        return out;
    }

    void remove(int r, int c)
    {
        rows_[static_cast<std::size_t>(r)].clear();
        cols_[static_cast<std::size_t>(c)].clear();
    }

  private:
    void set(Row& row, int r, int c, Integer v)
    {
        if (v == 0)
        {
            row.erase(c);
            cols_[static_cast<std::size_t>(c)].erase(r);
        }
        else
        {
            row[c] = std::move(v);
            cols_[static_cast<std::size_t>(c)].insert(r);
        }
    }

    std::vector<Row> rows_;
    std::vector<std::set<int>> cols_;
};

}   // namespace

std::vector<Integer> SmithForm::torsion() const
{
    std::vector<Integer> out;
    for (const auto& d : factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m)
{
    Workspace w(m);
    std::vector<Integer> diag;
    while (!w.empty())
    {
        auto [p, pc] = w.smallest();
        for (;;)
        {
            const Integer a = w.at(p, pc);
            for (int r : w.column(pc))
            {
                if (r != p)
                    w.row_op(r, p, w.at(r, pc) / a);
            }
            for (int c : w.row_columns(p))
            {
                if (c == pc)
                    continue;
                w.col_op(c, pc, w.at(p, c) / a);
            }
            const auto col = w.column(pc);
            const auto row = w.row_columns(p);
            if (col.size() == 1 && row.size() == 1)
                break;
            // a remainder smaller than |a| is left in the pivot row or column
            std::pair<int, int> next{p, pc};
            Integer best = abs(a);
            for (int r : col)
            {
                if (r != p && abs(w.at(r, pc)) < best)
                {
                    best = abs(w.at(r, pc));
                    next = {r, pc};
                }
            }
            for (int c : row)
            {
                if (c != pc && abs(w.at(p, c)) < best)
                {
                    best = abs(w.at(p, c));
                    next = {p, c};
                }
            }
            std::tie(p, pc) = next;
        }
        diag.push_back(abs(w.at(p, pc)));
        w.remove(p, pc);
    }

    for (std::size_t i = 0; i < diag.size(); ++i)
    {
        for (std::size_t j = i + 1; j < diag.size(); ++j)
        {
            if (diag[j] % diag[i] == 0)
                continue;
            const Integer g = gcd(diag[i], diag[j]);
            const Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    SmithForm out;
    out.rank = diag.size();
    out.factors = std::move(diag);
    return out;
}

// -- field ranks -----------------------------------------------------------------------

namespace {

template <class F, class Convert>
std::size_t field_rank(const SparseIntMatrix& m, Convert to_field)
{
    std::vector<std::map<int, F>> rows(static_cast<std::size_t>(m.rows()));
    for (const auto& t : m.entries())
    {
        F v = to_field(t.value);
        if (!is_zero(v))
            rows[static_cast<std::size_t>(t.row)][t.col] = v;
    }
    // pivot rows keyed by leading column
    std::map<int, std::map<int, F>> pivots;
    for (auto& row : rows)
    {
        while (!row.empty())
        {
            const int lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end())
            {
                pivots.emplace(lead, std::move(row));
                break;
            }
            const F q = row.begin()->second / it->second.begin()->second;
            for (const auto& [c, v] : it->second)
            {
                F nv = (row.count(c) ? row[c] : F(0)) - q * v;
                if (is_zero(nv))
                    row.erase(c);
                else
                    row[c] = nv;
            }
        }
    }
    return pivots.size();
}

}   // namespace

std::size_t rank_rational(const SparseIntMatrix& m)
{
    return field_rank<Rational>(m, [](const Integer& v) { return Rational(v); });
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p)
{
    if (!is_prime(p))
        throw TopologyError("rank_mod_p: " + std::to_string(p) + " is not prime");
    return field_rank<ModP>(m, [p](const Integer& v) {
        Integer r = v % p;
        return ModP(r.convert_to<long long>(), p);
    });
}

// -- coefficients -----------------------------------------------------------------------

CoefficientSpec parse_coefficients(std::string_view text)
{
    if (text == "z" || text == "Z")
        return {};
    if (text == "q" || text == "Q")
        return {CoefficientSpec::Kind::Rationals, 0};
    if (text.size() > 2 && (text[0] == 'p' || text[0] == 'P') && text[1] == ':')
    {
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), p);
        if (ec == std::errc() && ptr == text.data() + text.size())
        {
            if (!is_prime(p))
                throw TopologyError("coefficients: " + std::to_string(p) + " is not prime");
            return {CoefficientSpec::Kind::Prime, p};
        }
    }
    throw TopologyError("coefficients '" + std::string(text) + "': expected z, q or p:<prime>");
}

std::string to_string(const CoefficientSpec& c)
{
    switch (c.kind)
    {
    case CoefficientSpec::Kind::Integers: return "z";
    case CoefficientSpec::Kind::Rationals: return "q";
    case CoefficientSpec::Kind::Prime: return "p:" + std::to_string(c.prime);
    }
    return "z";
}

// -- boundary assembly ----------------------------------------------------------------

std::vector<int> BoundaryMatrix::unflagged() const
{
    std::vector<int> out;
    std::size_t f = 0;
    for (int c = 0; c < matrix.cols(); ++c)
    {
        if (f < flagged.size() && flagged[f] == c)
            ++f;
        else
            out.push_back(c);
    }
    return out;
}

std::vector<LoopWord> chain_basis(const LoopSpace& L, int degree, int max_length, Variant v)
{
    std::vector<LoopWord> out;
    if (degree < 0)
        return out;
    for (auto& w : enumerate_loops(L, degree, max_length, basis_policy(v)))
    {
        if (is_reduced(L, w) && !killed(L, w, v))
            out.push_back(std::move(w));
    }
    return out;
}

BoundaryMatrix boundary_matrix(const LoopSpace& L, int degree, Variant v, int max_length)
{
    BoundaryMatrix out;
    out.degree = degree;
    out.domain = chain_basis(L, degree, max_length, v);
    out.codomain = chain_basis(L, degree - 1, max_length, v);
    out.window_rows = out.codomain.size();

    std::unordered_map<LoopWord, int> row_of;
    for (std::size_t r = 0; r < out.codomain.size(); ++r)
        row_of.emplace(out.codomain[r], static_cast<int>(r));

    std::vector<Triplet> entries;
    for (std::size_t c = 0; c < out.domain.size(); ++c)
    {
        if (degree == 0)
            break;
        bool leaves = false;
        const Chain<Integer> d = boundary<Integer>(L, out.domain[c], v);
        for (const auto& [w, k] : d.terms())
        {
            auto it = row_of.find(w);
            if (it == row_of.end())
            {
                it = row_of.emplace(w, static_cast<int>(out.codomain.size())).first;
                out.codomain.push_back(w);
            }
            if (static_cast<std::size_t>(it->second) >= out.window_rows)
                leaves = true;
            entries.push_back({it->second, static_cast<int>(c), k});
        }
        if (leaves)
            out.flagged.push_back(static_cast<int>(c));
    }
    out.matrix = SparseIntMatrix::from_triplets(static_cast<int>(out.codomain.size()),
                                                static_cast<int>(out.domain.size()), std::move(entries));
    return out;
}

// -- homology ---------------------------------------------------------------------------

std::string HomologyRow::group() const
{
    std::ostringstream os;
    const char* ring = coefficients.kind == CoefficientSpec::Kind::Integers    ? "Z"
                       : coefficients.kind == CoefficientSpec::Kind::Rationals ? "Q"
                                                                                : nullptr;
    std::string base = ring ? std::string(ring) : "F_" + std::to_string(coefficients.prime);
    bool any = false;
    if (free_rank > 0)
    {
        os << base;
        if (free_rank > 1)
            os << '^' << free_rank;
        any = true;
    }
    for (const auto& t : torsion)
    {
        os << (any ? " + " : "") << "Z/" << t;
        any = true;
    }
    return any ? os.str() : "0";
}

std::optional<int> exact_length(const LoopSpace& L, int degree)
{
    if (!L.finite_per_degree())
        return std::nullopt;
    return std::max(degree + 1, 1);
}

namespace {

std::size_t rank_over(const SparseIntMatrix& m, const CoefficientSpec& c)
{
    switch (c.kind)
    {
    case CoefficientSpec::Kind::Integers: return smith_normal_form(m).rank;
    case CoefficientSpec::Kind::Rationals: return rank_rational(m);
    case CoefficientSpec::Kind::Prime: return rank_mod_p(m, c.prime);
    }
    return 0;
}

}   // namespace

HomologyRow homology(const LoopSpace& L, int degree, Variant v, const CoefficientSpec& c,
                     std::optional<int> max_length)
{
    if (degree < 0)
        throw TopologyError("homology: negative degree");
    const auto exact = exact_length(L, degree);
    if (!max_length && !exact)
        throw TopologyError("homology: the complex has degree-0 letters, so a length cap is required");
    const int K = max_length ? *max_length : *exact;

    const BoundaryMatrix dn = boundary_matrix(L, degree, v, K);
    const BoundaryMatrix dn1 = boundary_matrix(L, degree + 1, v, K);

    // unflagged columns only touch window rows
    std::vector<Triplet> kept;
    const auto keep = dn1.unflagged();
    const SparseIntMatrix sel = dn1.matrix.select_columns(keep);
    for (const auto& t : sel.entries())
        kept.push_back(t);
    const SparseIntMatrix image =
        SparseIntMatrix::from_triplets(static_cast<int>(dn1.window_rows), sel.cols(), std::move(kept));

    HomologyRow row;
    row.degree = degree;
    row.variant = v;
    row.coefficients = c;
    row.max_length = K;
    row.window = dn.domain.size();
    row.flagged_columns = dn.flagged.size() + dn1.flagged.size();
    row.exact = exact && K >= *exact;

    const std::size_t rank_out = rank_over(dn.matrix, c);
    std::size_t rank_in = 0;
    if (c.kind == CoefficientSpec::Kind::Integers)
    {
        const SmithForm snf = smith_normal_form(image);
        rank_in = snf.rank;
        row.torsion = snf.torsion();
    }
    else
    {
        rank_in = rank_over(image, c);
    }
    row.free_rank = row.window - rank_out - rank_in;
    return row;
}

std::vector<HomologyRow> stabilization_scan(const LoopSpace& L, int degree, Variant v, const CoefficientSpec& c,
                                            int from, int to)
{
    std::vector<HomologyRow> out;
    for (int K = from; K <= to; ++K)
    {
        HomologyRow row = homology(L, degree, v, c, K);
        row.stabilized = !out.empty() && out.back() == row;
        out.push_back(std::move(row));
    }
    return out;
}

}   // namespace necklical
