#include "necklical/suites.hpp"

#include <deque>
#include <map>

#include "necklical/cobar.hpp"

namespace necklical {

namespace {

constexpr std::size_t kept_failures = 8;

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

SimplexTerm maybe_degenerate(const SimplicialPresentation& Z, SimplexTerm t, Rng& rng, double rate)
{
    if (chance(rng, rate))
        t = degeneracy(Z, t, uniform(rng, 0, dim(Z, t)));
    return t;
}

// shortest path of nondegenerate edges of Z(X) from v to w
std::vector<SimplexTerm> edge_path(const SimplicialPresentation& Z, GeneratorId v, GeneratorId w)
{
    std::map<GeneratorId, SimplexTerm> via;
    std::deque<GeneratorId> queue{v};
    std::map<GeneratorId, bool> seen{{v, true}};
    const auto edges = Z.of_dim(1);
    while (!queue.empty() && !seen.count(w))
    {
        const GeneratorId u = queue.front();
        queue.pop_front();
        for (GeneratorId e : edges)
        {
            const auto ends = endpoints(Z, term(e));
            if (ends.min != u || seen.count(ends.max))
                continue;
            seen[ends.max] = true;
            via[ends.max] = term(e);
            queue.push_back(ends.max);
        }
    }
    if (!seen.count(w))
        throw TopologyError("no edge path from " + Z.generator(v).name + " to " + Z.generator(w).name);
    std::vector<SimplexTerm> out;
    for (GeneratorId u = w; u != v;)
    {
        out.push_back(via.at(u));
        u = endpoints(Z, out.back()).min;
    }
    return {out.rbegin(), out.rend()};
}

LoopWord walk(const LoopSpace& L, GeneratorId v, GeneratorId target, Rng& rng, const SampleOptions& o, int min_dim)
{
    const auto& Z = L.z();
    std::vector<SimplexTerm> letters;
    GeneratorId at = v;
    const int count = uniform(rng, 0, o.max_letters);
    for (int k = 0; k < count; ++k)
    {
        std::vector<SimplexTerm> options;
        for (std::size_t id = 0; id < Z.size(); ++id)
        {
            const SimplexTerm t = term(GeneratorId{static_cast<std::int32_t>(id)});
            const int d = dim(Z, t);
            if (d >= min_dim && d <= o.max_dim && endpoints(Z, t).min == at)
                options.push_back(t);
        }
        if (options.empty())
            break;
        SimplexTerm t = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
        t = maybe_degenerate(Z, t, rng, o.degenerate_rate);
        at = endpoints(Z, t).max;
        letters.push_back(std::move(t));
    }
    for (auto& e : edge_path(Z, at, target))
        letters.push_back(std::move(e));
    if (letters.empty())
        return unit_word(v);
    return make_word(L, std::move(letters));
}

std::string render(const RelationFailure& f)
{
    return f.cell + ": " + f.relation + ": " + f.lhs + " != " + f.rhs;
}

void absorb(SuiteResult& out, const RelationReport& rep, const std::string& kind)
{
    out.checked += rep.checked;
    for (const auto& f : rep.failures)
        out.fail(kind + " " + render(f));
    // failures beyond the kept ones still count
    out.failed += rep.failed - rep.failures.size();
}

}   // namespace

LoopWord random_word_from(const LoopSpace& L, GeneratorId v, Rng& rng, const SampleOptions& o)
{
    return walk(L, v, L.basepoint(), rng, o, 1);
}

LoopWord random_loop(const LoopSpace& L, Rng& rng, const SampleOptions& o)
{
    return random_word_from(L, L.basepoint(), rng, o);
}

PathCell random_path_cell(const LoopSpace& L, Rng& rng, const SampleOptions& o)
{
    const auto& X = L.base();
    std::vector<SimplexTerm> bases;
    for (std::size_t id = 0; id < X.size(); ++id)
    {
        const SimplexTerm t = term(GeneratorId{static_cast<std::int32_t>(id)});
        if (dim(X, t) <= o.max_dim)
            bases.push_back(t);
    }
    SimplexTerm base = bases[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(bases.size()) - 1))];
    base = maybe_degenerate(X, base, rng, o.degenerate_rate);
    const GeneratorId top = endpoints(X, base).max;
    return canonical(L, make_path_cell(L, base, random_word_from(L, top, rng, o)));
}

LoopWord random_group_element(const LoopSpace& L, Rng& rng, int max_length)
{
    SampleOptions o;
    o.max_letters = max_length;
    o.max_dim = 1;
    o.degenerate_rate = 0.0;
    return reduce(L, walk(L, L.basepoint(), L.basepoint(), rng, o, 1));
}

// -- results ----------------------------------------------------------------------

void SuiteResult::fail(std::string message)
{
    ++failed;
    if (failures.size() < kept_failures)
        failures.push_back(std::move(message));
}

void SuiteResult::merge(const SuiteResult& other)
{
    checked += other.checked;
    for (const auto& f : other.failures)
    {
        if (failures.size() < kept_failures)
            failures.push_back(f);
    }
    failed += other.failed;
}

// -- suites -----------------------------------------------------------------------

SuiteResult cube_suite(int n, EarlyFaceRule rule)
{
    SuiteResult out{"cube", 0, 0, {}};
    const CubeModel m;
    for (bool aug : {false, true})
    {
        for (const auto& c : enumerate_cube_cells(n, aug))
            absorb(out, check_all(m, c, rule), "cell");
    }
    return out;
}

SuiteResult cubical_suite(const LoopSpace& L, const SuiteOptions& o, EarlyFaceRule rule)
{
    SuiteResult out{"cubical", 0, 0, {}};
    Rng rng(o.seed);
    const WordModel wm{&L};
    const PathModel pm{&L};
    for (std::size_t k = 0; k < o.samples; ++k)
    {
        const LoopWord w = reduce(L, random_loop(L, rng, o.sampling));
        absorb(out, check_all(wm, w, rule), "word");
        const PathCell c = random_path_cell(L, rng, o.sampling);
        absorb(out, check_all(pm, c, rule), "path");
    }
    return out;
}

SuiteResult dsq_suite(const LoopSpace& L, const SuiteOptions& o)
{
    SuiteResult out{"dsq", 0, 0, {}};
    Rng rng(o.seed);
    for (std::size_t k = 0; k < o.samples; ++k)
    {
        const LoopWord w = random_loop(L, rng, o.sampling);
        const std::string lit = format_word(L, reduce(L, w));
        for (Variant v : {Variant::DE, Variant::Normalized})
        {
            const auto c = Chain<Integer>::word(L, w, v);
            const auto dd = boundary(L, boundary(L, c));
            ++out.checked;
            if (!dd.is_zero_chain())
                out.fail("word " + lit + " (" + std::string(to_string(v)) + "): d^2 = " + format_chain(L, dd));
        }
        const auto de = Chain<Integer>::word(L, w, Variant::DE);
        const auto lhs = to_normalized(L, boundary(L, de));
        const auto rhs = boundary(L, to_normalized(L, de));
        ++out.checked;
        if (!(lhs == rhs))
            out.fail("word " + lit + ": quotient map: " + format_chain(L, lhs) + " != " + format_chain(L, rhs));
    }
    return out;
}

SuiteResult leibniz_suite(const LoopSpace& L, const SuiteOptions& o)
{
    SuiteResult out{"leibniz", 0, 0, {}};
    Rng rng(o.seed);
    for (std::size_t k = 0; k < o.samples; ++k)
    {
        const LoopWord u = reduce(L, random_loop(L, rng, o.sampling));
        const LoopWord w = reduce(L, random_loop(L, rng, o.sampling));
        for (Variant v : {Variant::DE, Variant::Normalized})
        {
            const auto U = Chain<Integer>::word(L, u, v);
            const auto W = Chain<Integer>::word(L, w, v);
            const Integer sign = degree(L, u) % 2 == 0 ? 1 : -1;
            const auto lhs = boundary(L, multiply(L, U, W));
            const auto rhs = multiply(L, boundary(L, U), W) + multiply(L, U, boundary(L, W)).scaled(sign);
            ++out.checked;
            if (!(lhs == rhs))
            {
                out.fail("pair " + format_word(L, u) + " , " + format_word(L, w) + " (" + std::string(to_string(v)) +
                         "): " + format_chain(L, lhs) + " != " + format_chain(L, rhs));
            }
        }
    }
    return out;
}

SuiteResult theorem2_suite(const LoopSpace& L, const SuiteOptions& o)
{
    SuiteResult out{"theorem2", 0, 0, {}};
    for (Variant v : {Variant::DE, Variant::Normalized})
    {
        const auto rep = compare_theorem2(L, o.degree, o.max_length, v);
        out.checked += rep.words;
        for (const auto& m : rep.mismatches)
        {
            out.fail("word " + m.word + " (" + std::string(to_string(v)) + "): loop " + m.loop_side + " != cobar " +
                     m.cobar_side);
        }
    }
    return out;
}

SuiteResult covering_suite(const LoopSpace& L, const SuiteOptions& o)
{
    SuiteResult out{"covering", 0, 0, {}};
    const auto& X = L.base();
    const CoveringGraph g = one_skeleton(L, o.max_length);

    ++out.checked;
    if (!is_connected(g))
        out.fail("graph of radius " + std::to_string(o.max_length) + " is not connected");
    if (X.of_dim(0).size() == 1)
    {
        ++out.checked;
        if (!is_acyclic(g))
            out.fail("graph of radius " + std::to_string(o.max_length) + " has a cycle");
    }

    std::map<GeneratorId, int> incidence;
    for (GeneratorId e : X.of_dim(1))
    {
        const auto ends = endpoints(X, term(e));
        ++incidence[ends.min];
        ++incidence[ends.max];
    }
    const auto deg = degrees(g);
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
    {
        if (g.boundary[k])
            continue;
        ++out.checked;
        const int want = incidence[g.vertices[k].base.generator];
        if (deg[k] != want)
        {
            out.fail("vertex " + format_path_cell(L, g.vertices[k]) + ": degree " + std::to_string(deg[k]) +
                     ", expected " + std::to_string(want));
        }
    }
    for (const auto& msg : covering_violations(L, g))
        out.fail(msg);
    return out;
}

SuiteResult group_suite(const LoopSpace& L, const SuiteOptions& o)
{
    SuiteResult out{"group", 0, 0, {}};
    Rng rng(o.seed);
    const LoopWord e = unit_word(L.basepoint());
    for (std::size_t k = 0; k < o.samples; ++k)
    {
        const LoopWord a = random_group_element(L, rng, o.max_length);
        const LoopWord b = random_group_element(L, rng, o.max_length);
        const LoopWord c = random_group_element(L, rng, o.max_length);
        const std::string lit = format_word(L, a) + " , " + format_word(L, b) + " , " + format_word(L, c);
        auto expect = [&](const char* law, const LoopWord& lhs, const LoopWord& rhs) {
            ++out.checked;
            if (lhs != rhs)
                out.fail(std::string(law) + " on " + lit + ": " + format_word(L, lhs) + " != " + format_word(L, rhs));
        };
        const LoopWord ab = compose(L, a, b);
        ++out.checked;
        if (degree(L, ab) != 0 || !is_reduced(L, ab) || ab.source != L.basepoint() || ab.target != L.basepoint())
            out.fail("closure on " + lit + ": " + format_word(L, ab));
        expect("associativity", compose(L, ab, c), compose(L, a, compose(L, b, c)));
        expect("left unit", compose(L, e, a), a);
        expect("right unit", compose(L, a, e), a);
        expect("left inverse", compose(L, invert(L, a), a), e);
        expect("right inverse", compose(L, a, invert(L, a)), e);
    }
    return out;
}

}   // namespace necklical
