#include "necklical/path_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <tuple>

namespace necklical {

PathCell make_path_cell(const LoopSpace& L, SimplexTerm base, LoopWord tail)
{
    const auto& Z = L.z();
    if (!L.in_base(base.generator))
        throw TopologyError("path cell base " + to_string(Z, base) + " is not a simplex of X");
    const GeneratorId top = endpoints(Z, base).max;
    if (tail.empty())
        tail = unit_word(top);
    if (tail.source != top)
    {
        throw TopologyError("path cell tail starts at " + Z.generator(tail.source).name + " but the base ends at " +
                            Z.generator(top).name);
    }
    if (tail.target != L.basepoint())
        throw TopologyError("path cell tail does not end at the basepoint");
    return PathCell{std::move(base), std::move(tail)};
}

int dim(const LoopSpace& L, const PathCell& c)
{
    return dim(L.z(), c.base) + degree(L, c.tail);
}

PathCell canonical(const LoopSpace& L, PathCell c)
{
    const auto& Z = L.z();
    while (dim(Z, c.base) >= 1 && is_top_degenerate(Z, c.base))
    {
        const GeneratorId v = endpoints(Z, c.base).max;
        c.base = strip_outer(c.base);
        if (c.tail.empty())
            c.tail.letters.push_back(vertex_degeneracy(v, 2));
        else
            c.tail.letters.front() = degeneracy(Z, c.tail.letters.front(), 0);
    }
    c.tail = reduce(L, std::move(c.tail));
    return c;
}

PathCell path_face_raw(const LoopSpace& L, const PathCell& c, int i, int eps)
{
    const auto& Z = L.z();
    if (eps != 0 && eps != 1)
        throw TopologyError("face direction must be 0 or 1");
    const int p = dim(Z, c.base);
    const int n = p + degree(L, c.tail);
    if (i < 1 || i > n)
    {
        throw TopologyError("path face index " + std::to_string(i) + " out of range [1, " + std::to_string(n) +
                            "]");
    }
    if (i > p)
        return PathCell{c.base, word_face_raw(L, c.tail, i - p, eps)};
    if (eps == 1)
        return PathCell{face(Z, c.base, i - 1), c.tail};

    PathCell out{front_face(Z, c.base, i - 1), c.tail};
    out.tail.letters.insert(out.tail.letters.begin(), back_face(Z, c.base, i - 1));
    out.tail.source = endpoints(Z, out.base).max;
    return out;
}

PathCell path_face(const LoopSpace& L, const PathCell& c, int i, int eps)
{
    return canonical(L, path_face_raw(L, c, i, eps));
}

PathCell path_degeneracy_raw(const LoopSpace& L, const PathCell& c, int j)
{
    const auto& Z = L.z();
    const int p = dim(Z, c.base);
    int total = p + 1;
    for (const auto& t : c.tail.letters)
        total += dim(Z, t);
    if (j < 1 || j > total)
    {
        throw TopologyError("path degeneracy index " + std::to_string(j) + " out of range [1, " +
                            std::to_string(total) + "]");
    }
    if (j <= p + 1)
        return PathCell{degeneracy(Z, c.base, j - 1), c.tail};
    return PathCell{c.base, word_degeneracy(L, c.tail, j - p)};
}

PathCell path_degeneracy(const LoopSpace& L, const PathCell& c, int j)
{
    return canonical(L, path_degeneracy_raw(L, c, j));
}

PathCell action(const LoopSpace& L, const PathCell& c, const LoopWord& w)
{
    if (w.source != L.basepoint() || w.target != L.basepoint())
        throw TopologyError("action: the acting word must be a loop at the basepoint");
    return canonical(L, PathCell{c.base, compose(L, c.tail, w)});
}

PathCell iota(const LoopSpace& L, const LoopWord& w)
{
    return make_path_cell(L, term(L.basepoint()), reduce(L, w));
}

SimplexTerm pr(const PathCell& c)
{
    return c.base;
}

std::string format_path_cell(const LoopSpace& L, const PathCell& c)
{
    return to_string(L.z(), c.base) + " | " + format_word(L, c.tail);
}

PathCell parse_path_cell(const LoopSpace& L, std::string_view text)
{
    const auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw TopologyError("path cell literal needs 'base | tail'");
    SimplexTerm base = parse_letter(L.z(), text.substr(0, bar));
    LoopWord tail = parse_word(L, text.substr(bar + 1));
    if (tail.empty())
        tail = unit_word(endpoints(L.z(), base).max);
    return make_path_cell(L, std::move(base), std::move(tail));
}

// -- 1-skeleton ----------------------------------------------------------------------

std::size_t CoveringGraph::index_of(const PathCell& v) const
{
    for (std::size_t k = 0; k < vertices.size(); ++k)
    {
        if (vertices[k] == v)
            return k;
    }
    return vertices.size();
}

CoveringGraph one_skeleton(const LoopSpace& L, int max_length)
{
    if (max_length < 1)
        throw TopologyError("one_skeleton: max length must be at least 1");
    const auto& X = L.base();
    const auto& Z = L.z();
    const GeneratorId x0 = L.basepoint();

    CoveringGraph g;
    g.max_length = max_length;
    for (GeneratorId v : X.of_dim(0))
    {
        for (auto& y : enumerate_words(L, 0, max_length, v, x0))
            g.vertices.push_back(PathCell{term(v), std::move(y)});
    }
    std::sort(g.vertices.begin(), g.vertices.end(), [](const PathCell& a, const PathCell& b) {
        return std::forward_as_tuple(a.tail.length(), a.base, a.tail.letters) <
               std::forward_as_tuple(b.tail.length(), b.base, b.tail.letters);
    });
    std::map<PathCell, std::size_t> index;
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
    {
        index.emplace(g.vertices[k], k);
        g.boundary.push_back(static_cast<int>(g.vertices[k].tail.length()) == max_length);
    }

    for (GeneratorId a : X.of_dim(1))
    {
        const auto e = endpoints(Z, term(a));
        for (auto& y : enumerate_words(L, 0, max_length, e.max, x0))
        {
            PathCell cell{term(a), std::move(y)};
            auto from = index.find(path_face(L, cell, 1, 0));
            auto to = index.find(path_face(L, cell, 1, 1));
            if (from == index.end() || to == index.end())
                continue;
            g.edges.push_back(CoveringGraph::Edge{from->second, to->second, a, std::move(cell)});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });
    return g;
}

namespace {

struct UnionFind
{
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

}   // namespace

bool is_connected(const CoveringGraph& g)
{
    if (g.vertices.empty())
        return true;
    UnionFind uf(g.vertices.size());
    std::size_t components = g.vertices.size();
    for (const auto& e : g.edges)
    {
        if (uf.unite(e.from, e.to))
            --components;
    }
    return components == 1;
}

bool is_acyclic(const CoveringGraph& g)
{
    UnionFind uf(g.vertices.size());
    return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return uf.unite(e.from, e.to); });
}

std::vector<int> degrees(const CoveringGraph& g)
{
    std::vector<int> out(g.vertices.size(), 0);
    for (const auto& e : g.edges)
    {
        ++out[e.from];
        ++out[e.to];
    }
    return out;
}

std::vector<std::string> covering_violations(const LoopSpace& L, const CoveringGraph& g)
{
    const auto& X = L.base();
    const auto& Z = L.z();
    // (vertex, edge of X, end) -> number of incident lifts; end 0 = min side
    std::map<std::tuple<std::size_t, GeneratorId, int>, int> lifts;
    for (const auto& e : g.edges)
    {
        ++lifts[{e.from, e.label, 0}];
        ++lifts[{e.to, e.label, 1}];
    }
    std::vector<std::string> out;
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
    {
        if (g.boundary[u])
            continue;
        const GeneratorId v = g.vertices[u].base.generator;
        for (GeneratorId a : X.of_dim(1))
        {
            const auto ends = endpoints(Z, term(a));
            for (int end = 0; end < 2; ++end)
            {
                if ((end == 0 ? ends.min : ends.max) != v)
                    continue;
                auto it = lifts.find({u, a, end});
                const int count = it == lifts.end() ? 0 : it->second;
                if (count != 1)
                {
                    out.push_back("vertex (" + format_path_cell(L, g.vertices[u]) + ") has " + std::to_string(count) +
                                  " lifts of " + X.generator(a).name + (end == 0 ? " at its start" : " at its end"));
                }
            }
        }
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char ch : s)
    {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

}   // namespace

void write_dot(std::ostream& os, const LoopSpace& L, const CoveringGraph& g)
{
    os << "digraph \"" << dot_escape(L.base().name()) << "\" {\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
    {
        os << "  n" << k << " [label=\"" << dot_escape(format_path_cell(L, g.vertices[k])) << '"';
        if (g.boundary[k])
            os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : g.edges)
    {
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(L.base().generator(e.label).name)
           << "\"];\n";
    }
    os << "}\n";
}

void write_adjacency(std::ostream& os, const LoopSpace& L, const CoveringGraph& g)
{
    os << "vertices " << g.vertices.size() << " edges " << g.edges.size() << " max-length " << g.max_length << '\n';
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
    {
        os << "v " << k << ' ' << format_path_cell(L, g.vertices[k]);
        if (g.boundary[k])
            os << " boundary";
        os << '\n';
    }
    for (const auto& e : g.edges)
        os << "e " << e.from << ' ' << e.to << ' ' << L.base().generator(e.label).name << '\n';
}

}   // namespace necklical
