#include "necklical/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace necklical {

// -- DegeneracyWord ----------------------------------------------------------

DegeneracyWord DegeneracyWord::from_raw(std::span<const int> innermost_first)
{
    DegeneracyWord w;
    for (int j : innermost_first)
        w = w.then(j);
    return w;
}

DegeneracyWord DegeneracyWord::from_canonical(std::vector<int> indices)
{
    for (std::size_t k = 0; k < indices.size(); ++k)
    {
        if (indices[k] < 0 || (k > 0 && indices[k] <= indices[k - 1]))
            throw TopologyError("degeneracy indices must be non-negative and strictly increasing");
    }
    DegeneracyWord w;
    w.indices_ = std::move(indices);
    return w;
}

DegeneracyWord DegeneracyWord::then(int j) const
{
    if (j < 0)
        throw TopologyError("negative degeneracy index");
    // s_j s_i = s_i s_{j-1} for i < j: every index >= j moves up by one and j
    // slots in below them.
    DegeneracyWord w;
    w.indices_.reserve(indices_.size() + 1);
    bool placed = false;
    for (int i : indices_)
    {
        if (i >= j && !placed)
        {
            w.indices_.push_back(j);
            placed = true;
        }
        w.indices_.push_back(i >= j ? i + 1 : i);
    }
    if (!placed)
        w.indices_.push_back(j);
    return w;
}

bool DegeneracyWord::contains(int j) const
{
    return std::binary_search(indices_.begin(), indices_.end(), j);
}

// -- SimplicialPresentation --------------------------------------------------

const Generator& SimplicialPresentation::generator(GeneratorId id) const
{
    if (id.index < 0 || static_cast<std::size_t>(id.index) >= generators_.size())
        throw TopologyError("unknown generator id " + std::to_string(id.index));
    return generators_[static_cast<std::size_t>(id.index)];
}

std::optional<GeneratorId> SimplicialPresentation::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

GeneratorId SimplicialPresentation::require(const std::string& name) const
{
    if (auto id = find(name))
        return *id;
    throw TopologyError("unknown generator '" + name + "'");
}

std::vector<GeneratorId> SimplicialPresentation::of_dim(int d) const
{
    std::vector<GeneratorId> out;
    for (std::size_t k = 0; k < generators_.size(); ++k)
    {
        if (generators_[k].dim == d)
            out.push_back(GeneratorId{static_cast<std::int32_t>(k)});
    }
    return out;
}

int SimplicialPresentation::max_dim() const
{
    int d = 0;
    for (const auto& g : generators_)
        d = std::max(d, g.dim);
    return d;
}

std::optional<GeneratorId> SimplicialPresentation::op(GeneratorId id) const
{
    if (id.index < 0 || static_cast<std::size_t>(id.index) >= op_.size())
        return std::nullopt;
    return op_[static_cast<std::size_t>(id.index)];
}

bool SimplicialPresentation::has_op_pairing() const
{
    return std::any_of(op_.begin(), op_.end(), [](const auto& o) { return o.has_value(); });
}

// -- Builder -----------------------------------------------------------------

SimplicialPresentation::Builder::Builder(std::string name)
{
    result_.name_ = std::move(name);
}

std::optional<GeneratorId> SimplicialPresentation::Builder::find(const std::string& name) const
{
    return result_.find(name);
}

int SimplicialPresentation::Builder::dim_of(GeneratorId id) const
{
    return result_.generator(id).dim;
}

GeneratorId SimplicialPresentation::Builder::add_vertex(const std::string& name)
{
    return add_generator(name, 0, {});
}

GeneratorId SimplicialPresentation::Builder::add_generator(const std::string& name, int d,
                                                           std::vector<SimplexTerm> faces)
{
    if (name.empty())
        throw TopologyError("generator names must be non-empty");
    if (result_.by_name_.count(name) != 0)
        throw TopologyError("duplicate generator name '" + name + "'");
    if (d < 0)
        throw TopologyError("generator '" + name + "' has negative dimension");
    const std::size_t expected = d == 0 ? 0 : static_cast<std::size_t>(d) + 1;
    if (faces.size() != expected)
    {
        throw TopologyError("generator '" + name + "' of dimension " + std::to_string(d) + " needs " +
                            std::to_string(expected) + " faces, got " + std::to_string(faces.size()));
    }
    for (std::size_t i = 0; i < faces.size(); ++i)
    {
        const auto& f = faces[i];
        const int base = result_.generator(f.generator).dim;
        const auto& idx = f.degeneracies.indices();
        for (std::size_t m = 0; m < idx.size(); ++m)
        {
            if (idx[m] > base + static_cast<int>(m))
            {
                throw TopologyError("face " + std::to_string(i) + " of '" + name +
                                    "' has an out-of-range degeneracy index");
            }
        }
        if (base + static_cast<int>(idx.size()) != d - 1)
        {
            throw TopologyError("face " + std::to_string(i) + " of '" + name + "' has dimension " +
                                std::to_string(base + static_cast<int>(idx.size())) + ", expected " +
                                std::to_string(d - 1));
        }
    }
    const GeneratorId id{static_cast<std::int32_t>(result_.generators_.size())};
    result_.generators_.push_back(Generator{name, d, std::move(faces)});
    result_.by_name_.emplace(name, id);
    result_.op_.emplace_back();
    return id;
}

void SimplicialPresentation::Builder::set_basepoint(GeneratorId v)
{
    if (result_.generator(v).dim != 0)
        throw TopologyError("basepoint must be a vertex");
    result_.basepoint_ = v;
    has_basepoint_ = true;
}

void SimplicialPresentation::Builder::pair_op(GeneratorId a, GeneratorId a_op)
{
    if (result_.generator(a).dim != 1 || result_.generator(a_op).dim != 1)
        throw TopologyError("op-pairing is defined on 1-generators only");
    result_.op_[static_cast<std::size_t>(a.index)] = a_op;
    result_.op_[static_cast<std::size_t>(a_op.index)] = a;
}

SimplicialPresentation SimplicialPresentation::Builder::build() &&
{
    if (!has_basepoint_)
    {
        auto vertices = result_.of_dim(0);
        if (vertices.empty())
            throw TopologyError("presentation has no vertices");
        result_.basepoint_ = vertices.front();
    }
    return std::move(result_);
}

// -- simplex calculus --------------------------------------------------------

SimplexTerm term(GeneratorId g)
{
    return SimplexTerm{DegeneracyWord{}, g};
}

int dim(const SimplicialPresentation& X, const SimplexTerm& t)
{
    return X.generator(t.generator).dim + static_cast<int>(t.degeneracies.size());
}

SimplexTerm degeneracy(const SimplicialPresentation& X, const SimplexTerm& t, int j)
{
    const int n = dim(X, t);
    if (j < 0 || j > n)
        throw TopologyError("degeneracy index " + std::to_string(j) + " out of range for dimension " +
                            std::to_string(n));
    return SimplexTerm{t.degeneracies.then(j), t.generator};
}

SimplexTerm strip_outer(const SimplexTerm& t)
{
    if (t.degeneracies.empty())
        throw TopologyError("strip_outer on a nondegenerate simplex");
    auto idx = t.degeneracies.indices();
    idx.pop_back();
    return SimplexTerm{DegeneracyWord::from_canonical(std::move(idx)), t.generator};
}

namespace {

SimplexTerm face_unchecked(const SimplicialPresentation& X, const SimplexTerm& t, int i)
{
    if (t.degeneracies.empty())
        return X.generator(t.generator).faces[static_cast<std::size_t>(i)];

    const int j = t.degeneracies.indices().back();
    const SimplexTerm rest = strip_outer(t);
    if (i < j)
        return degeneracy(X, face_unchecked(X, rest, i), j - 1);
    if (i == j || i == j + 1)
        return rest;
    return degeneracy(X, face_unchecked(X, rest, i - 1), j);
}

}   // namespace

SimplexTerm face(const SimplicialPresentation& X, const SimplexTerm& t, int i)
{
    const int n = dim(X, t);
    if (n < 1)
        throw TopologyError("face of a vertex");
    if (i < 0 || i > n)
        throw TopologyError("face index " + std::to_string(i) + " out of range for dimension " +
                            std::to_string(n));
    return face_unchecked(X, t, i);
}

SimplexTerm front_face(const SimplicialPresentation& X, const SimplexTerm& t, int k)
{
    SimplexTerm out = t;
    for (int d = dim(X, t); d > k; --d)
        out = face(X, out, d);
    return out;
}

SimplexTerm back_face(const SimplicialPresentation& X, const SimplexTerm& t, int k)
{
    SimplexTerm out = t;
    for (int m = 0; m < k; ++m)
        out = face(X, out, 0);
    return out;
}

GeneratorId vertex(const SimplicialPresentation& X, const SimplexTerm& t, int k)
{
    const int n = dim(X, t);
    if (k < 0 || k > n)
        throw TopologyError("vertex index out of range");
    return front_face(X, back_face(X, t, k), 0).generator;
}

Endpoints endpoints(const SimplicialPresentation& X, const SimplexTerm& t)
{
    return Endpoints{vertex(X, t, 0), vertex(X, t, dim(X, t))};
}

bool is_top_degenerate(const SimplicialPresentation& X, const SimplexTerm& t)
{
    return !t.degeneracies.empty() && t.degeneracies.indices().back() == dim(X, t) - 1;
}

bool is_bottom_degenerate(const SimplexTerm& t)
{
    return !t.degeneracies.empty() && t.degeneracies.indices().front() == 0;
}

bool is_vertex_degenerate(const SimplicialPresentation& X, const SimplexTerm& t)
{
    return !t.degeneracies.empty() && X.generator(t.generator).dim == 0;
}

bool is_unit_edge(const SimplicialPresentation& X, const SimplexTerm& t)
{
    return is_vertex_degenerate(X, t) && t.degeneracies.size() == 1;
}

SimplexTerm vertex_degeneracy(GeneratorId v, int n)
{
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        idx[static_cast<std::size_t>(k)] = k;
    return SimplexTerm{DegeneracyWord::from_canonical(std::move(idx)), v};
}

std::string to_string(const SimplicialPresentation& X, const SimplexTerm& t)
{
    std::string out;
    const auto& idx = t.degeneracies.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        out += "s" + std::to_string(*it) + ".";
    return out + X.generator(t.generator).name;
}

// -- Z(X) ----------------------------------------------------------------------

SimplicialPresentation z_extension(const SimplicialPresentation& X)
{
    if (X.has_op_pairing())
        throw TopologyError("z_extension: presentation already contains op-generators");

    SimplicialPresentation::Builder b(X.name().empty() ? "Z" : "Z(" + X.name() + ")");
    for (const auto& g : X.generators())
        b.add_generator(g.name, g.dim, g.faces);
    b.set_basepoint(X.basepoint());
    for (GeneratorId a : X.of_dim(1))
    {
        const auto& g = X.generator(a);
        const std::string op_name = g.name + "^op";
        if (X.find(op_name))
            throw TopologyError("z_extension: name clash with existing generator '" + op_name + "'");
        GeneratorId a_op = b.add_generator(op_name, 1, {g.faces[1], g.faces[0]});
        b.pair_op(a, a_op);
    }
    return std::move(b).build();
}

// -- fixtures ----------------------------------------------------------------

namespace {

std::string simplex_name(const std::vector<int>& vs)
{
    const bool small = std::all_of(vs.begin(), vs.end(), [](int v) { return v >= 0 && v < 10; });
    std::string out;
    for (std::size_t k = 0; k < vs.size(); ++k)
    {
        if (!small && k > 0)
            out += ',';
        out += std::to_string(vs[k]);
    }
    return out;
}

SimplicialPresentation from_simplices(std::set<std::vector<int>> simplices, std::string name)
{
    std::vector<std::vector<int>> ordered(simplices.begin(), simplices.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    SimplicialPresentation::Builder b(std::move(name));
    std::map<std::vector<int>, GeneratorId> ids;
    for (const auto& s : ordered)
    {
        const int d = static_cast<int>(s.size()) - 1;
        std::vector<SimplexTerm> faces;
        if (d > 0)
        {
            for (int i = 0; i <= d; ++i)
            {
                auto f = s;
                f.erase(f.begin() + i);
                faces.push_back(term(ids.at(f)));
            }
        }
        ids.emplace(s, b.add_generator(simplex_name(s), d, std::move(faces)));
    }
    b.set_basepoint(ids.begin()->second);
    return std::move(b).build();
}

void add_subsets(const std::vector<int>& facet, std::set<std::vector<int>>& out)
{
    const std::size_t n = facet.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
    {
        std::vector<int> s;
        for (std::size_t k = 0; k < n; ++k)
        {
            if (mask & (std::uint64_t{1} << k))
                s.push_back(facet[k]);
        }
        out.insert(std::move(s));
    }
}

}   // namespace

SimplicialPresentation standard_simplex(int n)
{
    if (n < 0)
        throw TopologyError("standard_simplex: n must be non-negative");
    std::vector<int> top(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        top[static_cast<std::size_t>(k)] = k;
    std::set<std::vector<int>> all;
    add_subsets(top, all);
    return from_simplices(std::move(all), "simplex:" + std::to_string(n));
}

SimplicialPresentation boundary_simplex(int n)
{
    if (n < 1)
        throw TopologyError("boundary_simplex: n must be at least 1");
    std::vector<int> top(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        top[static_cast<std::size_t>(k)] = k;
    std::set<std::vector<int>> all;
    add_subsets(top, all);
    all.erase(top);
    return from_simplices(std::move(all), "boundary-simplex:" + std::to_string(n));
}

SimplicialPresentation sphere_quotient(int n)
{
    if (n < 1)
        throw TopologyError("sphere_quotient: n must be at least 1");
    SimplicialPresentation::Builder b("sphere:" + std::to_string(n));
    GeneratorId x0 = b.add_vertex("x0");
    std::vector<SimplexTerm> faces(static_cast<std::size_t>(n) + 1, vertex_degeneracy(x0, n - 1));
    b.add_generator("sigma", n, std::move(faces));
    b.set_basepoint(x0);
    return std::move(b).build();
}

SimplicialPresentation wedge_of_circles(int r)
{
    if (r < 1)
        throw TopologyError("wedge_of_circles: r must be at least 1");
    SimplicialPresentation::Builder b("wedge:" + std::to_string(r));
    GeneratorId x0 = b.add_vertex("x0");
    for (int k = 0; k < r; ++k)
    {
        std::string name = r <= 26 ? std::string(1, static_cast<char>('a' + k)) : "a" + std::to_string(k + 1);
        b.add_generator(name, 1, {term(x0), term(x0)});
    }
    b.set_basepoint(x0);
    return std::move(b).build();
}

SimplicialPresentation from_facets(const std::vector<std::vector<int>>& facets, std::string name)
{
    if (facets.empty())
        throw TopologyError("malformed facet list: no facets");
    std::set<std::vector<int>> all;
    for (std::size_t f = 0; f < facets.size(); ++f)
    {
        auto facet = facets[f];
        if (facet.empty())
            throw TopologyError("malformed facet list: facet " + std::to_string(f) + " is empty");
        if (facet.size() > 20)
            throw TopologyError("malformed facet list: facet " + std::to_string(f) + " is too large");
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
            throw TopologyError("malformed facet list: facet " + std::to_string(f) + " repeats a vertex");
        add_subsets(facet, all);
    }
    return from_simplices(std::move(all), std::move(name));
}

// -- validate ----------------------------------------------------------------

ValidationReport validate(const SimplicialPresentation& X)
{
    ValidationReport report;
    if (X.size() == 0 || X.generator(X.basepoint()).dim != 0)
    {
        report.violations.push_back({Violation::Kind::Basepoint, "", -1, -1, "basepoint is not a vertex"});
    }

    for (std::size_t k = 0; k < X.size(); ++k)
    {
        const GeneratorId id{static_cast<std::int32_t>(k)};
        const auto& g = X.generator(id);
        if (g.dim < 2)
            continue;
        const SimplexTerm t = term(id);
        for (int j = 1; j <= g.dim; ++j)
        {
            for (int i = 0; i < j; ++i)
            {
                const SimplexTerm lhs = face(X, face(X, t, j), i);
                const SimplexTerm rhs = face(X, face(X, t, i), j - 1);
                if (lhs != rhs)
                {
                    std::ostringstream msg;
                    msg << "d" << i << " d" << j << " = " << to_string(X, lhs) << " but d" << j - 1 << " d" << i
                        << " = " << to_string(X, rhs);
                    report.violations.push_back({Violation::Kind::SimplicialIdentity, g.name, i, j, msg.str()});
                }
            }
        }
    }

    for (GeneratorId a : X.of_dim(1))
    {
        auto b = X.op(a);
        if (!b || *b < a)
            continue;
        const auto& ga = X.generator(a);
        const auto& gb = X.generator(*b);
        if (X.op(*b) != a)
            report.violations.push_back({Violation::Kind::OpPairing, ga.name, -1, -1, "op is not an involution"});
        if (gb.faces[0] != ga.faces[1] || gb.faces[1] != ga.faces[0])
        {
            report.violations.push_back(
                {Violation::Kind::OpPairing, ga.name, -1, -1, "faces of " + gb.name + " are not swapped"});
        }
    }
    return report;
}

}   // namespace necklical

std::size_t std::hash<necklical::SimplexTerm>::operator()(const necklical::SimplexTerm& t) const noexcept
{
    std::size_t h = std::hash<std::int32_t>{}(t.generator.index);
    for (int i : t.degeneracies.indices())
        h = h * 1000003u ^ static_cast<std::size_t>(i + 1);
    return h;
}
