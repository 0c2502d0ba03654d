#include "necklical/complex_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace necklical {

using nlohmann::json;

namespace {

std::string locate(const std::string& source, int line, int column)
{
    std::string out = source;
    if (line > 0)
        out += ":" + std::to_string(line) + ":" + std::to_string(column);
    return out;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte)
{
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k)
    {
        if (text[k] == '\n')
        {
            ++line;
            column = 1;
        }
        else
        {
            ++column;
        }
    }
    return {line, column};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TopologyError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

[[noreturn]] void semantic(const std::string& source, const std::string& where, const std::string& what)
{
    throw ParseError(source, 0, 0, where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& source, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        semantic(source, where, std::string("missing \"") + key + "\"");
    return *it;
}

std::string as_string(const json& j, const std::string& source, const std::string& where)
{
    if (!j.is_string())
        semantic(source, where, "expected a string");
    return j.get<std::string>();
}

}   // namespace

ParseError::ParseError(const std::string& source, int line, int column, const std::string& what)
    : TopologyError(locate(source, line, column) + ": " + what), line_(line), column_(column)
{
}

SimplicialPresentation parse_complex_json(std::string_view text, const std::string& source)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e)
    {
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        // drop the library's own prefix up to the last ':'
        if (auto pos = msg.rfind(": "); pos != std::string::npos)
            msg = msg.substr(pos + 2);
        throw ParseError(source, line, column, msg);
    }
    if (!doc.is_object())
        semantic(source, "document", "expected an object");

    std::string name = doc.contains("name") ? as_string(doc["name"], source, "name") : std::string();
    SimplicialPresentation::Builder b(name);

    const json& vertices = member(doc, "vertices", source, "document");
    if (!vertices.is_array() || vertices.empty())
        semantic(source, "vertices", "expected a non-empty array");
    for (std::size_t k = 0; k < vertices.size(); ++k)
    {
        const std::string where = "vertices[" + std::to_string(k) + "]";
        try
        {
            b.add_vertex(as_string(vertices[k], source, where));
        }
        catch (const ParseError&)
        {
            throw;
        }
        catch (const TopologyError& e)
        {
            semantic(source, where, e.what());
        }
    }

    const json empty = json::array();
    const json& gens = doc.contains("generators") ? doc["generators"] : empty;
    if (!gens.is_array())
        semantic(source, "generators", "expected an array");

    std::vector<std::size_t> order(gens.size());
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        order[k] = k;
        const std::string where = "generators[" + std::to_string(k) + "]";
        if (!gens[k].is_object())
            semantic(source, where, "expected an object");
        if (!member(gens[k], "dim", source, where).is_number_integer())
            semantic(source, where + ".dim", "expected an integer");
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
        return gens[a]["dim"].get<int>() < gens[c]["dim"].get<int>();
    });

    for (std::size_t k : order)
    {
        const json& g = gens[k];
        const std::string where = "generators[" + std::to_string(k) + "]";
        const std::string gname = as_string(member(g, "name", source, where), source, where + ".name");
        const int d = g["dim"].get<int>();
        if (d < 1)
            semantic(source, where, "generators must have dimension >= 1 (list vertices under \"vertices\")");
        const json& faces = member(g, "faces", source, where);
        if (!faces.is_array())
            semantic(source, where + ".faces", "expected an array");
        std::vector<SimplexTerm> terms;
        for (std::size_t f = 0; f < faces.size(); ++f)
        {
            const std::string fw = where + ".faces[" + std::to_string(f) + "]";
            const json& face_j = faces[f];
            try
            {
                if (face_j.is_string())
                {
                    // "s2.s0.gen", outermost first
                    std::string lit = face_j.get<std::string>();
                    std::vector<int> outer_first;
                    while (!b.find(lit) && lit.size() > 2 && lit[0] == 's')
                    {
                        auto dot = lit.find('.');
                        if (dot == std::string::npos || dot == 1)
                            break;
                        int idx = 0;
                        auto [p, ec] = std::from_chars(lit.data() + 1, lit.data() + dot, idx);
                        if (ec != std::errc() || p != lit.data() + dot)
                            break;
                        outer_first.push_back(idx);
                        lit = lit.substr(dot + 1);
                    }
                    auto id = b.find(lit);
                    if (!id)
                        semantic(source, fw, "unknown generator '" + lit + "'");
                    std::reverse(outer_first.begin(), outer_first.end());
                    terms.push_back(SimplexTerm{DegeneracyWord::from_raw(outer_first), *id});
                }
                else if (face_j.is_object())
                {
                    const std::string ref = as_string(member(face_j, "generator", source, fw), source, fw);
                    auto id = b.find(ref);
                    if (!id)
                        semantic(source, fw, "unknown generator '" + ref + "'");
                    std::vector<int> raw;
                    if (face_j.contains("degeneracies"))
                    {
                        const json& dj = face_j["degeneracies"];
                        if (!dj.is_array())
                            semantic(source, fw + ".degeneracies", "expected an array of integers");
                        for (const auto& v : dj)
                        {
                            if (!v.is_number_integer())
                                semantic(source, fw + ".degeneracies", "expected an array of integers");
                            raw.push_back(v.get<int>());
                        }
                    }
                    terms.push_back(SimplexTerm{DegeneracyWord::from_raw(raw), *id});
                }
                else
                {
                    semantic(source, fw, "expected an object or a term literal");
                }
            }
            catch (const ParseError&)
            {
                throw;
            }
            catch (const TopologyError& e)
            {
                semantic(source, fw, e.what());
            }
        }
        try
        {
            b.add_generator(gname, d, std::move(terms));
        }
        catch (const TopologyError& e)
        {
            semantic(source, where, e.what());
        }
    }

    if (doc.contains("basepoint"))
    {
        const std::string bp = as_string(doc["basepoint"], source, "basepoint");
        auto id = b.find(bp);
        if (!id)
            semantic(source, "basepoint", "unknown generator '" + bp + "'");
        try
        {
            b.set_basepoint(*id);
        }
        catch (const TopologyError& e)
        {
            semantic(source, "basepoint", e.what());
        }
    }
    return std::move(b).build();
}

std::string to_json(const SimplicialPresentation& X)
{
    json doc;
    doc["name"] = X.name();
    json vertices = json::array();
    for (GeneratorId v : X.of_dim(0))
        vertices.push_back(X.generator(v).name);
    doc["vertices"] = vertices;
    doc["basepoint"] = X.generator(X.basepoint()).name;
    json gens = json::array();
    for (const auto& g : X.generators())
    {
        if (g.dim == 0)
            continue;
        json faces = json::array();
        for (const auto& f : g.faces)
            faces.push_back({{"degeneracies", f.degeneracies.indices()}, {"generator", X.generator(f.generator).name}});
        gens.push_back({{"name", g.name}, {"dim", g.dim}, {"faces", faces}});
    }
    doc["generators"] = gens;
    return doc.dump(2) + "\n";
}

SimplicialPresentation parse_facets(std::string_view text, const std::string& source)
{
    std::vector<std::vector<int>> facets;
    int line = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        std::string_view row = text.substr(start, stop - start);
        ++line;
        if (auto hash = row.find('#'); hash != std::string_view::npos)
            row = row.substr(0, hash);
        std::vector<int> facet;
        std::size_t k = 0;
        while (k < row.size())
        {
            if (row[k] == ' ' || row[k] == '\t' || row[k] == '\r' || row[k] == ',')
            {
                ++k;
                continue;
            }
            int v = 0;
            auto [p, ec] = std::from_chars(row.data() + k, row.data() + row.size(), v);
            if (ec != std::errc() || v < 0)
            {
                throw ParseError(source, line, static_cast<int>(k) + 1,
                                 "expected a non-negative vertex number");
            }
            facet.push_back(v);
            k = static_cast<std::size_t>(p - row.data());
            if (k < row.size() && row[k] != ' ' && row[k] != '\t' && row[k] != '\r' && row[k] != ',')
                throw ParseError(source, line, static_cast<int>(k) + 1, "unexpected character");
        }
        if (!facet.empty())
        {
            std::sort(facet.begin(), facet.end());
            if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
                throw ParseError(source, line, 1, "facet repeats a vertex");
            facets.push_back(std::move(facet));
        }
        if (stop == text.size())
            break;
        start = stop + 1;
    }
    if (facets.empty())
        throw ParseError(source, 0, 0, "no facets");
    try
    {
        return from_facets(facets, source);
    }
    catch (const TopologyError& e)
    {
        throw ParseError(source, 0, 0, e.what());
    }
}

SimplicialPresentation load_complex_file(const std::string& path)
{
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return is_json ? parse_complex_json(read_file(path), path) : parse_facets(read_file(path), path);
}

SimplicialPresentation builtin_complex(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw TopologyError("builtin '" + std::string(spec) + "' needs the form kind:argument");
    const std::string kind(spec.substr(0, colon));
    const std::string arg(spec.substr(colon + 1));
    if (kind == "facets")
        return parse_facets(read_file(arg), arg);
    if (kind == "file")
        return load_complex_file(arg);

    int n = 0;
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || p != arg.data() + arg.size())
        throw TopologyError("builtin '" + std::string(spec) + "': expected an integer argument");
    if (kind == "sphere")
        return sphere_quotient(n);
    if (kind == "wedge")
        return wedge_of_circles(n);
    if (kind == "boundary-simplex")
        return boundary_simplex(n);
    if (kind == "simplex")
        return standard_simplex(n);
    throw TopologyError("unknown builtin kind '" + kind + "'");
}

}   // namespace necklical
