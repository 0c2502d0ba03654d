// necklical: command-line front end.
//
// Exit status: 0 on success, 1 when a check or validation fails, 2 on invalid
// input (bad options, malformed complexes or literals).

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "necklical/chains.hpp"
#include "necklical/cobar.hpp"
#include "necklical/complex_io.hpp"
#include "necklical/cube_cells.hpp"
#include "necklical/homology.hpp"
#include "necklical/loop_space.hpp"
#include "necklical/path_space.hpp"
#include "necklical/suites.hpp"

using namespace necklical;
using Json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

struct Source
{
    std::string file;
    std::string builtin;

    [[nodiscard]] bool given() const { return !file.empty() || !builtin.empty(); }

    [[nodiscard]] SimplicialPresentation load() const
    {
        if (!file.empty() && !builtin.empty())
            throw TopologyError("give either a complex file or --builtin, not both");
        if (!builtin.empty())
            return builtin_complex(builtin);
        if (!file.empty())
            return load_complex_file(file);
        throw TopologyError("no complex given (pass a file or --builtin <spec>)");
    }

    [[nodiscard]] std::string label() const { return builtin.empty() ? file : builtin; }
};

void add_source(CLI::App* cmd, Source& s)
{
    cmd->add_option("complex", s.file, "Complex file (.json document or facet list)");
    cmd->add_option("--builtin", s.builtin, "sphere:n, wedge:r, boundary-simplex:n, simplex:n, facets:<file>");
}

Json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::string pad(const std::string& s, std::size_t width)
{
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

// -- validate ----------------------------------------------------------------------

struct ValidateCmd
{
    Source src;
    bool json = false;

    int run() const
    {
        const SimplicialPresentation X = src.load();
        const ValidationReport rep = validate(X);
        std::vector<std::size_t> by_dim(static_cast<std::size_t>(X.max_dim() + 1), 0);
        for (const auto& g : X.generators())
            ++by_dim[static_cast<std::size_t>(g.dim)];
        if (json)
        {
            Json j;
            j["complex"] = X.name();
            j["ok"] = rep.ok();
            j["generators"] = X.size();
            j["by_dim"] = by_dim;
            j["basepoint"] = X.generator(X.basepoint()).name;
            Json vs = Json::array();
            for (const auto& v : rep.violations)
                vs.push_back({{"generator", v.generator}, {"i", v.i}, {"j", v.j}, {"message", v.message}});
            j["violations"] = vs;
            emit(j);
        }
        else
        {
            std::cout << X.name() << ": " << X.size() << " generators (";
            for (std::size_t d = 0; d < by_dim.size(); ++d)
                std::cout << (d ? ", " : "") << "dim " << d << ": " << by_dim[d];
            std::cout << "), basepoint " << X.generator(X.basepoint()).name << '\n';
            for (const auto& v : rep.violations)
                std::cout << "violation " << v.generator << ": " << v.message << '\n';
            std::cout << (rep.ok() ? "valid" : "invalid") << '\n';
        }
        return rep.ok() ? exit_ok : exit_failed;
    }
};

// -- cells -------------------------------------------------------------------------

struct CellsCmd
{
    Source src;
    int cube = -1;
    bool aug = false;
    int degree = 0;
    std::optional<int> max_length;
    std::string variant = "norm";
    bool json = false;

    int run() const
    {
        if (cube >= 0)
            return run_cube();
        const LoopSpace L(src.load());
        const Variant v = parse_variant(variant);
        const auto cap = max_length ? max_length : exact_length(L, degree);
        if (!cap)
            throw TopologyError("words of degree " + std::to_string(degree) + " need --max-len on this complex");
        const auto words = chain_basis(L, degree, *cap, v);
        if (json)
        {
            Json j;
            j["complex"] = L.base().name();
            j["degree"] = degree;
            j["variant"] = std::string(to_string(v));
            j["max_length"] = *cap;
            Json ws = Json::array();
            for (const auto& w : words)
                ws.push_back(Json{{"word", format_word(L, w)}, {"length", static_cast<int>(w.length())}});
            j["cells"] = ws;
            emit(j);
            return exit_ok;
        }
        for (const auto& w : words)
            std::cout << w.length() << "  " << format_word(L, w) << '\n';
        std::cout << words.size() << " words of degree " << degree << '\n';
        return exit_ok;
    }

    int run_cube() const
    {
        const auto cells = enumerate_cube_cells(cube, aug);
        if (json)
        {
            Json cs = Json::array();
            for (const auto& c : cells)
                cs.push_back({{"cell", format_cell(c)}, {"dim", cube_dim(c)}});
            emit(Json{{"cube", cube}, {"augmented", aug}, {"cells", cs}});
            return exit_ok;
        }
        for (const auto& c : cells)
            std::cout << cube_dim(c) << "  " << format_cell(c) << '\n';
        std::cout << cells.size() << " cells\n";
        return exit_ok;
    }
};

// -- boundary ----------------------------------------------------------------------

struct BoundaryCmd
{
    Source src;
    std::string word;
    std::string variant = "norm";
    bool cobar = false;
    bool json = false;

    int run() const
    {
        const LoopSpace L(src.load());
        const Variant v = parse_variant(variant);
        const LoopWord raw = parse_word(L, word);
        const auto gen = chain_generator(L, raw, v);
        const Chain<Integer> d = gen ? boundary<Integer>(L, *gen, v) : Chain<Integer>(v);
        std::optional<std::string> cobar_side;
        if (cobar && gen)
            cobar_side = format_cobar_chain(L, cobar_boundary(L, to_monomial(*gen), v));
        if (json)
        {
            Json j;
            j["word"] = format_word(L, reduce(L, raw));
            j["variant"] = std::string(to_string(v));
            j["killed"] = !gen.has_value();
            j["degree"] = degree(L, raw);
            Json terms = Json::array();
            for (const auto& [w, c] : d.terms())
                terms.push_back({{"word", format_word(L, w)}, {"coefficient", integer_json(c)}});
            j["boundary"] = terms;
            if (cobar_side)
                j["cobar"] = *cobar_side;
            emit(j);
            return exit_ok;
        }
        if (!gen)
            std::cout << "0  (" << format_word(L, reduce(L, raw)) << " vanishes in " << to_string(v) << ")\n";
        else
            std::cout << format_chain(L, d) << '\n';
        if (cobar_side)
            std::cout << "cobar: " << *cobar_side << '\n';
        return exit_ok;
    }
};

// -- check -------------------------------------------------------------------------

struct CheckCmd
{
    Source src;
    std::string suite;
    std::uint64_t seed = default_seed;
    std::size_t samples = 1000;
    int degree = 4;
    int max_length = 4;
    int cube = -1;
    std::string rule = "derived";
    bool json = false;

    int run() const
    {
        SuiteOptions o;
        o.seed = seed;
        o.samples = samples;
        o.degree = degree;
        o.max_length = max_length;
        const EarlyFaceRule r = rule == "uniform" ? EarlyFaceRule::Uniform : EarlyFaceRule::Derived;

        SuiteResult res;
        std::string target;
        if (suite == "cubical" && cube >= 0 && !src.given())
        {
            res = cube_suite(cube, r);
            res.suite = "cubical";
            target = "I^" + std::to_string(cube);
        }
        else
        {
            const LoopSpace L(src.load());
            target = L.base().name();
            if (suite == "cubical")
            {
                res = cubical_suite(L, o, r);
                if (cube >= 0)
                    res.merge(cube_suite(cube, r));
            }
            else if (suite == "dsq")
                res = dsq_suite(L, o);
            else if (suite == "leibniz")
                res = leibniz_suite(L, o);
            else if (suite == "theorem2")
                res = theorem2_suite(L, o);
            else if (suite == "covering")
                res = covering_suite(L, o);
            else if (suite == "group")
                res = group_suite(L, o);
        }

        if (json)
        {
            Json j;
            j["suite"] = suite;
            j["complex"] = target;
            j["seed"] = seed;
            j["samples"] = samples;
            j["degree"] = degree;
            j["max_length"] = max_length;
            j["checked"] = res.checked;
            j["failed"] = res.failed;
            j["pass"] = res.ok();
            j["failures"] = res.failures;
            emit(j);
        }
        else
        {
            std::cout << "suite " << suite << " on " << target << ": ";
            if (res.ok())
                std::cout << "pass (" << res.checked << " checks)\n";
            else
                std::cout << "FAIL (" << res.failed << " of " << res.checked << " checks)\n";
            for (const auto& f : res.failures)
                std::cout << "  " << f << '\n';
        }
        return res.ok() ? exit_ok : exit_failed;
    }
};

// -- homology ----------------------------------------------------------------------

struct HomologyCmd
{
    Source src;
    int degree = 0;
    std::optional<int> through;
    std::optional<int> max_length;
    std::string coeff = "z";
    std::string variant = "norm";
    bool scan = false;
    bool json = false;

    int run() const
    {
        const LoopSpace L(src.load());
        const Variant v = parse_variant(variant);
        const CoefficientSpec c = parse_coefficients(coeff);
        if (!max_length && !L.finite_per_degree())
            throw TopologyError("this complex has infinitely many words per degree; pass --max-len");

        std::vector<HomologyRow> rows;
        if (scan)
        {
            if (!max_length)
                throw TopologyError("--scan needs --max-len");
            rows = stabilization_scan(L, degree, v, c, 1, *max_length);
        }
        else
        {
            const int last = through.value_or(degree);
            for (int n = degree; n <= last; ++n)
                rows.push_back(homology(L, n, v, c, max_length));
        }

        if (json)
        {
            Json out = Json::array();
            for (const auto& r : rows)
            {
                Json j;
                j["degree"] = r.degree;
                j["variant"] = std::string(to_string(r.variant));
                j["coefficients"] = to_string(r.coefficients);
                j["group"] = r.group();
                j["free_rank"] = r.free_rank;
                Json t = Json::array();
                for (const auto& q : r.torsion)
                    t.push_back(integer_json(q));
                j["torsion"] = t;
                j["max_length"] = r.max_length;
                j["window"] = r.window;
                j["flagged_columns"] = r.flagged_columns;
                j["exact"] = r.exact;
                if (scan)
                    j["stabilized"] = r.stabilized;
                out.push_back(j);
            }
            emit(Json{{"complex", L.base().name()}, {"rows", out}});
            return exit_ok;
        }

        std::vector<std::vector<std::string>> table{{"degree", "max-len", "group", "window", "flagged", "exact"}};
        if (scan)
            table.front().push_back("stable");
        for (const auto& r : rows)
        {
            table.push_back({std::to_string(r.degree), std::to_string(r.max_length), r.group(),
                             std::to_string(r.window), std::to_string(r.flagged_columns), r.exact ? "yes" : "no"});
            if (scan)
                table.back().push_back(r.stabilized ? "yes" : "no");
        }
        std::vector<std::size_t> width(table.front().size(), 0);
        for (const auto& row : table)
        {
            for (std::size_t k = 0; k < row.size(); ++k)
                width[k] = std::max(width[k], row[k].size());
        }
        std::cout << L.base().name() << ", " << to_string(v) << ", coefficients " << to_string(c) << '\n';
        for (const auto& row : table)
        {
            std::string line;
            for (std::size_t k = 0; k < row.size(); ++k)
                line += (k ? "  " : "") + pad(row[k], width[k]);
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            std::cout << line << '\n';
        }
        return exit_ok;
    }
};

// -- group -------------------------------------------------------------------------

struct GroupCmd
{
    Source src;
    std::string element;
    std::string compose_with;
    bool do_invert = false;
    bool power_detect = false;
    std::string generator;
    std::optional<int> power_k;
    bool json = false;

    int run() const
    {
        const LoopSpace L(src.load());
        const LoopWord w = parse_word(L, element);
        if (w.source != L.basepoint() || w.target != L.basepoint() || degree(L, w) != 0)
            throw TopologyError("'" + element + "' is not a degree-0 loop at the basepoint");
        const LoopWord r = reduce(L, w);

        Json j;
        j["element"] = format_word(L, r);
        std::string text;
        if (power_detect)
        {
            if (!generator.empty())
            {
                const LoopWord g = reduce(L, parse_word(L, generator));
                const auto k = power_of(L, r, g);
                j["generator"] = format_word(L, g);
                j["exponent"] = k ? Json(*k) : Json();
                text = k ? "(" + format_word(L, g) + ")^" + std::to_string(*k)
                         : "not a power of " + format_word(L, g);
                if (!k)
                {
                    if (json)
                        emit(j);
                    else
                        std::cout << text << '\n';
                    return exit_failed;
                }
            }
            else
            {
                const auto p = primitive_root(L, r);
                j["root"] = format_word(L, p.root);
                j["exponent"] = p.exponent;
                text = "(" + format_word(L, p.root) + ")^" + std::to_string(p.exponent);
            }
        }
        else if (!compose_with.empty())
        {
            const LoopWord u = parse_word(L, compose_with);
            const LoopWord out = compose(L, r, reduce(L, u));
            j["with"] = format_word(L, reduce(L, u));
            j["result"] = format_word(L, out);
            text = format_word(L, out);
        }
        else if (do_invert)
        {
            text = format_word(L, invert(L, r));
            j["result"] = text;
        }
        else if (power_k)
        {
            text = format_word(L, power(L, r, *power_k));
            j["power"] = *power_k;
            j["result"] = text;
        }
        else
        {
            text = format_word(L, r);
            j["result"] = text;
        }
        if (json)
            emit(j);
        else
            std::cout << text << '\n';
        return exit_ok;
    }
};

// -- cover -------------------------------------------------------------------------

struct CoverCmd
{
    Source src;
    int max_length = 4;
    std::string out = "dot";
    bool json = false;

    int run() const
    {
        const LoopSpace L(src.load());
        const CoveringGraph g = one_skeleton(L, max_length);
        if (json)
        {
            Json vs = Json::array();
            for (std::size_t k = 0; k < g.vertices.size(); ++k)
                vs.push_back({{"cell", format_path_cell(L, g.vertices[k])}, {"boundary", static_cast<bool>(g.boundary[k])}});
            Json es = Json::array();
            for (const auto& e : g.edges)
                es.push_back({{"from", e.from}, {"to", e.to}, {"label", L.base().generator(e.label).name}});
            Json j;
            j["complex"] = L.base().name();
            j["max_length"] = g.max_length;
            j["connected"] = is_connected(g);
            j["acyclic"] = is_acyclic(g);
            j["vertices"] = vs;
            j["edges"] = es;
            emit(j);
            return exit_ok;
        }
        if (out == "adj")
            write_adjacency(std::cout, L, g);
        else
            write_dot(std::cout, L, g);
        return exit_ok;
    }
};

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Loop and path space models of finite simplicial sets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    ValidateCmd validate_cmd;
    auto* validate_app = app.add_subcommand("validate", "Check the simplicial identities of a complex");
    add_source(validate_app, validate_cmd.src);
    validate_app->add_flag("--json", validate_cmd.json);

    CellsCmd cells_cmd;
    auto* cells_app = app.add_subcommand("cells", "List cube cells or chain basis words");
    add_source(cells_app, cells_cmd.src);
    cells_app->add_option("--cube", cells_cmd.cube, "List the cells of I^n")->check(CLI::Range(0, 8));
    cells_app->add_flag("--aug", cells_cmd.aug, "Augmented cube cells");
    cells_app->add_option("--degree", cells_cmd.degree)->check(CLI::NonNegativeNumber);
    cells_app->add_option("--max-len", cells_cmd.max_length)->check(CLI::NonNegativeNumber);
    cells_app->add_option("--variant", cells_cmd.variant)->check(CLI::IsMember({"de", "norm"}));
    cells_app->add_flag("--json", cells_cmd.json);

    BoundaryCmd boundary_cmd;
    auto* boundary_app = app.add_subcommand("boundary", "Boundary of a word in the loop-space chains");
    add_source(boundary_app, boundary_cmd.src);
    boundary_app->add_option("--word", boundary_cmd.word, "Word literal, e.g. 02;12^op;01^op")->required();
    boundary_app->add_option("--variant", boundary_cmd.variant)->check(CLI::IsMember({"de", "norm"}));
    boundary_app->add_flag("--cobar", boundary_cmd.cobar, "Also print the cobar boundary");
    boundary_app->add_flag("--json", boundary_cmd.json);

    CheckCmd check_cmd;
    auto* check_app = app.add_subcommand("check", "Run a property suite");
    add_source(check_app, check_cmd.src);
    check_app->add_option("--suite", check_cmd.suite)
        ->required()
        ->check(CLI::IsMember({"cubical", "dsq", "leibniz", "theorem2", "covering", "group"}));
    check_app->add_option("--seed", check_cmd.seed, "Random seed")->capture_default_str();
    check_app->add_option("--samples", check_cmd.samples, "Random samples")->capture_default_str();
    check_app->add_option("--degree", check_cmd.degree)->capture_default_str()->check(CLI::NonNegativeNumber);
    check_app->add_option("--max-len", check_cmd.max_length)->capture_default_str()->check(CLI::NonNegativeNumber);
    check_app->add_option("--cube", check_cmd.cube, "Also check every cell of I^n and I^n_aug")
        ->check(CLI::Range(0, 7));
    check_app->add_option("--rule", check_cmd.rule, "Early-face rule for the cubical suite")
        ->capture_default_str()
        ->check(CLI::IsMember({"derived", "uniform"}));
    check_app->add_flag("--json", check_cmd.json);

    HomologyCmd homology_cmd;
    auto* homology_app = app.add_subcommand("homology", "Homology of the loop-space chains");
    add_source(homology_app, homology_cmd.src);
    homology_app->add_option("--degree", homology_cmd.degree)->required()->check(CLI::NonNegativeNumber);
    homology_app->add_option("--through", homology_cmd.through, "Last degree of a range")
        ->check(CLI::NonNegativeNumber);
    homology_app->add_option("--max-len", homology_cmd.max_length)->check(CLI::NonNegativeNumber);
    homology_app->add_option("--coeff", homology_cmd.coeff, "z, q or p:<prime>")->capture_default_str();
    homology_app->add_option("--variant", homology_cmd.variant)->check(CLI::IsMember({"de", "norm"}));
    homology_app->add_flag("--scan", homology_cmd.scan, "One row per cap from 1 to --max-len");
    homology_app->add_flag("--json", homology_cmd.json);

    GroupCmd group_cmd;
    auto* group_app = app.add_subcommand("group", "Degree-0 loops");
    add_source(group_app, group_cmd.src);
    group_app->add_option("--element", group_cmd.element)->required();
    auto* g_compose = group_app->add_option("--compose", group_cmd.compose_with, "Multiply on the right");
    auto* g_invert = group_app->add_flag("--invert", group_cmd.do_invert);
    auto* g_detect = group_app->add_flag("--power-detect", group_cmd.power_detect);
    auto* g_power = group_app->add_option("--power", group_cmd.power_k, "Raise to an integer power");
    group_app->add_flag("--reduce", "Print the reduced form (default)");
    group_app->add_option("--generator", group_cmd.generator, "Base for --power-detect")->needs(g_detect);
    g_compose->excludes(g_invert, g_detect, g_power);
    g_invert->excludes(g_detect, g_power);
    g_detect->excludes(g_power);
    group_app->add_flag("--json", group_cmd.json);

    CoverCmd cover_cmd;
    auto* cover_app = app.add_subcommand("cover", "Export the covering graph");
    add_source(cover_app, cover_cmd.src);
    cover_app->add_option("--max-len", cover_cmd.max_length)->capture_default_str()->check(CLI::NonNegativeNumber);
    cover_app->add_option("--out", cover_cmd.out)->capture_default_str()->check(CLI::IsMember({"dot", "adj"}));
    cover_app->add_flag("--json", cover_cmd.json);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try
    {
        if (*validate_app)
            return validate_cmd.run();
        if (*cells_app)
            return cells_cmd.run();
        if (*boundary_app)
            return boundary_cmd.run();
        if (*check_app)
            return check_cmd.run();
        if (*homology_app)
            return homology_cmd.run();
        if (*group_app)
            return group_cmd.run();
        if (*cover_app)
            return cover_cmd.run();
    }
    catch (const std::exception& e)
    {
        std::cout.flush();
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
