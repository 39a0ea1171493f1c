#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tdhom/canonical.hpp"
#include "tdhom/counterexample.hpp"
#include "tdhom/enumerate.hpp"
#include "tdhom/errors.hpp"
#include "tdhom/games.hpp"
#include "tdhom/homcount.hpp"
#include "tdhom/json_io.hpp"
#include "tdhom/restricted.hpp"
#include "tdhom/suites.hpp"
#include "tdhom/tree_depth.hpp"
#include "tdhom/witness.hpp"

namespace tdhom {

namespace {

constexpr const char* kReportSchema = "tdhom-report/1";
constexpr const char* kErrorSchema = "tdhom-error/1";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// A graph file, optionally carrying its own elimination tree.
struct LoadedPattern {
    Graph graph;
    std::optional<Decomposed> decomposed;
};

LoadedPattern load_pattern(const std::string& path) {
    const std::string text = slurp(path);
    std::size_t at = 0;
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    LoadedPattern out;
    if (at < text.size() && text[at] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& e) {
            throw input_error(std::string("graph json: ") + e.what());
        }
        if (j.contains("parent")) {
            out.decomposed = decomposed_from_json(j);
            out.graph = out.decomposed->graph();
        } else {
            out.graph = graph_from_json(j);
        }
    } else {
        out.graph = parse_graph_text(text);
    }
    return out;
}

PinMap parse_pins(const std::vector<std::string>& specs) {
    PinMap pins;
    for (const std::string& s : specs) {
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) throw input_error("pin must look like u=v: " + s);
        try {
            std::size_t used = 0;
            const int u = std::stoi(s.substr(0, eq), &used);
            if (used != eq) throw std::invalid_argument(s);
            const std::string rest = s.substr(eq + 1);
            const int v = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(s);
            if (!pins.emplace(u, v).second) throw input_error("duplicate pin for vertex " + s);
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("pin must name two integers: " + s);
        }
    }
    return pins;
}

ColorPalette palette_of_size(int colors) {
    static const std::vector<std::string> tokens{"white", "black",  "red",    "green",
                                                 "blue",  "yellow", "purple", "orange"};
    if (colors < 1 || colors > static_cast<int>(tokens.size()))
        throw input_error("--colors must be between 1 and " + std::to_string(tokens.size()));
    return ColorPalette(
        std::vector<std::string>(tokens.begin(), tokens.begin() + colors));
}

struct CliConfig {
    // hom count
    std::string kind = "hom";
    std::string pattern_path;
    std::string target_path;
    std::vector<std::string> pins;
    // treedepth
    std::string graph_path;
    // equiv / homvec
    int k = 2;
    int budget = 7;
    bool want_witness = false;
    std::string left_path;
    std::string right_path;
    // enum
    std::string enum_kind = "graphs";
    int n = 4;
    int colors = 1;
    // verify
    std::string suite;
    int jobs = 1;
    bool full = false;
    // counterexample
    int m = 1;
};

int cmd_hom_count(const CliConfig& cfg, std::ostream& out) {
    const LoadedPattern pattern = load_pattern(cfg.pattern_path);
    const Graph target = parse_graph_text(slurp(cfg.target_path));
    const PinMap pins = parse_pins(cfg.pins);

    HomCount count;
    if (cfg.kind == "hom") {
        const Decomposed d =
            pattern.decomposed ? *pattern.decomposed : make_decomposed(pattern.graph);
        count = hom_count_td(d, target, pins);
    } else if (cfg.kind == "emb") {
        count = emb_count(pattern.graph, target, pins);
    } else if (cfg.kind == "epi") {
        count = epi_count(pattern.graph, target, pins);
    } else {
        throw input_error("--kind must be hom, emb, or epi");
    }
    out << Json{{"schema", kReportSchema},
                {"command", "hom count"},
                {"kind", cfg.kind},
                {"count", count_to_string(count)}}
               .dump()
        << "\n";
    return 0;
}

int cmd_treedepth(const CliConfig& cfg, std::ostream& out) {
    const Graph g = parse_graph_text(slurp(cfg.graph_path));
    const TreeDepthResult result = tree_depth(g);
    Json parent = Json::object();
    for (const auto& [v, p] : result.witness.parents())
        if (p != RootedForest::kNoParent) parent[std::to_string(v)] = p;
    out << Json{{"schema", kReportSchema},
                {"command", "treedepth"},
                {"depth", result.depth},
                {"witness", Json{{"parent", std::move(parent)}}}}
               .dump()
        << "\n";
    return 0;
}

int cmd_equiv(const CliConfig& cfg, std::ostream& out) {
    const Graph left = parse_graph_text(slurp(cfg.left_path));
    const Graph right = parse_graph_text(slurp(cfg.right_path));
    if (!(left.palette() == right.palette()))
        throw input_error("equiv: the graphs use different palettes");
    const bool equivalent = ck_equivalent(left, right, cfg.k);
    Json j{{"schema", kReportSchema},
           {"command", "equiv"},
           {"k", cfg.k},
           {"equivalent", equivalent}};
    if (!equivalent && cfg.want_witness) {
        const DistinguishResult dr = distinguishing_pattern(left, right, cfg.k, cfg.budget);
        j["witness_exhausted"] = dr.exhausted;
        if (dr.pattern) {
            j["witness"] = graph_to_json(*dr.pattern);
            j["witness_left"] = count_to_string(dr.left_count);
            j["witness_right"] = count_to_string(dr.right_count);
        }
    }
    out << j.dump() << "\n";
    return equivalent ? 0 : 1;
}

int cmd_homvec(const CliConfig& cfg, std::ostream& out) {
    const Graph g = parse_graph_text(slurp(cfg.graph_path));
    const HomVector vec = hom_vector(g, cfg.k, cfg.budget);
    Json entries = Json::array();
    for (const auto& [key, count] : vec.entries)
        entries.push_back({{"key", key}, {"count", count_to_string(count)}});
    out << Json{{"schema", kReportSchema},
                {"command", "homvec"},
                {"k", vec.k},
                {"budget", vec.size_bound},
                {"entries", std::move(entries)}}
               .dump()
        << "\n";
    return 0;
}

int cmd_enum(const CliConfig& cfg, std::ostream& out) {
    const ColorPalette palette = palette_of_size(cfg.colors);
    if (cfg.enum_kind == "graphs") {
        for (const Graph& g : enum_graphs(cfg.n, palette)) out << graph_to_json(g).dump() << "\n";
    } else if (cfg.enum_kind == "conn-tdk") {
        for (const Graph& g : enum_conn_tdk(cfg.k, cfg.n, palette))
            out << graph_to_json(g).dump() << "\n";
    } else if (cfg.enum_kind == "decomposed") {
        for (const Decomposed& d : enum_decomposed(cfg.k, cfg.n, palette))
            out << decomposed_to_json(d).dump() << "\n";
    } else {
        throw input_error("--kind must be graphs, conn-tdk, or decomposed");
    }
    return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    SuiteOptions opts;
    opts.jobs = cfg.jobs;
    opts.full = cfg.full;
    int violations = 0;
    Json reports = Json::array();
    if (cfg.suite == "all") {
        for (const std::string& name : suite_names()) {
            SuiteResult r = run_suite(name, opts);
            violations += r.violations;
            reports.push_back(std::move(r.report));
        }
        out << Json{{"schema", kReportSchema}, {"command", "verify"}, {"suites", reports}}.dump()
            << "\n";
    } else {
        SuiteResult r = run_suite(cfg.suite, opts);
        violations = r.violations;
        out << r.report.dump() << "\n";
    }
    return violations == 0 ? 0 : 1;
}

int cmd_counterexample(const CliConfig& cfg, std::ostream& out) {
    const StarPair pair = build_star_pair(cfg.m);
    const StarPairVerification v = verify_star_pair(pair);
    Json a = Json::array(), a2 = Json::array(), family = Json::array();
    for (const auto& x : pair.a) a.push_back(count_to_string(x));
    for (const auto& x : pair.a2) a2.push_back(count_to_string(x));
    for (const FamilyMember& member : pair.family)
        family.push_back({{"name", member.name}, {"graph", graph_to_json(member.graph)}});
    Json verification{{"family_hom_equal", v.family_hom_equal},
                      {"sentence_left", v.sentence_left},
                      {"sentence_right", v.sentence_right},
                      {"fo2_game_separates", v.fo2_game_separates},
                      {"orders_match", v.orders_match},
                      {"ok", v.ok}};
    if (v.family_witness) verification["family_witness"] = *v.family_witness;
    if (v.ck2_equivalent) verification["ck2_equivalent"] = *v.ck2_equivalent;
    else if (v.orders_match) verification["ck2_equivalent"] = false;
    out << Json{{"schema", kReportSchema},
                {"command", "counterexample"},
                {"m", cfg.m},
                {"a0", count_to_string(pair.a0)},
                {"a", std::move(a)},
                {"a2", std::move(a2)},
                {"g", graph_to_json(pair.g)},
                {"g2", graph_to_json(pair.g2)},
                {"family", std::move(family)},
                {"verification", std::move(verification)}}
               .dump()
        << "\n";
    return v.ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tree-depth bounded homomorphism counting and equivalence games"};
    app.require_subcommand(1);
    CliConfig cfg;

    CLI::App* hom = app.add_subcommand("hom", "Homomorphism counting");
    hom->require_subcommand(1);
    CLI::App* hom_count_cmd = hom->add_subcommand("count", "Count maps pattern -> target");
    hom_count_cmd->add_option("--kind", cfg.kind, "hom, emb, or epi")->capture_default_str();
    hom_count_cmd->add_option("--pattern", cfg.pattern_path, "pattern graph file")->required();
    hom_count_cmd->add_option("--target", cfg.target_path, "target graph file")->required();
    hom_count_cmd->add_option("--pin", cfg.pins, "pattern=target vertex pin, e.g. 0=3");

    CLI::App* treedepth = app.add_subcommand("treedepth", "Exact tree depth with witness");
    treedepth->add_option("--graph", cfg.graph_path, "graph file")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "k-round bijective-game equivalence");
    equiv->add_option("--k", cfg.k, "number of rounds")->required();
    equiv->add_option("--budget", cfg.budget, "witness size budget")->capture_default_str();
    equiv->add_flag("--witness", cfg.want_witness, "search a distinguishing pattern");
    equiv->add_option("left", cfg.left_path, "first graph file")->required();
    equiv->add_option("right", cfg.right_path, "second graph file")->required();

    CLI::App* homvec = app.add_subcommand("homvec", "Profile against bounded patterns");
    homvec->add_option("--k", cfg.k, "tree-depth bound")->required();
    homvec->add_option("--budget", cfg.budget, "pattern size bound")->capture_default_str();
    homvec->add_option("graph", cfg.graph_path, "graph file")->required();

    CLI::App* enum_cmd = app.add_subcommand("enum", "Enumerate classes as JSONL");
    enum_cmd->add_option("--kind", cfg.enum_kind, "graphs, conn-tdk, or decomposed")
        ->capture_default_str();
    enum_cmd->add_option("--n", cfg.n, "maximum vertex count")->required();
    enum_cmd->add_option("--k", cfg.k, "tree-depth/height bound (conn-tdk, decomposed)")
        ->capture_default_str();
    enum_cmd->add_option("--colors", cfg.colors, "palette size")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", cfg.suite, "suite name or 'all'")->required();
    verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    verify->add_flag("--full", cfg.full, "full scale instead of quick scale");

    CLI::App* counterexample =
        app.add_subcommand("counterexample", "Matched-moments star pair");
    counterexample->add_option("--m", cfg.m, "number of matched moments")->required();

    std::vector<const char*> argv;
    argv.push_back("tdhom");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        out << Json{{"schema", kErrorSchema}, {"kind", "usage"}, {"error", e.what()}}.dump()
            << "\n";
        return 2;
    }

    try {
        if (hom_count_cmd->parsed()) return cmd_hom_count(cfg, out);
        if (treedepth->parsed()) return cmd_treedepth(cfg, out);
        if (equiv->parsed()) return cmd_equiv(cfg, out);
        if (homvec->parsed()) return cmd_homvec(cfg, out);
        if (enum_cmd->parsed()) return cmd_enum(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (counterexample->parsed()) return cmd_counterexample(cfg, out);
        throw input_error("no subcommand selected");
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        out << Json{{"schema", kErrorSchema}, {"kind", "input"}, {"error", e.what()}}.dump()
            << "\n";
        return 2;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        out << Json{{"schema", kErrorSchema}, {"kind", "capacity"}, {"error", e.what()}}.dump()
            << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        out << Json{{"schema", kErrorSchema}, {"kind", "internal"}, {"error", e.what()}}.dump()
            << "\n";
        return 2;
    }
}

} // namespace tdhom
