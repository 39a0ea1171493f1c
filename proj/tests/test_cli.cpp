// End-to-end tests for the command-line front end, run in-process through
// run_cli with captured streams and throwaway input files.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "tdhom/canonical.hpp"
#include "tdhom/decomposed.hpp"
#include "tdhom/errors.hpp"
#include "tdhom/forest.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/json_io.hpp"

#include "oracles.hpp"

namespace {

using namespace tdhom;

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;

    // Parses the first line of stdout as a JSON object.
    Json json() const {
        const std::size_t nl = out.find('\n');
        return Json::parse(nl == std::string::npos ? out : out.substr(0, nl));
    }
    std::vector<Json> json_lines() const {
        std::vector<Json> lines;
        std::istringstream in(out);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(Json::parse(line));
        return lines;
    }
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// A temp directory of input files, removed when the fixture dies.
struct Workspace {
    std::filesystem::path dir;

    Workspace() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "tdhom-cli-XXXXXX").string();
        char* made = ::mkdtemp(tmpl.data());
        REQUIRE(made != nullptr);
        dir = made;
    }
    ~Workspace() {
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
    }

    std::string file(const std::string& name, const std::string& content) const {
        const std::filesystem::path p = dir / name;
        std::ofstream out(p);
        out << content;
        REQUIRE(out.good());
        return p.string();
    }
    std::string graph_file(const std::string& name, const Graph& g) const {
        return file(name, graph_to_json(g).dump() + "\n");
    }
};

} // namespace

TEST_CASE("cli: hom count in all three kinds") {
    Workspace ws;
    const std::string p3 = ws.graph_file("p3.json", oracle::path(3, oracle::mono()));
    const std::string k3 = ws.file("k3.g6", "Bw\n");
    const std::string k2 = ws.file("k2.g6", "A_\n");

    SUBCASE("plain homomorphisms") {
        const CliRun r = run({"hom", "count", "--pattern", p3, "--target", k3});
        CHECK(r.code == 0);
        const Json j = r.json();
        CHECK(j.at("schema") == "tdhom-report/1");
        CHECK(j.at("command") == "hom count");
        CHECK(j.at("kind") == "hom");
        CHECK(j.at("count") == "12");
    }
    SUBCASE("embeddings") {
        const CliRun r = run({"hom", "count", "--kind", "emb", "--pattern", p3, "--target", k3});
        CHECK(r.code == 0);
        CHECK(r.json().at("count") == "6");
    }
    SUBCASE("surjections") {
        const CliRun r = run({"hom", "count", "--kind", "epi", "--pattern", p3, "--target", k2});
        CHECK(r.code == 0);
        CHECK(r.json().at("count") == "2");
    }
    SUBCASE("pins restrict the count") {
        const CliRun r =
            run({"hom", "count", "--pattern", p3, "--target", k3, "--pin", "1=0"});
        CHECK(r.code == 0);
        CHECK(r.json().at("count") == "4");
    }
    SUBCASE("a pattern file may carry its own elimination tree") {
        const Decomposed d = make_decomposed(oracle::path(3, oracle::mono()));
        const std::string path = ws.file("p3.decomposed.json", decomposed_to_json(d).dump());
        const CliRun r = run({"hom", "count", "--pattern", path, "--target", k3});
        CHECK(r.code == 0);
        CHECK(r.json().at("count") == "12");
    }
    SUBCASE("an unknown kind is an input error") {
        const CliRun r =
            run({"hom", "count", "--kind", "iso", "--pattern", p3, "--target", k3});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "input");
    }
}

TEST_CASE("cli: treedepth reports the depth and a checkable witness") {
    Workspace ws;
    const std::string p4 = ws.file("p4.g6", "Ch\n");
    const CliRun r = run({"treedepth", "--graph", p4});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("schema") == "tdhom-report/1");
    CHECK(j.at("depth") == 3);

    // Rebuild the forest from the reported parent object and validate it.
    const Graph g = oracle::path(4, oracle::mono());
    std::map<int, int> parent;
    for (int v = 0; v < 4; ++v) parent[v] = RootedForest::kNoParent;
    for (const auto& [key, value] : j.at("witness").at("parent").items())
        parent[std::stoi(key)] = value.get<int>();
    const RootedForest f(parent);
    CHECK(f.height() == 3);
    CHECK(is_elimination_forest(g, f, false));
}

TEST_CASE("cli: equiv compares two graphs under the k-round game") {
    Workspace ws;
    const std::string c6 = ws.file("c6.g6", "EhEG\n");
    const std::string two_k3 = ws.graph_file(
        "2k3.json",
        disjoint_union({oracle::complete(3, oracle::mono()), oracle::complete(3, oracle::mono())}));

    SUBCASE("two rounds cannot tell the pair apart") {
        const CliRun r = run({"equiv", "--k", "2", c6, two_k3});
        CHECK(r.code == 0);
        const Json j = r.json();
        CHECK(j.at("equivalent") == true);
        CHECK(j.at("k") == 2);
    }
    SUBCASE("three rounds separate them") {
        const CliRun r = run({"equiv", "--k", "3", c6, two_k3});
        CHECK(r.code == 1);
        const Json j = r.json();
        CHECK(j.at("equivalent") == false);
        CHECK(!j.contains("witness"));
    }
    SUBCASE("--witness names a separating pattern") {
        const CliRun r = run({"equiv", "--k", "3", "--budget", "6", "--witness", c6, two_k3});
        CHECK(r.code == 1);
        const Json j = r.json();
        REQUIRE(j.contains("witness"));
        CHECK(j.at("witness_exhausted") == false);
        const Graph pattern = graph_from_json(j.at("witness"));
        CHECK(canonical_key(pattern) == canonical_key(oracle::complete(3, oracle::mono())));
        CHECK(j.at("witness_left") == "0");
        CHECK(j.at("witness_right") == "12");
    }
    SUBCASE("mismatched palettes are an input error") {
        const ColorPalette duo = oracle::duo();
        const std::string duo_dot = ws.graph_file("duodot.json", Graph(duo, {0}, {}));
        const CliRun r = run({"equiv", "--k", "1", c6, duo_dot});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "input");
    }
    SUBCASE("k = 0 is rejected") {
        const CliRun r = run({"equiv", "--k", "0", c6, two_k3});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "input");
    }
}

TEST_CASE("cli: homvec profiles a graph against the bounded pattern family") {
    Workspace ws;
    const std::string k1 = ws.file("k1.g6", "@\n");
    const CliRun r = run({"homvec", "--k", "1", "--budget", "1", k1});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("command") == "homvec");
    CHECK(j.at("k") == 1);
    CHECK(j.at("budget") == 1);
    REQUIRE(j.at("entries").size() == 1);
    CHECK(j.at("entries")[0].at("count") == "1");
    CHECK(j.at("entries")[0].at("key").is_string());
}

TEST_CASE("cli: enum emits one JSON document per line") {
    SUBCASE("graphs up to two vertices") {
        const CliRun r = run({"enum", "--kind", "graphs", "--n", "2"});
        CHECK(r.code == 0);
        const std::vector<Json> lines = r.json_lines();
        REQUIRE(lines.size() == 4);
        for (const Json& line : lines) CHECK_NOTHROW(graph_from_json(line));
    }
    SUBCASE("connected graphs of bounded tree depth") {
        const CliRun r = run({"enum", "--kind", "conn-tdk", "--k", "2", "--n", "3"});
        CHECK(r.code == 0);
        const std::vector<Json> lines = r.json_lines();
        REQUIRE(lines.size() == 3);
        for (const Json& line : lines) {
            const Graph g = graph_from_json(line);
            CHECK(g.order() >= 1);
        }
    }
    SUBCASE("decomposed patterns re-parse with their trees") {
        const CliRun r = run({"enum", "--kind", "decomposed", "--k", "2", "--n", "2"});
        CHECK(r.code == 0);
        const std::vector<Json> lines = r.json_lines();
        REQUIRE(lines.size() == 3);
        for (const Json& line : lines) {
            const Decomposed d = decomposed_from_json(line);
            CHECK(d.height() <= 2);
        }
    }
    SUBCASE("an unknown kind is an input error") {
        const CliRun r = run({"enum", "--kind", "widgets", "--n", "2"});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "input");
    }
}

TEST_CASE("cli: verify runs a named suite and reports violations") {
    const CliRun r = run({"verify", "--suite", "radius"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("schema") == "tdhom-report/1");
    CHECK(j.at("suite") == "radius");
    CHECK(j.at("violations").is_array());
    CHECK(j.at("violations").empty());
    CHECK(j.contains("data"));

    SUBCASE("unknown suite names are input errors") {
        const CliRun bad = run({"verify", "--suite", "nonsense"});
        CHECK(bad.code == 2);
        CHECK(bad.json().at("kind") == "input");
    }
}

TEST_CASE("cli: counterexample builds and checks the star pair") {
    const CliRun r = run({"counterexample", "--m", "1"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("m") == 1);
    CHECK(j.at("a0") == "1");
    REQUIRE(j.at("a").size() == 2);
    REQUIRE(j.at("a2").size() == 2);
    CHECK(j.at("a")[0] == "0");
    CHECK(j.at("a")[1] == "1");
    CHECK(j.at("a2")[0] == "2");
    CHECK(j.at("a2")[1] == "0");
    CHECK(j.at("family").size() == 8);
    const Json& v = j.at("verification");
    CHECK(v.at("ok") == true);
    CHECK(v.at("family_hom_equal") == true);
    CHECK(v.at("sentence_left") != v.at("sentence_right"));
    CHECK(v.at("fo2_game_separates") == true);
    CHECK(v.at("orders_match") == true);
    CHECK(v.at("ck2_equivalent") == false);
    CHECK_NOTHROW(graph_from_json(j.at("g")));
    CHECK_NOTHROW(graph_from_json(j.at("g2")));

    SUBCASE("m = 0 is an input error") {
        const CliRun bad = run({"counterexample", "--m", "0"});
        CHECK(bad.code == 2);
        CHECK(bad.json().at("kind") == "input");
    }
    SUBCASE("huge m is a capacity error") {
        const CliRun bad = run({"counterexample", "--m", "99"});
        CHECK(bad.code == 2);
        CHECK(bad.json().at("kind") == "capacity");
    }
}

TEST_CASE("cli: usage problems exit 2 with a usage error object") {
    SUBCASE("unknown subcommand") {
        const CliRun r = run({"frobnicate"});
        CHECK(r.code == 2);
        CHECK(r.json().at("schema") == "tdhom-error/1");
        CHECK(r.json().at("kind") == "usage");
        CHECK(!r.err.empty());
    }
    SUBCASE("no subcommand at all") {
        const CliRun r = run({});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "usage");
    }
    SUBCASE("missing a required option") {
        Workspace ws;
        const std::string p3 = ws.graph_file("p3.json", oracle::path(3, oracle::mono()));
        const CliRun r = run({"hom", "count", "--pattern", p3});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "usage");
    }
}

TEST_CASE("cli: bad inputs exit 2 with an input error object") {
    Workspace ws;
    const std::string k3 = ws.file("k3.g6", "Bw\n");
    SUBCASE("missing file") {
        const CliRun r = run({"hom", "count", "--pattern", (ws.dir / "absent.json").string(),
                              "--target", k3});
        CHECK(r.code == 2);
        const Json j = r.json();
        CHECK(j.at("schema") == "tdhom-error/1");
        CHECK(j.at("kind") == "input");
        CHECK(j.at("error").get<std::string>().find("cannot open") != std::string::npos);
        CHECK(!r.err.empty());
    }
    SUBCASE("corrupt graph text") {
        const std::string bad = ws.file("bad.g6", "Ch!\n");
        const CliRun r = run({"treedepth", "--graph", bad});
        CHECK(r.code == 2);
        CHECK(r.json().at("kind") == "input");
    }
}

TEST_CASE("cli: --help prints usage text and succeeds") {
    const CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hom") != std::string::npos);
    CHECK(r.out.find("equiv") != std::string::npos);
    CHECK(r.out.find("counterexample") != std::string::npos);
}
