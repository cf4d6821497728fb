#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "conn2k/cli.hpp"
#include "conn2k/construction.hpp"
#include "conn2k/errors.hpp"
#include "conn2k/json_io.hpp"
#include "helpers.hpp"

using namespace conn2k;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
    return std::string(CONN2K_FIXTURES_DIR) + "/" + name;
}

// scratch file that cleans up after itself
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / ("conn2k_test_" + name)) {}
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    std::string str() const { return path.string(); }
    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
    std::string read() const {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

}  // namespace

TEST_CASE("construction traces survive the JSONL round trip") {
    GenerateResult res = generate(ConnParams{2}, 8, 31);
    std::string text = to_jsonl(res.trace);
    ConstructionTrace back = trace_from_jsonl(text, 2);
    CHECK(back.k == 2);
    REQUIRE(back.steps.size() == res.trace.steps.size());
    CHECK(replay(ConnParams{2}, back) == res.graph);
    CHECK(to_jsonl(back) == text);
}

TEST_CASE("bad trace lines are reported with their line number") {
    auto line_of = [](const std::string& text) {
        try {
            trace_from_jsonl(text, 2);
        } catch (const parse_error& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("{oops") == 1);
    CHECK(line_of("\n  \n{oops") == 3);  // blank lines count but are skipped
    CHECK(line_of("{\"op\":\"add\",\"u\":0,\"v\":1}\n{\"op\":\"frobnicate\"}") == 2);
    CHECK(line_of("{\"u\":0,\"v\":1}") == 1);                      // op missing
    CHECK(line_of("{\"op\":\"add\",\"u\":0}") == 1);               // v missing
    CHECK(line_of("{\"op\":\"add\",\"u\":0,\"v\":\"x\"}") == 1);   // v not an int
    CHECK(line_of("{\"op\":\"pinch\",\"new\":4}") == 1);           // edges missing
    CHECK(line_of("{\"op\":\"pinch\",\"edges\":[1,\"b\"],\"new\":4}") == 1);
    CHECK(line_of("42") == 1);  // not an object
}

TEST_CASE("json report shapes") {
    MultiGraph g = k_K3(ConnParams{2});
    json ok = to_json(check(g, ConnParams{2}));
    CHECK(ok.dump() == "{\"k\":2,\"ok\":true}");

    json bad = to_json(check(g, ConnParams{3}));
    CHECK(bad["ok"] == false);
    CHECK(bad["f"].get<int>() < 6);
    CHECK(bad["witness"].contains("inner"));
    CHECK(bad["witness"].contains("outer"));

    json fam = to_json(CertificateFamily{{BiSet({0, 1, 2}, {1}, {1, 2})}, 2, true});
    CHECK(fam.dump() == "{\"exhaustive\":true,\"members\":[{\"inner\":[1],\"outer\":[1,2]}],"
                        "\"value\":2}");
}

TEST_CASE("cli: check reports the verdict in both formats") {
    CliResult ok = run_cli({"check", fixture("kk3_k2.txt"), "--k", "2"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "ok: (2k,k)-connected with k=2\n");
    CHECK(ok.err.empty());

    CliResult bad = run_cli({"check", fixture("kk3_k2.txt"), "--k", "3"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out == "violated: f = 4 < 6 at inner={0} outer={0}\n");

    CliResult js = run_cli({"check", fixture("kk3_k2.txt"), "--k", "2", "--json"});
    CHECK(js.exit_code == 0);
    CHECK(js.out == "{\"k\":2,\"ok\":true}\n");

    CliResult tri = run_cli({"check", fixture("triangle.txt"), "--k", "1"});
    CHECK(tri.exit_code == 0);
}

TEST_CASE("cli: split prints a trace or an obstacle") {
    CliResult ob = run_cli({"split", fixture("k4_plus_hub.txt"), "--k", "3", "--s", "0"});
    CHECK(ob.exit_code == 1);
    CHECK(ob.out.substr(0, 28) == "obstacle at t=4 with 3 membe");

    CliResult js = run_cli({"split", fixture("k4_plus_hub.txt"), "--k", "3", "--s", "0",
                            "--json"});
    CHECK(js.exit_code == 1);
    json j = json::parse(js.out);
    CHECK(j["outcome"] == "obstacle");
    CHECK(j["obstacle"]["t"] == 4);
    REQUIRE(j["obstacle"]["members"].size() == 3);
    CHECK(j["obstacle"]["members"][0]["inner"] == json::array({1}));
    CHECK(j["obstacle"]["members"][0]["outer"] == json::array({1, 4}));

    TempFile host("host.txt");
    host.write("4 10\n0 1\n0 1\n0 2\n0 2\n1 2\n1 2\n0 3\n0 3\n1 3\n1 3\n");
    CliResult tr = run_cli({"split", host.str(), "--k", "2", "--s", "3"});
    CHECK(tr.exit_code == 0);
    CHECK(tr.out == "complete splitting at 3: (0,0) (1,1)\n");

    json jt = json::parse(run_cli({"split", host.str(), "--k", "2", "--s", "3", "--json"}).out);
    CHECK(jt["outcome"] == "trace");
    CHECK(jt["trace"]["s"] == 3);
    CHECK(jt["trace"]["pairs"] == json::array({json::array({0, 0}), json::array({1, 1})}));
    MultiGraph fin = MultiGraph::parse(jt["trace"]["final"].get<std::string>());
    CHECK(fin.num_vertices() == 3);
    CHECK(fin.multiplicity(0, 0) == 1);
}

TEST_CASE("cli: generate, decompose, and replay close the loop") {
    TempFile graph("gen.txt"), trace("gen.jsonl"), dec("dec.jsonl");

    CliResult gen = run_cli({"generate", "--k", "2", "--steps", "6", "--seed", "17",
                             "-o", graph.str(), "--trace", trace.str()});
    CHECK(gen.exit_code == 0);
    MultiGraph made = MultiGraph::parse(graph.read());
    CHECK(gen.out == "generated " + std::to_string(made.num_vertices()) + " vertices, " +
                         std::to_string(made.num_edges()) + " edges\n");

    CliResult gen2 = run_cli({"generate", "--k", "2", "--steps", "6", "--seed", "17"});
    CHECK(gen2.exit_code == 0);
    CHECK(gen2.out == graph.read());  // stdout and -o agree byte for byte

    CliResult rep = run_cli({"replay", trace.str(), "--k", "2"});
    CHECK(rep.exit_code == 0);
    CHECK(rep.out == graph.read());

    CliResult dc = run_cli({"decompose", graph.str(), "--k", "2"});
    CHECK(dc.exit_code == 0);
    dec.write(dc.out);
    CliResult rep2 = run_cli({"replay", dec.str(), "--k", "2"});
    CHECK(rep2.exit_code == 0);
    MultiGraph a = MultiGraph::parse(rep2.out);
    MultiGraph b = MultiGraph::parse(graph.read());
    CHECK(a.same_edge_multiset(b));
}

TEST_CASE("cli: decompose with odd k exits 3 and cites the counterexample") {
    CliResult r = run_cli({"decompose", fixture("k4_plus_hub.txt"), "--k", "3"});
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.find("k4_plus_hub") != std::string::npos);

    CliResult r2 = run_cli({"decompose", fixture("kk3_k2.txt"), "--k", "2"});
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.empty());  // the base graph decomposes into no steps
}

TEST_CASE("cli: augment reports alpha and the certificate") {
    CliResult hum = run_cli({"augment", fixture("triangle.txt"), "--k", "2"});
    CHECK(hum.exit_code == 0);
    CHECK(hum.out ==
          "added 3 edges: (0,1) (0,2) (1,2); certificate value 6 (exhaustive)\n");

    TempFile outg("aug.txt");
    CliResult js = run_cli({"augment", fixture("triangle.txt"), "--k", "2", "--json",
                            "-o", outg.str()});
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"alpha\":3") != std::string::npos);
    json j = json::parse(js.out);
    CHECK(j["alpha"] == 3);
    CHECK(j["added"].size() == 3);
    CHECK(j["certificate"]["value"] == 6);
    CHECK(j["certificate"]["exhaustive"] == true);
    MultiGraph aug = MultiGraph::parse(outg.read());
    CHECK(aug.num_edges() == 6);
    CHECK(check(aug, ConnParams{2}).ok);
}

TEST_CASE("cli: certify prints the deficiency family") {
    CliResult js = run_cli({"certify", fixture("triangle.txt"), "--k", "2", "--json"});
    CHECK(js.exit_code == 0);
    json j = json::parse(js.out);
    CHECK(j["value"] == 6);
    CHECK(j["members"].size() == 3);

    CliResult hum = run_cli({"certify", fixture("triangle.txt"), "--k", "2"});
    CHECK(hum.out.substr(0, 19) == "certificate value 6");
}

TEST_CASE("cli: usage and input failures exit 2") {
    CHECK(run_cli({}).exit_code == 2);                                    // no subcommand
    CHECK(run_cli({"frobnicate", "--k", "2"}).exit_code == 2);
    CHECK(run_cli({"check", fixture("kk3_k2.txt")}).exit_code == 2);      // --k missing
    CHECK(run_cli({"check", "/no/such/file.txt", "--k", "2"}).exit_code == 2);
    CHECK(run_cli({"split", fixture("kk3_k2.txt"), "--k", "2"}).exit_code == 2);  // --s missing
    CHECK(run_cli({"generate", "--k", "2", "--steps", "3"}).exit_code == 2);      // seed missing

    TempFile bad("bad.txt");
    bad.write("3 2\n0 1\n");
    CliResult r = run_cli({"check", bad.str(), "--k", "1"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    TempFile badtrace("bad.jsonl");
    badtrace.write("{\"op\":\"nope\"}\n");
    CHECK(run_cli({"replay", badtrace.str(), "--k", "2"}).exit_code == 2);

    CliResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);  // help is a success exit
    CHECK(help.out.find("check") != std::string::npos);
}

namespace {

// Minimal draft-07 subset: type, enum, required, properties,
// additionalProperties:false, items, and $ref into #/definitions. Exactly
// what the shipped schemas use, nothing more.
bool schema_accepts(const json& schema, const json& root, const json& value) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return schema_accepts(root["definitions"][ref.substr(prefix.size())], root, value);
    }
    if (schema.contains("enum")) {
        for (const auto& option : schema["enum"])
            if (option == value) return true;
        return false;
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        const json props = schema.value("properties", json::object());
        for (const auto& [key, sub] : value.items()) {
            auto it = props.find(key);
            if (it == props.end()) {
                if (schema.value("additionalProperties", json(true)) == json(false))
                    return false;
                continue;
            }
            if (!schema_accepts(*it, root, sub)) return false;
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& element : value)
            if (!schema_accepts(schema["items"], root, element)) return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(CONN2K_SCHEMAS_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

bool validates(const std::string& schema_name, const std::string& text) {
    json schema = load_schema(schema_name);
    return schema_accepts(schema, schema, json::parse(text));
}

}  // namespace

TEST_CASE("cli json output validates against the shipped schemas") {
    CHECK(validates("check.json",
                    run_cli({"check", fixture("kk3_k2.txt"), "--k", "2", "--json"}).out));
    CHECK(validates("check.json",
                    run_cli({"check", fixture("kk3_k2.txt"), "--k", "3", "--json"}).out));
    CHECK(validates("split.json",
                    run_cli({"split", fixture("k4_plus_hub.txt"), "--k", "3", "--s", "1",
                             "--json"}).out));
    TempFile host("schema_host.txt");
    host.write("4 10\n0 1\n0 1\n0 2\n0 2\n1 2\n1 2\n0 3\n0 3\n1 3\n1 3\n");
    CHECK(validates("split.json",
                    run_cli({"split", host.str(), "--k", "2", "--s", "3", "--json"}).out));
    CHECK(validates("augment.json",
                    run_cli({"augment", fixture("triangle.txt"), "--k", "2", "--json"}).out));
    CHECK(validates("augment.json",
                    run_cli({"augment", fixture("kk3_k2.txt"), "--k", "2", "--json"}).out));
    CHECK(validates("certify.json",
                    run_cli({"certify", fixture("kk3_k2.txt"), "--k", "2", "--json"}).out));

    TempFile gen("schema_gen.txt");
    CHECK(validates("generate.json",
                    run_cli({"generate", "--k", "2", "--steps", "5", "--seed", "3", "-o",
                             gen.str(), "--json"}).out));

    // trace JSONL: every record is one step object
    CliResult dec = run_cli({"decompose", fixture("k4_plus_hub.txt"), "--k", "2"});
    REQUIRE(dec.exit_code == 0);
    json step_schema = load_schema("trace_step.json");
    std::istringstream lines(dec.out);
    std::string line;
    int steps = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        CHECK(schema_accepts(step_schema, step_schema, json::parse(line)));
        ++steps;
    }
    CHECK(steps > 0);

    // the subset validator genuinely rejects
    json check_schema = load_schema("check.json");
    CHECK(!schema_accepts(check_schema, check_schema, json::parse("{\"k\":2}")));
    CHECK(!schema_accepts(check_schema, check_schema,
                          json::parse("{\"k\":2,\"ok\":true,\"extra\":1}")));
}

TEST_CASE("cli: identical invocations produce identical bytes") {
    for (auto args : {std::vector<std::string>{"check", fixture("k4_plus_hub.txt"), "--k", "3"},
                      {"split", fixture("k4_plus_hub.txt"), "--k", "3", "--s", "2", "--json"},
                      {"augment", fixture("triangle.txt"), "--k", "2", "--json"},
                      {"certify", fixture("kk3_k2.txt"), "--k", "2", "--json"}}) {
        CliResult a = run_cli(args), b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
