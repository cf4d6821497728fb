#include "conn2k/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "conn2k/augmentation.hpp"
#include "conn2k/construction.hpp"
#include "conn2k/errors.hpp"
#include "conn2k/json_io.hpp"
#include "conn2k/multigraph.hpp"
#include "conn2k/splitting.hpp"

namespace conn2k {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot write file: " + path);
    out << text;
}

std::string set_text(const std::vector<VertexId>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

std::string pairs_text(const std::vector<SplitPair>& pairs) {
    std::string s;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += " ";
        s += "(" + std::to_string(pairs[i].u) + "," + std::to_string(pairs[i].v) + ")";
    }
    return s;
}

std::string biset_text(const BiSet& x) {
    return "inner=" + set_text(x.inner()) + " outer=" + set_text(x.outer());
}

int cmd_check(const std::string& input, int k, bool json, std::ostream& out) {
    MultiGraph g = MultiGraph::parse(read_input(input));
    ConnectivityVerdict v = check(g, ConnParams{k});
    if (json) {
        out << to_json(v).dump() << "\n";
    } else if (v.ok) {
        out << "ok: (2k,k)-connected with k=" << k << "\n";
    } else if (v.witness) {
        out << "violated: f = " << v.f_val << " < " << 2 * k << " at " << biset_text(*v.witness)
            << "\n";
    } else {
        out << "violated: fewer than 3 vertices\n";
    }
    return v.ok ? 0 : 1;
}

int cmd_split(const std::string& input, int k, VertexId s, bool json, std::ostream& out) {
    MultiGraph g = MultiGraph::parse(read_input(input));
    SplitOutcome outcome = complete_splitting(g, s, ConnParams{k});
    if (json) {
        out << to_json(outcome).dump() << "\n";
    } else if (outcome.trace) {
        out << "complete splitting at " << s << ": " << pairs_text(outcome.trace->pairs) << "\n";
    } else if (outcome.obstacle) {
        out << "obstacle at t=" << outcome.obstacle->t << " with "
            << outcome.obstacle->members.size() << " members\n";
        for (const BiSet& x : outcome.obstacle->members) out << "  " << biset_text(x) << "\n";
    } else {
        out << "blocked: "
            << (outcome.blocked->kind == BlockingKind::dangerous ? "dangerous" : "critical")
            << " bi-set " << biset_text(outcome.blocked->biset) << "\n";
    }
    return outcome.trace ? 0 : 1;
}

int cmd_generate(int k, int steps, uint64_t seed, const std::string& outfile,
                 const std::string& tracefile, bool json, std::ostream& out) {
    GenerateResult res = generate(ConnParams{k}, steps, seed);
    std::string text = res.graph.serialize();
    if (!tracefile.empty()) write_file(tracefile, to_jsonl(res.trace));
    if (outfile.empty()) {
        out << text;
    } else {
        write_file(outfile, text);
        if (json) {
            out << nlohmann::json{{"vertices", res.graph.num_vertices()},
                                  {"edges", res.graph.num_edges()},
                                  {"steps", steps}}
                       .dump()
                << "\n";
        } else {
            out << "generated " << res.graph.num_vertices() << " vertices, "
                << res.graph.num_edges() << " edges\n";
        }
    }
    return 0;
}

int cmd_decompose(const std::string& input, int k, std::ostream& out, std::ostream& err) {
    MultiGraph g = MultiGraph::parse(read_input(input));
    try {
        ConstructionTrace trace = decompose(g, ConnParams{k});
        out << to_jsonl(trace);
        return 0;
    } catch (const unsupported_k_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int cmd_replay(const std::string& input, int k, const std::string& outfile, std::ostream& out) {
    ConstructionTrace trace = trace_from_jsonl(read_input(input), k);
    MultiGraph g = replay(ConnParams{k}, trace);
    std::string text = g.serialize();
    if (outfile.empty())
        out << text;
    else
        write_file(outfile, text);
    return 0;
}

int cmd_augment(const std::string& input, int k, const std::string& outfile, bool json,
                std::ostream& out) {
    MultiGraph g = MultiGraph::parse(read_input(input));
    AugmentationResult res = augment(g, ConnParams{k});
    if (!outfile.empty()) write_file(outfile, res.augmented.serialize());
    if (json) {
        out << to_json(res).dump() << "\n";
    } else {
        out << "added " << res.added_edges.size() << " edges";
        if (!res.added_edges.empty()) out << ": " << pairs_text(res.added_edges);
        out << "; certificate value " << res.certificate.value
            << (res.certificate.exhaustive ? " (exhaustive)" : " (lower bound only)") << "\n";
    }
    return 0;
}

int cmd_certify(const std::string& input, int k, bool json, std::ostream& out) {
    MultiGraph g = MultiGraph::parse(read_input(input));
    CertificateFamily fam = certificate_bruteforce(g, ConnParams{k});
    if (json) {
        out << to_json(fam).dump() << "\n";
    } else {
        out << "certificate value " << fam.value << " over " << fam.members.size()
            << " members\n";
        for (const BiSet& x : fam.members) out << "  " << biset_text(x) << "\n";
    }
    return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;

    CLI::App app{"multigraph (2k,k)-connectivity toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    int k = 0;
    bool json = false;
    VertexId split_s = 0;
    int steps = 0;
    uint64_t seed = 0;
    std::string outfile;
    std::string tracefile;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--k", k, "connectivity parameter k")->required();
        if (with_input)
            cmd->add_option("input", input, "graph file, or - for stdin")->required();
    };

    CLI::App* c_check = app.add_subcommand("check", "verify (2k,k)-connectivity");
    add_common(c_check, true);
    c_check->add_flag("--json", json, "machine-readable output");

    CLI::App* c_split = app.add_subcommand("split", "split all edges at a vertex off admissibly");
    add_common(c_split, true);
    c_split->add_option("--s", split_s, "the vertex whose edges are split off")->required();
    c_split->add_flag("--json", json, "machine-readable output");

    CLI::App* c_gen = app.add_subcommand("generate", "build a random (2k,k)-connected graph");
    add_common(c_gen, false);
    c_gen->add_option("--steps", steps, "number of construction steps")->required();
    c_gen->add_option("--seed", seed, "random seed; same seed, same graph")->required();
    c_gen->add_option("-o,--out", outfile, "write the graph here instead of stdout");
    c_gen->add_option("--trace", tracefile, "also write the construction trace (JSON lines)");
    c_gen->add_flag("--json", json, "machine-readable summary when -o is used");

    CLI::App* c_dec = app.add_subcommand("decompose", "reverse a graph into construction steps");
    add_common(c_dec, true);

    CLI::App* c_rep = app.add_subcommand("replay", "rebuild a graph from construction steps");
    add_common(c_rep, true);
    c_rep->add_option("-o,--out", outfile, "write the graph here instead of stdout");

    CLI::App* c_aug = app.add_subcommand("augment", "add a minimum edge set to reach "
                                                    "(2k,k)-connectivity");
    add_common(c_aug, true);
    c_aug->add_option("-o,--out", outfile, "write the augmented graph here");
    c_aug->add_flag("--json", json, "machine-readable output");

    CLI::App* c_cert = app.add_subcommand("certify", "exact deficiency certificate "
                                                     "(small graphs)");
    add_common(c_cert, true);
    c_cert->add_flag("--json", json, "machine-readable output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("conn2k");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (app.got_subcommand(c_check))
            result.exit_code = cmd_check(input, k, json, out);
        else if (app.got_subcommand(c_split))
            result.exit_code = cmd_split(input, k, split_s, json, out);
        else if (app.got_subcommand(c_gen))
            result.exit_code = cmd_generate(k, steps, seed, outfile, tracefile, json, out);
        else if (app.got_subcommand(c_dec))
            result.exit_code = cmd_decompose(input, k, out, err);
        else if (app.got_subcommand(c_rep))
            result.exit_code = cmd_replay(input, k, outfile, out);
        else if (app.got_subcommand(c_aug))
            result.exit_code = cmd_augment(input, k, outfile, json, out);
        else
            result.exit_code = cmd_certify(input, k, json, out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const defect_error& e) {
        err << "internal error: " << e.what() << "\n";
        result.exit_code = 2;
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace conn2k
