#include "conn2k/json_io.hpp"

#include <sstream>

#include "conn2k/errors.hpp"

namespace conn2k {

using nlohmann::json;

json to_json(const BiSet& x) {
    return json{{"inner", x.inner()}, {"outer", x.outer()}};
}

json to_json(const ConnectivityVerdict& v) {
    json j{{"ok", v.ok}, {"k", v.k}};
    if (v.witness) {
        j["witness"] = to_json(*v.witness);
        j["f"] = v.f_val;
    }
    return j;
}

json to_json(const SplitTrace& tr) {
    json pairs = json::array();
    for (const SplitPair& pr : tr.pairs) pairs.push_back(json::array({pr.u, pr.v}));
    return json{{"s", tr.s}, {"pairs", pairs}, {"final", tr.final_graph.serialize()}};
}

json to_json(const Obstacle& ob) {
    json members = json::array();
    for (const BiSet& x : ob.members) members.push_back(to_json(x));
    return json{{"t", ob.t}, {"members", members}};
}

json to_json(const BlockingBiSet& blk) {
    return json{{"kind", blk.kind == BlockingKind::dangerous ? "dangerous" : "critical"},
                {"biset", to_json(blk.biset)}};
}

json to_json(const SplitOutcome& outcome) {
    json j;
    if (outcome.trace) {
        j["outcome"] = "trace";
        j["trace"] = to_json(*outcome.trace);
    } else if (outcome.obstacle) {
        j["outcome"] = "obstacle";
        j["obstacle"] = to_json(*outcome.obstacle);
    } else {
        j["outcome"] = "blocked";
        j["blocking"] = to_json(*outcome.blocked);
    }
    return j;
}

json to_json(const CertificateFamily& fam) {
    json members = json::array();
    for (const BiSet& x : fam.members) members.push_back(to_json(x));
    return json{{"value", fam.value}, {"exhaustive", fam.exhaustive}, {"members", members}};
}

json to_json(const AugmentationResult& res) {
    json added = json::array();
    for (const SplitPair& pr : res.added_edges) added.push_back(json::array({pr.u, pr.v}));
    return json{{"k", res.k},
                {"alpha", static_cast<int>(res.added_edges.size())},
                {"added", added},
                {"certificate", to_json(res.certificate)},
                {"augmented", res.augmented.serialize()}};
}

std::string to_jsonl(const ConstructionTrace& trace) {
    std::ostringstream out;
    for (const ConstructionStep& st : trace.steps) {
        if (std::holds_alternative<AddEdgeStep>(st)) {
            const auto& a = std::get<AddEdgeStep>(st);
            out << json{{"op", "add"}, {"u", a.u}, {"v", a.v}}.dump() << "\n";
        } else {
            const auto& pn = std::get<PinchStep>(st);
            out << json{{"op", "pinch"}, {"edges", pn.edges}, {"new", pn.new_vertex}}.dump()
                << "\n";
        }
    }
    return out.str();
}

namespace {

[[noreturn]] void bad_line(int line, const std::string& what) {
    throw parse_error(line, what);
}

int require_int(const json& j, const char* key, int line) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad_line(line, std::string("step needs an integer \"") + key + "\" field");
    return j[key].get<int>();
}

}  // namespace

ConstructionTrace trace_from_jsonl(const std::string& text, int k) {
    ConstructionTrace trace;
    trace.k = k;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            bad_line(lineno, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
            bad_line(lineno, "step needs an \"op\" string field");
        std::string op = j["op"].get<std::string>();
        if (op == "add") {
            trace.steps.emplace_back(
                AddEdgeStep{require_int(j, "u", lineno), require_int(j, "v", lineno)});
        } else if (op == "pinch") {
            if (!j.contains("edges") || !j["edges"].is_array())
                bad_line(lineno, "pinch needs an \"edges\" array");
            std::vector<EdgeId> ids;
            for (const json& e : j["edges"]) {
                if (!e.is_number_integer()) bad_line(lineno, "pinch edge ids must be integers");
                ids.push_back(e.get<int>());
            }
            trace.steps.emplace_back(PinchStep{std::move(ids), require_int(j, "new", lineno)});
        } else {
            bad_line(lineno, "unknown op \"" + op + "\"");
        }
    }
    return trace;
}

}  // namespace conn2k
