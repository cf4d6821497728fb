#include "conn2k/construction.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "conn2k/errors.hpp"
#include "conn2k/splitting.hpp"
#include "flow.hpp"
#include "rng.hpp"

namespace conn2k {

MultiGraph k_K3(const ConnParams& p) {
    if (p.k < 1) throw precondition_error("k must be at least 1");
    MultiGraph g(3);
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = u + 1; v < 3; ++v)
            for (int c = 0; c < p.k; ++c) g.add_edge(u, v);
    return g;
}

namespace {

// End count of a pinch candidate at each vertex; loops count twice.
std::map<VertexId, int> pinch_end_counts(const MultiGraph& g, const std::vector<EdgeId>& ids) {
    std::map<VertexId, int> ends;
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        ends[e.u] += 1;
        ends[e.v] += 1;
    }
    return ends;
}

bool pinch_ends_ok(const MultiGraph& g, const ConnParams& p, const std::vector<EdgeId>& ids) {
    for (const auto& [v, c] : pinch_end_counts(g, ids))
        if (c > p.k) return false;
    return true;
}

}  // namespace

void apply_step(MultiGraph& g, const ConnParams& p, const ConstructionStep& step) {
    if (p.k < 1) throw precondition_error("k must be at least 1");
    if (std::holds_alternative<AddEdgeStep>(step)) {
        const auto& st = std::get<AddEdgeStep>(step);
        if (!g.has_vertex(st.u) || !g.has_vertex(st.v))
            throw precondition_error("edge endpoints must be existing vertices");
        g.add_edge(st.u, st.v);
        return;
    }
    const auto& st = std::get<PinchStep>(step);
    if (static_cast<int>(st.edges.size()) != p.k)
        throw precondition_error("a pinch takes exactly k edges");
    for (size_t i = 0; i + 1 < st.edges.size(); ++i)
        if (st.edges[i] >= st.edges[i + 1])
            throw precondition_error("pinch edge ids must be distinct and ascending");
    for (EdgeId id : st.edges)
        if (!g.has_edge(id)) throw precondition_error("pinch names a missing edge id");
    for (const auto& [v, c] : pinch_end_counts(g, st.edges))
        if (c > p.k)
            throw precondition_error("pinch set has " + std::to_string(c) + " ends at vertex " +
                                     std::to_string(v) + "; at most k are allowed");
    if (g.has_vertex(st.new_vertex)) throw precondition_error("pinch target vertex already exists");

    g.add_vertex(st.new_vertex);
    for (EdgeId id : st.edges) {
        Edge e = g.edge(id);
        g.remove_edge(id);
        g.add_edge(st.new_vertex, e.u);
        g.add_edge(st.new_vertex, e.v);
    }
}

namespace {

// Lexicographically first k-subset of edge positions whose end counts pass;
// the fallback when rejection sampling keeps missing.
std::optional<std::vector<EdgeId>> first_valid_pinch(const MultiGraph& g, const ConnParams& p) {
    int m = g.num_edges();
    int k = p.k;
    if (m < k) return std::nullopt;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<EdgeId> ids;
        ids.reserve(k);
        for (int i : idx) ids.push_back(g.edges()[i].id);
        if (pinch_ends_ok(g, p, ids)) return ids;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) return std::nullopt;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

GenerateResult generate(const ConnParams& p, int steps, uint64_t seed) {
    if (p.k < 1) throw precondition_error("k must be at least 1");
    if (steps < 0) throw precondition_error("steps must be non-negative");
    std::mt19937_64 rng(seed);
    GenerateResult res{k_K3(p), ConstructionTrace{p.k, {}}};
    MultiGraph& g = res.graph;

    for (int i = 0; i < steps; ++i) {
        if (detail::uniform_below(rng, 2) == 0) {
            const auto& vs = g.vertices();
            VertexId u = vs[detail::uniform_below(rng, vs.size())];
            VertexId v = vs[detail::uniform_below(rng, vs.size())];
            AddEdgeStep st{std::min(u, v), std::max(u, v)};
            apply_step(g, p, st);
            res.trace.steps.emplace_back(st);
        } else {
            std::optional<std::vector<EdgeId>> ids;
            for (int attempt = 0; attempt < 1000 && !ids; ++attempt) {
                std::vector<int> idx;
                while (static_cast<int>(idx.size()) < p.k) {
                    int c = static_cast<int>(detail::uniform_below(rng, g.num_edges()));
                    if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
                }
                std::vector<EdgeId> cand;
                cand.reserve(p.k);
                for (int c : idx) cand.push_back(g.edges()[c].id);
                std::sort(cand.begin(), cand.end());
                if (pinch_ends_ok(g, p, cand)) ids = std::move(cand);
            }
            if (!ids) ids = first_valid_pinch(g, p);
            if (!ids) throw defect_error("no pinchable edge set exists");
            PinchStep st{*ids, g.max_vertex_id() + 1};
            apply_step(g, p, st);
            res.trace.steps.emplace_back(st);
        }
    }
    return res;
}

MultiGraph replay(const ConnParams& p, const ConstructionTrace& trace) {
    if (trace.k != p.k) throw precondition_error("trace was recorded for a different k");
    MultiGraph g = k_K3(p);
    for (const ConstructionStep& st : trace.steps) apply_step(g, p, st);
    return g;
}

namespace {

// g minus this edge stays (2k,k)-connected. Only cuts the edge crosses can
// newly fail, so flows between its endpoints decide the question exactly.
bool edge_removable(const MultiGraph& g, const ConnParams& p, EdgeId id) {
    const Edge& e = g.edge(id);
    if (e.u == e.v) return true;  // loops cross no cut
    MultiGraph g2 = g;
    g2.remove_edge(id);
    if (detail::min_cut(g2, {e.u}, {e.v}, {}, 2 * p.k).value < 2 * p.k) return false;
    for (VertexId w : g2.vertices()) {
        if (w == e.u || w == e.v) continue;
        if (detail::min_cut(g2, {e.u}, {e.v}, {w}, p.k).value < p.k) return false;
    }
    return true;
}

}  // namespace

ConstructionTrace decompose(const MultiGraph& g, const ConnParams& p) {
    if (p.k < 2 || p.k % 2 != 0)
        throw unsupported_k_error(
            "decomposition needs even k >= 2; fixtures/k4_plus_hub.txt shows a k = 3 graph "
            "where every minimum-degree vertex is obstructed");
    if (!check(g, p).ok) throw precondition_error("input graph is not (2k,k)-connected");
    for (VertexId v : {0, 1, 2})
        if (!g.has_vertex(v))
            throw precondition_error(
                "decomposition rebuilds from the triangle on vertices 0, 1, 2, which the "
                "graph does not contain");

    struct EdgeDrop {
        VertexId u, v;
    };
    struct VertexSplit {
        std::vector<SplitPair> pairs;
        VertexId x;
    };
    std::vector<std::variant<EdgeDrop, VertexSplit>> events;

    const MultiGraph target = k_K3(p);
    const std::vector<VertexId> base{0, 1, 2};

    // Reverse construction as a depth-first search. The first path tried is
    // the plain greedy one (strip removable edges in ascending id order, then
    // split the highest-id degree-2k vertex), which settles typical inputs
    // without backtracking. The search matters when greedy stripping
    // overshoots: removing too many edges can lock a high-degree vertex out
    // of ever reaching degree 2k, stranding the run on the wrong triangle.
    std::set<std::string> dead;
    long budget = 200000;

    auto key_of = [](const MultiGraph& w) {
        std::string key;
        for (VertexId v : w.vertices()) {
            key += std::to_string(v);
            key += ',';
        }
        key += '|';
        std::vector<std::pair<VertexId, VertexId>> es;
        es.reserve(w.num_edges());
        for (const Edge& e : w.edges()) es.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(es.begin(), es.end());
        for (const auto& [a, b] : es) {
            key += std::to_string(a);
            key += '-';
            key += std::to_string(b);
            key += ',';
        }
        return key;
    };

    std::function<bool(const MultiGraph&)> dfs = [&](const MultiGraph& work) -> bool {
        if (work.num_vertices() == 3) {
            if (work.vertices() != base) return false;  // splits cannot resume
            if (work.same_edge_multiset(target)) return true;
        }
        if (--budget < 0) throw defect_error("decomposition search budget exhausted");

        // Loops never enter a cut and the final triangle has none, so
        // removing one first loses nothing and branches nowhere.
        for (const Edge& e : work.edges()) {
            if (e.u != e.v) continue;
            MultiGraph next = work;
            next.remove_edge(e.id);
            events.push_back(EdgeDrop{e.u, e.v});
            if (dfs(next)) return true;
            events.pop_back();
            return false;
        }

        std::string key = key_of(work);
        if (dead.count(key)) return false;

        // Removals first, ascending id, one candidate per endpoint pair:
        // removing either of two parallel copies leaves the same graph.
        std::set<std::pair<VertexId, VertexId>> tried;
        for (const Edge& e : work.edges()) {
            auto [lo, hi] = std::minmax(e.u, e.v);
            if (!tried.insert({lo, hi}).second) continue;
            if (!edge_removable(work, p, e.id)) continue;
            MultiGraph next = work;
            next.remove_edge(e.id);
            events.push_back(EdgeDrop{e.u, e.v});
            if (dfs(next)) return true;
            events.pop_back();
        }

        // Then complete splittings of degree-2k vertices, high ids first.
        // Base vertices are never split: they must survive to the end.
        if (work.num_vertices() > 3) {
            std::vector<VertexId> cands;
            for (VertexId x : work.vertices())
                if (x > 2 && work.degree(x) == 2 * p.k) cands.push_back(x);
            std::sort(cands.rbegin(), cands.rend());
            for (VertexId x : cands) {
                SplitOutcome out = complete_splitting(work, x, p);
                if (!out.trace) continue;  // obstructed here
                events.push_back(VertexSplit{out.trace->pairs, x});
                if (dfs(out.trace->final_graph)) return true;
                events.pop_back();
            }
        }
        dead.insert(std::move(key));
        return false;
    };

    if (!dfs(g))
        throw precondition_error(
            "the graph is (2k,k)-connected but admits no construction trace from the "
            "triangle on vertices 0, 1, 2");

    // Replay forward, resolving each pinch's edge ids in the replayed id
    // space: a split pair (a, b) consumed one a-b edge, so claim the lowest
    // unclaimed a-b edge for it.
    ConstructionTrace trace;
    trace.k = p.k;
    MultiGraph sim = k_K3(p);
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
        if (std::holds_alternative<EdgeDrop>(*it)) {
            const auto& d = std::get<EdgeDrop>(*it);
            AddEdgeStep st{d.u, d.v};
            apply_step(sim, p, st);
            trace.steps.emplace_back(st);
        } else {
            const auto& sp = std::get<VertexSplit>(*it);
            std::vector<EdgeId> ids;
            for (const SplitPair& pr : sp.pairs) {
                VertexId lo = std::min(pr.u, pr.v);
                VertexId hi = std::max(pr.u, pr.v);
                EdgeId found = -1;
                for (const Edge& e : sim.edges()) {
                    if (e.u != lo || e.v != hi) continue;
                    if (std::find(ids.begin(), ids.end(), e.id) != ids.end()) continue;
                    found = e.id;
                    break;
                }
                if (found < 0) throw defect_error("pinch fixup could not locate a split edge");
                ids.push_back(found);
            }
            std::sort(ids.begin(), ids.end());
            PinchStep st{std::move(ids), sp.x};
            apply_step(sim, p, st);
            trace.steps.emplace_back(st);
        }
    }
    if (!sim.same_edge_multiset(g))
        throw defect_error("replaying the decomposition does not reproduce the input");
    return trace;
}

}  // namespace conn2k
