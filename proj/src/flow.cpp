#include "flow.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace conn2k::detail {

// Edmonds-Karp on a dense residual matrix. The graphs this library handles
// are small (tens of vertices), so the matrix form beats adjacency lists and
// lets the scratch buffers be reused across the many min-cut probes the
// connectivity checks issue.
CutResult min_cut(const MultiGraph& g, const std::vector<VertexId>& sources,
                  const std::vector<VertexId>& sinks, const std::vector<VertexId>& removed,
                  int limit) {
    assert(!sources.empty() && !sinks.empty());
    assert(limit >= 1);

    // node ids: 0 = merged sources, 1 = merged sinks, 2.. = everything else
    static thread_local std::vector<int> node_of;  // by vertex id
    static thread_local std::vector<int> cap;      // n*n, row-major residual
    static thread_local std::vector<int> parent;
    static thread_local std::vector<int> bfs_q;
    static thread_local std::vector<VertexId> rest;

    VertexId top = g.vertices().empty() ? -1 : g.vertices().back();
    node_of.assign(top + 2, -2);  // -2 absent, -1 removed, -3 present but unassigned
    for (VertexId v : g.vertices()) node_of[v] = -3;
    for (VertexId v : removed) {
        assert(node_of[v] == -3);
        node_of[v] = -1;
    }
    for (VertexId v : sources) {
        assert(node_of[v] == -3);
        node_of[v] = 0;
    }
    for (VertexId v : sinks) {
        assert(node_of[v] == -3);
        node_of[v] = 1;
    }
    rest.clear();
    for (VertexId v : g.vertices())
        if (node_of[v] == -3) rest.push_back(v);
    int n = 2 + static_cast<int>(rest.size());
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) node_of[rest[i]] = 2 + i;

    cap.assign(static_cast<size_t>(n) * n, 0);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        int a = node_of[e.u];
        int b = node_of[e.v];
        if (a < 0 || b < 0 || a == b) continue;
        cap[static_cast<size_t>(a) * n + b] += 1;
        cap[static_cast<size_t>(b) * n + a] += 1;
    }

    int flow = 0;
    parent.assign(n, -1);
    while (flow < limit) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[0] = 0;
        bfs_q.clear();
        bfs_q.push_back(0);
        for (size_t qi = 0; qi < bfs_q.size() && parent[1] < 0; ++qi) {
            int x = bfs_q[qi];
            const int* row = &cap[static_cast<size_t>(x) * n];
            for (int y = 0; y < n; ++y) {
                if (parent[y] < 0 && row[y] > 0) {
                    parent[y] = x;
                    bfs_q.push_back(y);
                }
            }
        }
        if (parent[1] < 0) break;
        int bottleneck = INT_MAX;
        for (int y = 1; y != 0; y = parent[y])
            bottleneck = std::min(bottleneck, cap[static_cast<size_t>(parent[y]) * n + y]);
        bottleneck = std::min(bottleneck, limit - flow);
        for (int y = 1; y != 0; y = parent[y]) {
            cap[static_cast<size_t>(parent[y]) * n + y] -= bottleneck;
            cap[static_cast<size_t>(y) * n + parent[y]] += bottleneck;
        }
        flow += bottleneck;
    }

    CutResult r;
    r.value = flow;
    if (flow < limit) {
        // The residual-reachable set is the unique minimal source side.
        std::fill(parent.begin(), parent.end(), -1);
        parent[0] = 0;
        bfs_q.clear();
        bfs_q.push_back(0);
        for (size_t qi = 0; qi < bfs_q.size(); ++qi) {
            int x = bfs_q[qi];
            const int* row = &cap[static_cast<size_t>(x) * n];
            for (int y = 0; y < n; ++y) {
                if (parent[y] < 0 && row[y] > 0) {
                    parent[y] = x;
                    bfs_q.push_back(y);
                }
            }
        }
        assert(parent[1] < 0);
        r.source_side.assign(sources.begin(), sources.end());
        for (int i = 0; i < static_cast<int>(rest.size()); ++i)
            if (parent[2 + i] >= 0) r.source_side.push_back(rest[i]);
        std::sort(r.source_side.begin(), r.source_side.end());
    }
    return r;
}

}  // namespace conn2k::detail
