#include "conn2k/multigraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace conn2k {

MultiGraph::MultiGraph(int n) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    verts_.resize(n);
    for (int i = 0; i < n; ++i) verts_[i] = i;
}

bool MultiGraph::has_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

int MultiGraph::edge_pos(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool MultiGraph::has_edge(EdgeId id) const { return edge_pos(id) >= 0; }

const Edge& MultiGraph::edge(EdgeId id) const {
    int pos = edge_pos(id);
    if (pos < 0) throw precondition_error("no edge with id " + std::to_string(id));
    return edges_[pos];
}

VertexId MultiGraph::max_vertex_id() const {
    if (verts_.empty()) throw precondition_error("empty graph has no vertices");
    return verts_.back();
}

void MultiGraph::require_vertex(VertexId v) const {
    if (!has_vertex(v)) throw precondition_error("no vertex " + std::to_string(v));
}

int MultiGraph::degree(VertexId v) const {
    require_vertex(v);
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;  // loops hit both branches
    }
    return d;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    VertexId a = std::min(u, v), b = std::max(u, v);
    int m = 0;
    for (const Edge& e : edges_)
        if (e.u == a && e.v == b) ++m;
    return m;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    require_vertex(v);
    std::vector<VertexId> out;
    for (const Edge& e : edges_) {
        if (e.u == e.v) continue;
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int MultiGraph::cross_degree(const std::vector<VertexId>& us,
                             const std::vector<VertexId>& ws) const {
    std::vector<VertexId> u_sorted(us), w_sorted(ws);
    std::sort(u_sorted.begin(), u_sorted.end());
    std::sort(w_sorted.begin(), w_sorted.end());
    for (VertexId v : u_sorted) require_vertex(v);
    for (VertexId v : w_sorted) require_vertex(v);
    auto in = [](const std::vector<VertexId>& s, VertexId v) {
        return std::binary_search(s.begin(), s.end(), v);
    };
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == e.v) continue;
        bool eu_u = in(u_sorted, e.u) && !in(w_sorted, e.u);
        bool eu_w = in(w_sorted, e.u) && !in(u_sorted, e.u);
        bool ev_u = in(u_sorted, e.v) && !in(w_sorted, e.v);
        bool ev_w = in(w_sorted, e.v) && !in(u_sorted, e.v);
        if ((eu_u && ev_w) || (eu_w && ev_u)) ++d;
    }
    return d;
}

int MultiGraph::cut_degree(const std::vector<VertexId>& us) const {
    std::vector<VertexId> u_sorted(us);
    std::sort(u_sorted.begin(), u_sorted.end());
    u_sorted.erase(std::unique(u_sorted.begin(), u_sorted.end()), u_sorted.end());
    for (VertexId v : u_sorted) require_vertex(v);
    if (u_sorted.empty())
        throw precondition_error("cut_degree of the empty set is undefined");
    if (u_sorted.size() == verts_.size())
        throw precondition_error("cut_degree of the full vertex set is undefined");
    std::vector<VertexId> rest;
    std::set_difference(verts_.begin(), verts_.end(), u_sorted.begin(), u_sorted.end(),
                        std::back_inserter(rest));
    return cross_degree(u_sorted, rest);
}

VertexId MultiGraph::add_vertex() {
    VertexId v = verts_.empty() ? 0 : verts_.back() + 1;
    add_vertex(v);
    return v;
}

void MultiGraph::add_vertex(VertexId v) {
    if (v < 0) throw precondition_error("vertex ids must be non-negative");
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it != verts_.end() && *it == v)
        throw precondition_error("vertex " + std::to_string(v) + " already present");
    verts_.insert(it, v);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
    require_vertex(u);
    require_vertex(v);
    EdgeId id = next_edge_id_++;
    edges_.push_back({std::min(u, v), std::max(u, v), id});
    return id;
}

void MultiGraph::add_edge_with_id(VertexId u, VertexId v, EdgeId id) {
    require_vertex(u);
    require_vertex(v);
    if (id < 0) throw precondition_error("edge ids must be non-negative");
    if (has_edge(id)) throw precondition_error("edge id " + std::to_string(id) + " already in use");
    Edge e{std::min(u, v), std::max(u, v), id};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& x, EdgeId y) { return x.id < y; });
    edges_.insert(it, e);
    next_edge_id_ = std::max(next_edge_id_, id + 1);
}

void MultiGraph::remove_edge(EdgeId id) {
    int pos = edge_pos(id);
    if (pos < 0) throw precondition_error("no edge with id " + std::to_string(id));
    edges_.erase(edges_.begin() + pos);
}

void MultiGraph::delete_vertex(VertexId v) {
    require_vertex(v);
    edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                                [v](const Edge& e) { return e.u == v || e.v == v; }),
                 edges_.end());
    verts_.erase(std::lower_bound(verts_.begin(), verts_.end(), v));
}

bool MultiGraph::operator==(const MultiGraph& o) const {
    if (verts_ != o.verts_ || edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge &a = edges_[i], &b = o.edges_[i];
        if (a.id != b.id || a.u != b.u || a.v != b.v) return false;
    }
    return true;
}

bool MultiGraph::same_edge_multiset(const MultiGraph& o) const {
    if (verts_ != o.verts_ || edges_.size() != o.edges_.size()) return false;
    auto pairs = [](const std::vector<Edge>& es) {
        std::vector<std::pair<VertexId, VertexId>> ps;
        ps.reserve(es.size());
        for (const Edge& e : es) ps.emplace_back(e.u, e.v);
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    return pairs(edges_) == pairs(o.edges_);
}

namespace {

bool content_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

MultiGraph MultiGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    MultiGraph g;
    int seen_edges = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw parse_error(lineno, "expected header \"n m\"");
            std::string junk;
            if (ls >> junk) throw parse_error(lineno, "trailing characters after header");
            g = MultiGraph(static_cast<int>(n));
            continue;
        }
        if (seen_edges == m) throw parse_error(lineno, "more edge lines than the header announced");
        long long u, v;
        if (!(ls >> u >> v)) throw parse_error(lineno, "expected edge line \"u v\"");
        std::string junk;
        if (ls >> junk) throw parse_error(lineno, "trailing characters after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        ++seen_edges;
    }
    if (n < 0) throw parse_error(lineno + 1, "missing header \"n m\"");
    if (seen_edges < m)
        throw parse_error(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(seen_edges));
    return g;
}

std::string MultiGraph::serialize() const {
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] != static_cast<VertexId>(i))
            throw precondition_error("serialize requires contiguous vertex ids 0..n-1");
    std::vector<Edge> sorted(edges_);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.id < b.id;
    });
    std::ostringstream out;
    out << verts_.size() << ' ' << sorted.size() << '\n';
    for (const Edge& e : sorted) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace conn2k
