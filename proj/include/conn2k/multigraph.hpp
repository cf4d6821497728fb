#pragma once

#include <string>
#include <vector>

#include "conn2k/errors.hpp"

namespace conn2k {

using VertexId = int;
using EdgeId = int;

// Undirected edge; u <= v always. u == v is a loop.
struct Edge {
    VertexId u;
    VertexId v;
    EdgeId id;
};

// Undirected multigraph with stable integer edge ids.
//
// Vertex ids are arbitrary non-negative integers; deleting a vertex leaves a
// gap. Edge ids come from a monotone counter and are never reassigned, so a
// recorded sequence of mutations replays to an identical graph.
class MultiGraph {
  public:
    MultiGraph() = default;
    explicit MultiGraph(int n);  // vertices 0..n-1, no edges

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexId>& vertices() const { return verts_; }  // ascending
    const std::vector<Edge>& edges() const { return edges_; }         // ascending by id

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId id) const;
    const Edge& edge(EdgeId id) const;
    VertexId max_vertex_id() const;  // error on empty graph

    // Loops contribute 2 to the degree of their vertex.
    int degree(VertexId v) const;
    // Number of parallel u-v edges; multiplicity(v, v) counts loops once each.
    int multiplicity(VertexId u, VertexId v) const;
    // Distinct adjacent vertices, ascending; a vertex is never its own neighbor.
    std::vector<VertexId> neighbors(VertexId v) const;

    // Edges with one endpoint in U\W and the other in W\U. Loops never count.
    int cross_degree(const std::vector<VertexId>& us, const std::vector<VertexId>& ws) const;
    // d(U) = cross_degree(U, V\U); U must be a proper non-empty vertex subset.
    int cut_degree(const std::vector<VertexId>& us) const;

    VertexId add_vertex();             // id = max existing + 1 (0 for empty graph)
    void add_vertex(VertexId v);       // error if present or negative
    EdgeId add_edge(VertexId u, VertexId v);
    void add_edge_with_id(VertexId u, VertexId v, EdgeId id);  // error if id in use
    void remove_edge(EdgeId id);
    void delete_vertex(VertexId v);    // removes incident edges too

    // Exact equality: same vertex set and same (id, endpoints) edge set.
    bool operator==(const MultiGraph& o) const;
    bool operator!=(const MultiGraph& o) const { return !(*this == o); }
    // Same vertex set and same multiset of endpoint pairs, ignoring edge ids.
    bool same_edge_multiset(const MultiGraph& o) const;

    // Text format: header "n m", then m lines "u v"; vertices are implicitly
    // 0..n-1; lines starting with '#' and blank lines are skipped.
    static MultiGraph parse(const std::string& text);
    // Emits edges sorted by (min endpoint, max endpoint, insertion order).
    // Requires vertex ids to be exactly 0..n-1.
    std::string serialize() const;

  private:
    std::vector<VertexId> verts_;  // sorted ascending
    std::vector<Edge> edges_;      // sorted ascending by id
    EdgeId next_edge_id_ = 0;

    void require_vertex(VertexId v) const;
    int edge_pos(EdgeId id) const;  // index into edges_, or -1
};

}  // namespace conn2k
