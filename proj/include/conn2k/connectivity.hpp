#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "conn2k/biset.hpp"
#include "conn2k/multigraph.hpp"

namespace conn2k {

struct ConnParams {
    int k = 1;
};

// Outcome of a connectivity check. A witness, when present, is a non-trivial
// bi-set with f(witness) = f_val < 2k. It is present exactly when ok is
// false and the relevant vertex set has at least 3 vertices; smaller graphs
// fail the vertex-count requirement outright and carry no witness.
struct ConnectivityVerdict {
    bool ok = false;
    std::optional<BiSet> witness;
    int f_val = 0;  // meaningful only when witness is present
    int k = 0;
};

// Number of edges with one endpoint in inner(x) and the other outside
// outer(x). The graph may have vertices outside x's ground (a designated
// vertex s, say); edges from those count like any others. Loops never enter
// anything.
int entering_degree(const MultiGraph& g, const BiSet& x);

// f(x) = entering_degree(x) + k * |wall(x)|.
int f_value(const MultiGraph& g, const ConnParams& p, const BiSet& x);

// f(x) == 2k. x must be non-trivial; tightness is undefined otherwise.
bool is_tight(const MultiGraph& g, const ConnParams& p, const BiSet& x);

// Max-flow value between two distinct vertices. Parallel edges carry unit
// capacity each; loops contribute nothing.
int local_edge_connectivity(const MultiGraph& g, VertexId u, VertexId v);

// g is (2k,k)-connected: |V| >= 3, every vertex pair is 2k-edge-connected,
// and deleting any one vertex leaves all remaining pairs k-edge-connected.
// Equivalently f(x) >= 2k for every non-trivial bi-set. Supports up to 64
// vertices.
ConnectivityVerdict check(const MultiGraph& g, const ConnParams& p);

// The same condition restricted to bi-sets of V = vertices(h) \ {s}: every
// pair of V must be 2k-edge-connected in h and k-edge-connected in h - w for
// each w in V. s participates in cuts but never as a terminal, so no
// constraint is placed on s's degree. Requires |V| >= 3.
ConnectivityVerdict check_in_V(const MultiGraph& h, VertexId s, const ConnParams& p);

// Oracle versions: enumerate every non-trivial bi-set with wall size <= 1
// (bigger walls satisfy f >= k|wall| >= 2k unconditionally) and test f
// directly. Enumeration order: empty wall first, then singleton walls
// ascending by vertex id, inner sets in binary-counter order over the ground
// positions; the first violation found becomes the witness. Refuses grounds
// larger than max_ground.
ConnectivityVerdict check_bruteforce(const MultiGraph& g, const ConnParams& p,
                                     int max_ground = 10);
ConnectivityVerdict check_in_V_bruteforce(const MultiGraph& h, VertexId s,
                                          const ConnParams& p, int max_ground = 10);

// Visits the non-trivial bi-sets of `ground` with wall size <= 1, in the
// oracle order above. Stops early when the callback returns false.
void for_each_small_wall_biset(const std::vector<VertexId>& ground,
                               const std::function<bool(const BiSet&)>& visit);

}  // namespace conn2k
