#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "conn2k/connectivity.hpp"
#include "conn2k/multigraph.hpp"

namespace conn2k {

struct AddEdgeStep {
    VertexId u, v;  // u == v adds a loop
};

// Replace the k edges in `edges` by a new vertex joined to their endpoints:
// each edge uv becomes new-u plus new-v, so the new vertex gets degree 2k.
// A loop in the set contributes two parallel edges to its endpoint.
struct PinchStep {
    std::vector<EdgeId> edges;  // ascending, exactly k ids
    VertexId new_vertex;
};

using ConstructionStep = std::variant<AddEdgeStep, PinchStep>;

struct ConstructionTrace {
    int k = 0;
    std::vector<ConstructionStep> steps;
};

// The triangle on vertices 0, 1, 2 with k parallel edges per pair; edge ids
// 0..3k-1 ascending by (min endpoint, max endpoint, copy). The smallest
// (2k,k)-connected graph, and the base of every construction.
MultiGraph k_K3(const ConnParams& p);

// Apply one construction step in place. Pinches require exactly k distinct
// existing edge ids with at most k ends at any one vertex, and a fresh
// new_vertex id; edges are replaced in ascending id order, adding new-u
// before new-v for each.
void apply_step(MultiGraph& g, const ConnParams& p, const ConstructionStep& step);

struct GenerateResult {
    MultiGraph graph;
    ConstructionTrace trace;
};

// Build a random (2k,k)-connected graph: start from k_K3 and apply `steps`
// random steps, each a fair coin between AddEdge (uniform endpoints) and
// Pinch (uniform k-subsets of edges, resampled while the end-count bound
// fails). Both operations preserve (2k,k)-connectivity for every k >= 1;
// only decomposition needs even k. Identical seeds give identical results
// on every platform.
GenerateResult generate(const ConnParams& p, int steps, uint64_t seed);

// Reverse-engineer a construction of g: delete removable edges and split
// degree-2k vertices away completely, backtracking over the interleaving,
// until k_K3 on vertices 0, 1, 2 remains; the recorded steps replay forward
// to a graph with g's vertex set and edge multiset. Requires even k (odd k
// admits no such decomposition; see fixtures/k4_plus_hub.txt for the k = 3
// witness) and g (2k,k)-connected with vertices 0, 1, 2 present. Valid
// graphs can still fail when no construction ends on that exact triangle.
ConstructionTrace decompose(const MultiGraph& g, const ConnParams& p);

// Run a trace from k_K3; trace.k must equal p.k.
MultiGraph replay(const ConnParams& p, const ConstructionTrace& trace);

}  // namespace conn2k
