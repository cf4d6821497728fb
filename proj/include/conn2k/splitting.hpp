#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conn2k/connectivity.hpp"
#include "conn2k/multigraph.hpp"

namespace conn2k {

// Split the edge pair (su, sv): u == v is allowed and produces a loop at u.
struct SplitPair {
    VertexId u, v;
};

enum class BlockingKind {
    dangerous,  // u, v both inner, f <= 2k + 1
    critical,   // one endpoint inner, the other is the only wall vertex, f <= 2k
};

// The reason a pair (su, sv) cannot be split off admissibly. A pair is
// non-admissible exactly when such a bi-set exists.
struct BlockingBiSet {
    BiSet biset;
    BlockingKind kind;
};

// Witness that no complete admissible splitting exists at s: a neighbor t
// with d(s, t) odd and a family of pairwise innerly-disjoint critical
// bi-sets, each with wall {t}, whose inner sets cover N(s) \ {t}.
struct Obstacle {
    VertexId t;
    std::vector<BiSet> members;
};

struct ObstacleCheck {
    bool ok = false;
    std::string first_failure;  // empty when ok
};

// A complete admissible splitting at s: applying the pairs in order and then
// deleting the isolated s yields final_graph.
struct SplitTrace {
    VertexId s;
    std::vector<SplitPair> pairs;
    MultiGraph final_graph;
};

// Exactly one of the three members is set. For d(s) >= 4 the search always
// ends in a trace or an obstacle; `blocked` is reserved for d(s) == 2, where
// the single candidate pair can fail with neither.
struct SplitOutcome {
    std::optional<SplitTrace> trace;
    std::optional<Obstacle> obstacle;
    std::optional<BlockingBiSet> blocked;
};

// Remove the lowest-id s-u edge and the lowest-id remaining s-v edge, then
// add a new edge uv. Requires the two edges to exist and u, v != s.
MultiGraph split_pair(const MultiGraph& h, VertexId s, const SplitPair& pr);

// The split of (su, sv) preserves (2k,k)-connectivity in V. Assumes h itself
// is (2k,k)-connected in V; the check runs on the split graph only.
bool is_admissible(const MultiGraph& h, VertexId s, const ConnParams& p, const SplitPair& pr);

// Search for a bi-set blocking (su, sv); nullopt means the pair is
// admissible. With maximal set, the found bi-set is grown greedily until no
// vertex can be added while it stays blocking.
std::optional<BlockingBiSet> find_blocking_biset(const MultiGraph& h, VertexId s,
                                                 const ConnParams& p, const SplitPair& pr,
                                                 bool maximal = false);

// Check every obstacle condition against h: t is a neighbor of s with
// d(s, t) odd; the members are non-trivial bi-sets of V with wall {t} and
// f <= 2k, pairwise innerly-disjoint, covering N(s) \ {t}. Two derived
// consequences are checked too: the family has at least 3 members, and
// removing one s-t edge keeps h (2k,k)-connected in V.
ObstacleCheck verify_obstacle(const MultiGraph& h, VertexId s, const ConnParams& p,
                              const Obstacle& ob);

// Repair a family that satisfies every obstacle condition except pairwise
// inner-disjointness: repeatedly uncross an intersecting pair into critical
// bi-sets with smaller inner sets, dropping nested members. The union of
// inner sets is preserved exactly.
std::vector<BiSet> uncross_family(const MultiGraph& h, VertexId s, const ConnParams& p,
                                  VertexId t, std::vector<BiSet> family);

// Search for an obstacle at s. Assumes h is (2k,k)-connected in V with
// d(s) even and >= 4; requires k >= 2 and no loops at s.
std::optional<Obstacle> find_obstacle(const MultiGraph& h, VertexId s, const ConnParams& p);

// Split all of d(s) off admissibly, or produce the witness that forbids it.
// Requires k >= 2, d(s) even, no loops at s, and h (2k,k)-connected in V
// (verified here). For d(s) >= 4 the outcome is a trace or an obstacle; a
// blocked outcome can only arise at d(s) == 2.
SplitOutcome complete_splitting(const MultiGraph& h, VertexId s, const ConnParams& p);

}  // namespace conn2k
