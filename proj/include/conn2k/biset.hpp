#pragma once

#include <cstdint>
#include <vector>

#include "conn2k/multigraph.hpp"

namespace conn2k {

// Bi-set over an explicit ground set: inner() ⊆ outer() ⊆ ground().
//
// The ground is part of the value. The same vertex set can play different
// roles (all vertices of a graph, or all vertices minus a designated one), so
// every lattice operation insists both operands carry the identical ground.
// Grounds are capped at 64 vertices; member sets are stored as bit masks
// indexed by position in the sorted ground.
class BiSet {
  public:
    BiSet(std::vector<VertexId> ground, const std::vector<VertexId>& inner,
          const std::vector<VertexId>& outer);
    static BiSet from_masks(std::vector<VertexId> ground, uint64_t inner, uint64_t outer);

    const std::vector<VertexId>& ground() const { return ground_; }
    std::vector<VertexId> inner() const { return expand(inner_); }
    std::vector<VertexId> outer() const { return expand(outer_); }
    std::vector<VertexId> wall() const { return expand(outer_ & ~inner_); }
    uint64_t inner_mask() const { return inner_; }
    uint64_t outer_mask() const { return outer_; }
    int inner_size() const;
    int outer_size() const;
    int wall_size() const;

    // Membership; vertices outside the ground are in no component.
    bool in_inner(VertexId v) const;
    bool in_outer(VertexId v) const;
    bool in_wall(VertexId v) const;

    bool is_trivial() const;  // inner empty, or outer is the whole ground
    bool is_set() const { return inner_ == outer_; }
    bool is_pair() const { return inner_ != outer_; }

    BiSet meet(const BiSet& other) const;  // componentwise intersection
    BiSet join(const BiSet& other) const;  // componentwise union
    BiSet complement() const;              // (ground \ inner, ground \ outer)
    bool is_included(const BiSet& other) const;       // componentwise ⊆
    bool innerly_disjoint(const BiSet& other) const;  // inner sets disjoint

    bool operator==(const BiSet& o) const;
    bool operator!=(const BiSet& o) const { return !(*this == o); }

  private:
    std::vector<VertexId> ground_;  // sorted ascending
    uint64_t inner_ = 0;
    uint64_t outer_ = 0;

    BiSet() = default;
    std::vector<VertexId> expand(uint64_t mask) const;
    int ground_index(VertexId v) const;  // -1 if absent
    void require_same_ground(const BiSet& other) const;
};

}  // namespace conn2k
