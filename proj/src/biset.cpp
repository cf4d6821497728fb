#include "conn2k/biset.hpp"

#include <algorithm>
#include <bit>

namespace conn2k {

namespace {

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

BiSet::BiSet(std::vector<VertexId> ground, const std::vector<VertexId>& inner,
             const std::vector<VertexId>& outer) {
    ground_ = sorted_unique(std::move(ground));
    if (ground_.size() > 64) throw precondition_error("bi-set grounds are capped at 64 vertices");
    auto mask_of = [this](const std::vector<VertexId>& ids, const char* what) {
        uint64_t m = 0;
        for (VertexId v : ids) {
            int i = ground_index(v);
            if (i < 0)
                throw precondition_error(std::string(what) + " vertex " + std::to_string(v) +
                                         " is not in the ground set");
            m |= uint64_t{1} << i;
        }
        return m;
    };
    inner_ = mask_of(inner, "inner");
    outer_ = mask_of(outer, "outer");
    if (inner_ & ~outer_) throw precondition_error("inner set must be contained in the outer set");
}

BiSet BiSet::from_masks(std::vector<VertexId> ground, uint64_t inner, uint64_t outer) {
    BiSet x;
    x.ground_ = sorted_unique(std::move(ground));
    if (x.ground_.size() > 64) throw precondition_error("bi-set grounds are capped at 64 vertices");
    uint64_t full = x.ground_.size() == 64 ? ~uint64_t{0}
                                           : (uint64_t{1} << x.ground_.size()) - 1;
    if (inner & ~full || outer & ~full)
        throw precondition_error("mask uses bits beyond the ground size");
    if (inner & ~outer) throw precondition_error("inner set must be contained in the outer set");
    x.inner_ = inner;
    x.outer_ = outer;
    return x;
}

int BiSet::ground_index(VertexId v) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || *it != v) return -1;
    return static_cast<int>(it - ground_.begin());
}

std::vector<VertexId> BiSet::expand(uint64_t mask) const {
    std::vector<VertexId> out;
    for (size_t i = 0; i < ground_.size(); ++i)
        if (mask >> i & 1) out.push_back(ground_[i]);
    return out;
}

int BiSet::inner_size() const { return std::popcount(inner_); }
int BiSet::outer_size() const { return std::popcount(outer_); }
int BiSet::wall_size() const { return std::popcount(outer_ & ~inner_); }

bool BiSet::in_inner(VertexId v) const {
    int i = ground_index(v);
    return i >= 0 && (inner_ >> i & 1);
}

bool BiSet::in_outer(VertexId v) const {
    int i = ground_index(v);
    return i >= 0 && (outer_ >> i & 1);
}

bool BiSet::in_wall(VertexId v) const { return in_outer(v) && !in_inner(v); }

bool BiSet::is_trivial() const {
    return inner_ == 0 || outer_size() == static_cast<int>(ground_.size());
}

void BiSet::require_same_ground(const BiSet& other) const {
    if (ground_ != other.ground_)
        throw precondition_error("bi-set operation across different ground sets");
}

BiSet BiSet::meet(const BiSet& other) const {
    require_same_ground(other);
    BiSet x;
    x.ground_ = ground_;
    x.inner_ = inner_ & other.inner_;
    x.outer_ = outer_ & other.outer_;
    return x;
}

BiSet BiSet::join(const BiSet& other) const {
    require_same_ground(other);
    BiSet x;
    x.ground_ = ground_;
    x.inner_ = inner_ | other.inner_;
    x.outer_ = outer_ | other.outer_;
    return x;
}

BiSet BiSet::complement() const {
    uint64_t full = ground_.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << ground_.size()) - 1;
    BiSet x;
    x.ground_ = ground_;
    x.inner_ = full & ~inner_;
    x.outer_ = full & ~outer_;
    std::swap(x.inner_, x.outer_);
    return x;
}

bool BiSet::is_included(const BiSet& other) const {
    require_same_ground(other);
    return (inner_ & ~other.inner_) == 0 && (outer_ & ~other.outer_) == 0;
}

bool BiSet::innerly_disjoint(const BiSet& other) const {
    require_same_ground(other);
    return (inner_ & other.inner_) == 0;
}

bool BiSet::operator==(const BiSet& o) const {
    return ground_ == o.ground_ && inner_ == o.inner_ && outer_ == o.outer_;
}

}  // namespace conn2k
