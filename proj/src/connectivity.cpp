#include "conn2k/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>

#include "conn2k/errors.hpp"
#include "flow.hpp"

namespace conn2k {

namespace {

void validate_k(const ConnParams& p) {
    if (p.k < 1) throw precondition_error("k must be at least 1");
}

std::vector<VertexId> minus_vertex(const std::vector<VertexId>& vs, VertexId s) {
    std::vector<VertexId> out;
    out.reserve(vs.size());
    for (VertexId v : vs)
        if (v != s) out.push_back(v);
    return out;
}

// min_cut returns the minimal source side within the kept vertices; it may
// contain s. Both sides of a two-sided cut have the same entering degree, so
// whichever side avoids s works as a witness inner set.
std::vector<VertexId> side_without(const MultiGraph& g, const std::vector<VertexId>& side,
                                   VertexId s, VertexId removed) {
    if (!std::binary_search(side.begin(), side.end(), s)) return side;
    std::vector<VertexId> other;
    for (VertexId v : g.vertices())
        if (v != removed && !std::binary_search(side.begin(), side.end(), v)) other.push_back(v);
    return other;
}

ConnectivityVerdict check_impl(const MultiGraph& g, const std::vector<VertexId>& ground,
                               bool has_s, VertexId s, const ConnParams& p) {
    ConnectivityVerdict verdict;
    verdict.k = p.k;
    if (static_cast<int>(ground.size()) > 64)
        throw precondition_error("connectivity checks are capped at 64 relevant vertices");

    // Phase 1: every pair of ground vertices is 2k-edge-connected. Local
    // connectivity from a fixed base to everything else suffices: a violated
    // cut separates some pair, hence the base from one of them.
    for (size_t i = 1; i < ground.size(); ++i) {
        auto cut = detail::min_cut(g, {ground[0]}, {ground[i]}, {}, 2 * p.k);
        if (cut.value < 2 * p.k) {
            std::vector<VertexId> inner =
                has_s ? side_without(g, cut.source_side, s, -1) : cut.source_side;
            verdict.ok = false;
            verdict.witness = BiSet(ground, inner, inner);
            verdict.f_val = cut.value;
            return verdict;
        }
    }

    // Phase 2: deleting any single ground vertex w leaves the remaining
    // ground pairs k-edge-connected. A violating cut in g - w corresponds to
    // a bi-set with wall {w} and f = cut + k.
    for (VertexId w : ground) {
        std::vector<VertexId> rest = minus_vertex(ground, w);
        for (size_t i = 1; i < rest.size(); ++i) {
            auto cut = detail::min_cut(g, {rest[0]}, {rest[i]}, {w}, p.k);
            if (cut.value < p.k) {
                std::vector<VertexId> inner =
                    has_s ? side_without(g, cut.source_side, s, w) : cut.source_side;
                std::vector<VertexId> outer = inner;
                outer.push_back(w);
                std::sort(outer.begin(), outer.end());
                verdict.ok = false;
                verdict.witness = BiSet(ground, inner, outer);
                verdict.f_val = cut.value + p.k;
                return verdict;
            }
        }
    }

    verdict.ok = true;
    return verdict;
}

}  // namespace

int entering_degree(const MultiGraph& g, const BiSet& x) {
    for (VertexId v : x.ground())
        if (!g.has_vertex(v))
            throw precondition_error("bi-set ground is not contained in the graph");
    int d = 0;
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        if ((x.in_inner(e.u) && !x.in_outer(e.v)) || (x.in_inner(e.v) && !x.in_outer(e.u))) ++d;
    }
    return d;
}

int f_value(const MultiGraph& g, const ConnParams& p, const BiSet& x) {
    validate_k(p);
    return entering_degree(g, x) + p.k * x.wall_size();
}

bool is_tight(const MultiGraph& g, const ConnParams& p, const BiSet& x) {
    if (x.is_trivial()) throw precondition_error("tightness is undefined for trivial bi-sets");
    return f_value(g, p, x) == 2 * p.k;
}

int local_edge_connectivity(const MultiGraph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw precondition_error("local connectivity endpoints must be graph vertices");
    if (u == v) throw precondition_error("local connectivity needs two distinct vertices");
    int limit = std::min(g.degree(u), g.degree(v)) + 1;
    return detail::min_cut(g, {u}, {v}, {}, limit).value;
}

ConnectivityVerdict check(const MultiGraph& g, const ConnParams& p) {
    validate_k(p);
    if (g.num_vertices() < 3) {
        ConnectivityVerdict verdict;
        verdict.ok = false;
        verdict.k = p.k;
        return verdict;
    }
    return check_impl(g, g.vertices(), false, -1, p);
}

ConnectivityVerdict check_in_V(const MultiGraph& h, VertexId s, const ConnParams& p) {
    validate_k(p);
    if (!h.has_vertex(s)) throw precondition_error("designated vertex is not in the graph");
    std::vector<VertexId> ground = minus_vertex(h.vertices(), s);
    if (ground.size() < 3)
        throw precondition_error("connectivity in V needs at least 3 vertices besides s");
    return check_impl(h, ground, true, s, p);
}

namespace {

struct EdgeIdx {
    int a, b;  // positions in the ground; -1 when the endpoint is outside it
};

// Shared enumeration core: visits (inner_mask, wall_pos) candidates in the
// documented oracle order. wall_pos == -1 means empty wall.
template <typename F>
void enumerate_small_wall(int n, F&& visit) {
    uint64_t full = (uint64_t{1} << n) - 1;
    for (uint64_t inner = 1; inner < full; ++inner)
        if (!visit(inner, -1)) return;
    if (n < 2) return;
    for (int wi = 0; wi < n; ++wi) {
        uint64_t sub_full = (uint64_t{1} << (n - 1)) - 1;
        for (uint64_t reduced = 1; reduced < sub_full; ++reduced) {
            uint64_t inner = 0;
            for (int j = 0; j < n - 1; ++j)
                if (reduced >> j & 1) inner |= uint64_t{1} << (j < wi ? j : j + 1);
            if (!visit(inner, wi)) return;
        }
    }
}

ConnectivityVerdict brute_impl(const MultiGraph& g, const std::vector<VertexId>& ground,
                               const ConnParams& p, int max_ground) {
    ConnectivityVerdict verdict;
    verdict.k = p.k;
    int n = static_cast<int>(ground.size());
    if (n > max_ground || n > 62)
        throw precondition_error("ground has " + std::to_string(n) +
                                 " vertices; the brute-force check is capped at " +
                                 std::to_string(std::min(max_ground, 62)));
    if (n < 3) {
        verdict.ok = false;
        return verdict;
    }

    std::vector<EdgeIdx> eidx;
    eidx.reserve(g.num_edges());
    auto pos_of = [&](VertexId v) {
        auto it = std::lower_bound(ground.begin(), ground.end(), v);
        if (it == ground.end() || *it != v) return -1;
        return static_cast<int>(it - ground.begin());
    };
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        eidx.push_back({pos_of(e.u), pos_of(e.v)});
    }

    auto entering = [&](uint64_t inner, uint64_t outer) {
        int d = 0;
        for (const EdgeIdx& e : eidx) {
            bool a_in = e.a >= 0 && (inner >> e.a & 1);
            bool a_out = e.a >= 0 && (outer >> e.a & 1);
            bool b_in = e.b >= 0 && (inner >> e.b & 1);
            bool b_out = e.b >= 0 && (outer >> e.b & 1);
            if ((a_in && !b_out) || (b_in && !a_out)) ++d;
        }
        return d;
    };

    bool ok = true;
    enumerate_small_wall(n, [&](uint64_t inner, int wall_pos) {
        uint64_t outer = wall_pos < 0 ? inner : inner | (uint64_t{1} << wall_pos);
        int f = entering(inner, outer) + (wall_pos < 0 ? 0 : p.k);
        if (f < 2 * p.k) {
            verdict.witness = BiSet::from_masks(ground, inner, outer);
            verdict.f_val = f;
            ok = false;
            return false;
        }
        return true;
    });
    verdict.ok = ok;
    return verdict;
}

}  // namespace

ConnectivityVerdict check_bruteforce(const MultiGraph& g, const ConnParams& p, int max_ground) {
    validate_k(p);
    if (g.num_vertices() < 3) {
        ConnectivityVerdict verdict;
        verdict.ok = false;
        verdict.k = p.k;
        return verdict;
    }
    return brute_impl(g, g.vertices(), p, max_ground);
}

ConnectivityVerdict check_in_V_bruteforce(const MultiGraph& h, VertexId s, const ConnParams& p,
                                          int max_ground) {
    validate_k(p);
    if (!h.has_vertex(s)) throw precondition_error("designated vertex is not in the graph");
    std::vector<VertexId> ground = minus_vertex(h.vertices(), s);
    if (ground.size() < 3)
        throw precondition_error("connectivity in V needs at least 3 vertices besides s");
    return brute_impl(h, ground, p, max_ground);
}

void for_each_small_wall_biset(const std::vector<VertexId>& ground,
                               const std::function<bool(const BiSet&)>& visit) {
    int n = static_cast<int>(ground.size());
    if (n == 0 || n > 62) throw precondition_error("ground must have between 1 and 62 vertices");
    std::vector<VertexId> sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    enumerate_small_wall(n, [&](uint64_t inner, int wall_pos) {
        uint64_t outer = wall_pos < 0 ? inner : inner | (uint64_t{1} << wall_pos);
        return visit(BiSet::from_masks(sorted, inner, outer));
    });
}

}  // namespace conn2k
