#include "conn2k/splitting.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "conn2k/errors.hpp"
#include "flow.hpp"

namespace conn2k {

namespace {

void require_k2(const ConnParams& p) {
    if (p.k < 2) throw unsupported_k_error("the splitting machinery requires k >= 2");
}

std::vector<VertexId> minus_vertex(const std::vector<VertexId>& vs, VertexId s) {
    std::vector<VertexId> out;
    out.reserve(vs.size());
    for (VertexId v : vs)
        if (v != s) out.push_back(v);
    return out;
}

std::vector<VertexId> with_vertex(std::vector<VertexId> vs, VertexId v) {
    vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

void remove_lowest_edge(MultiGraph& g, VertexId a, VertexId b) {
    VertexId lo = std::min(a, b);
    VertexId hi = std::max(a, b);
    for (const Edge& e : g.edges()) {
        if (e.u == lo && e.v == hi) {
            g.remove_edge(e.id);
            return;
        }
    }
    throw precondition_error("split pair needs an s-edge to each endpoint");
}

void validate_pair(const MultiGraph& h, VertexId s, const SplitPair& pr) {
    if (!h.has_vertex(s) || !h.has_vertex(pr.u) || !h.has_vertex(pr.v))
        throw precondition_error("split endpoints must be graph vertices");
    if (pr.u == s || pr.v == s)
        throw precondition_error("cannot split a pair onto the designated vertex itself");
    int need_u = pr.u == pr.v ? 2 : 1;
    if (h.multiplicity(s, pr.u) < need_u || h.multiplicity(s, pr.v) < 1)
        throw precondition_error("split pair needs an s-edge to each endpoint");
}

}  // namespace

MultiGraph split_pair(const MultiGraph& h, VertexId s, const SplitPair& pr) {
    validate_pair(h, s, pr);
    MultiGraph g = h;
    remove_lowest_edge(g, s, pr.u);
    remove_lowest_edge(g, s, pr.v);
    g.add_edge(pr.u, pr.v);
    return g;
}

bool is_admissible(const MultiGraph& h, VertexId s, const ConnParams& p, const SplitPair& pr) {
    require_k2(p);
    return check_in_V(split_pair(h, s, pr), s, p).ok;
}

namespace {

// Membership test used during greedy growth.
std::optional<BlockingKind> blocking_kind_of(const MultiGraph& h, const ConnParams& p,
                                             const SplitPair& pr, const BiSet& x) {
    if (x.is_trivial()) return std::nullopt;
    int f = f_value(h, p, x);
    if (x.in_inner(pr.u) && x.in_inner(pr.v) && f <= 2 * p.k + 1) return BlockingKind::dangerous;
    if (pr.u != pr.v && f <= 2 * p.k) {
        std::vector<VertexId> wall = x.wall();
        if (x.in_inner(pr.u) && wall.size() == 1 && wall[0] == pr.v) return BlockingKind::critical;
        if (x.in_inner(pr.v) && wall.size() == 1 && wall[0] == pr.u) return BlockingKind::critical;
    }
    return std::nullopt;
}

BlockingBiSet grow_maximal(const MultiGraph& h, const ConnParams& p, const SplitPair& pr,
                           const std::vector<VertexId>& ground, BlockingBiSet blk) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId z : ground) {
            const BiSet& cur = blk.biset;
            if (!cur.in_outer(z)) {
                BiSet inner_add(ground, with_vertex(cur.inner(), z), with_vertex(cur.outer(), z));
                if (auto kind = blocking_kind_of(h, p, pr, inner_add)) {
                    blk = {inner_add, *kind};
                    changed = true;
                    continue;
                }
                BiSet wall_add(ground, cur.inner(), with_vertex(cur.outer(), z));
                if (auto kind = blocking_kind_of(h, p, pr, wall_add)) {
                    blk = {wall_add, *kind};
                    changed = true;
                }
            } else if (cur.in_wall(z)) {
                BiSet promote(ground, with_vertex(cur.inner(), z), cur.outer());
                if (auto kind = blocking_kind_of(h, p, pr, promote)) {
                    blk = {promote, *kind};
                    changed = true;
                }
            }
        }
    }
    return blk;
}

}  // namespace

std::optional<BlockingBiSet> find_blocking_biset(const MultiGraph& h, VertexId s,
                                                 const ConnParams& p, const SplitPair& pr,
                                                 bool maximal) {
    require_k2(p);
    validate_pair(h, s, pr);
    std::vector<VertexId> ground = minus_vertex(h.vertices(), s);
    if (ground.size() < 3)
        throw precondition_error("blocking search needs at least 3 vertices besides s");
    VertexId u = pr.u;
    VertexId v = pr.v;
    int k = p.k;
    std::vector<VertexId> srcs = u == v ? std::vector<VertexId>{u} : std::vector<VertexId>{u, v};

    std::optional<BlockingBiSet> found;

    // Dangerous with empty wall: u, v inside, f = entering degree <= 2k + 1.
    // Excluding each candidate z from the outer set in turn makes the search
    // exhaustive: any blocking bi-set misses some z, and the min cut with
    // that z on the sink side is at most its entering degree.
    for (VertexId z : ground) {
        if (z == u || z == v) continue;
        auto cut = detail::min_cut(h, srcs, {s, z}, {}, 2 * k + 2);
        if (cut.value <= 2 * k + 1) {
            found = {BiSet(ground, cut.source_side, cut.source_side), BlockingKind::dangerous};
            break;
        }
    }

    // Dangerous with wall {w}: f = entering + k <= 2k + 1.
    if (!found) {
        for (VertexId w : ground) {
            if (found) break;
            if (w == u || w == v) continue;
            for (VertexId z : ground) {
                if (z == u || z == v || z == w) continue;
                auto cut = detail::min_cut(h, srcs, {s, z}, {w}, k + 2);
                if (cut.value <= k + 1) {
                    found = {BiSet(ground, cut.source_side, with_vertex(cut.source_side, w)),
                             BlockingKind::dangerous};
                    break;
                }
            }
        }
    }

    // Critical: one endpoint inside, the other is the single wall vertex,
    // f = entering + k <= 2k. Impossible when u == v.
    if (!found && u != v) {
        for (VertexId z : ground) {
            if (z == u || z == v) continue;
            auto cut = detail::min_cut(h, {u}, {s, z}, {v}, k + 1);
            if (cut.value <= k) {
                found = {BiSet(ground, cut.source_side, with_vertex(cut.source_side, v)),
                         BlockingKind::critical};
                break;
            }
        }
    }
    if (!found && u != v) {
        for (VertexId z : ground) {
            if (z == u || z == v) continue;
            auto cut = detail::min_cut(h, {v}, {s, z}, {u}, k + 1);
            if (cut.value <= k) {
                found = {BiSet(ground, cut.source_side, with_vertex(cut.source_side, u)),
                         BlockingKind::critical};
                break;
            }
        }
    }

    if (!found) return std::nullopt;
    assert(blocking_kind_of(h, p, pr, found->biset).has_value());
    if (maximal) return grow_maximal(h, p, pr, ground, *found);
    return found;
}

ObstacleCheck verify_obstacle(const MultiGraph& h, VertexId s, const ConnParams& p,
                              const Obstacle& ob) {
    require_k2(p);
    if (!h.has_vertex(s)) throw precondition_error("designated vertex is not in the graph");
    std::vector<VertexId> ground = minus_vertex(h.vertices(), s);

    auto fail = [](const char* name) {
        ObstacleCheck chk;
        chk.ok = false;
        chk.first_failure = name;
        return chk;
    };

    if (ob.t == s || !h.has_vertex(ob.t) || h.multiplicity(s, ob.t) == 0)
        return fail("t_not_a_neighbor_of_s");
    if (h.multiplicity(s, ob.t) % 2 == 0) return fail("d_s_t_even");

    for (const BiSet& x : ob.members) {
        if (x.ground() != ground) return fail("member_ground_not_V");
        if (x.is_trivial()) return fail("member_trivial");
        std::vector<VertexId> wall = x.wall();
        if (wall.size() != 1 || wall[0] != ob.t) return fail("member_wall_not_t");
        if (f_value(h, p, x) > 2 * p.k) return fail("member_not_critical");
    }
    for (size_t i = 0; i < ob.members.size(); ++i)
        for (size_t j = i + 1; j < ob.members.size(); ++j)
            if (!ob.members[i].innerly_disjoint(ob.members[j]))
                return fail("members_not_innerly_disjoint");
    for (VertexId u : h.neighbors(s)) {
        if (u == ob.t) continue;
        bool covered = false;
        for (const BiSet& x : ob.members)
            if (x.in_inner(u)) {
                covered = true;
                break;
            }
        if (!covered) return fail("neighbors_not_covered");
    }

    // Derived consequences; failing either means the claimed obstacle lives
    // in a graph that was not (2k,k)-connected in V to begin with.
    if (ob.members.size() < 3) return fail("fewer_than_three_members");
    MultiGraph h2 = h;
    remove_lowest_edge(h2, s, ob.t);
    if (!check_in_V(h2, s, p).ok) return fail("st_removal_breaks_connectivity");

    ObstacleCheck chk;
    chk.ok = true;
    return chk;
}

std::vector<BiSet> uncross_family(const MultiGraph& h, VertexId s, const ConnParams& p,
                                  VertexId t, std::vector<BiSet> family) {
    require_k2(p);
    if (!h.has_vertex(s)) throw precondition_error("designated vertex is not in the graph");
    std::vector<VertexId> ground = minus_vertex(h.vertices(), s);
    for (const BiSet& x : family) {
        std::vector<VertexId> wall = x.wall();
        if (x.ground() != ground || x.is_trivial() || wall.size() != 1 || wall[0] != t ||
            f_value(h, p, x) > 2 * p.k)
            throw precondition_error("uncrossing requires critical bi-sets of V with wall {t}");
    }

    std::vector<VertexId> nbrs = h.neighbors(s);
    auto holds_neighbor = [&](const BiSet& x) {
        for (VertexId u : nbrs)
            if (x.in_inner(u)) return true;
        return false;
    };
    auto inner_total = [&]() {
        size_t total = 0;
        for (const BiSet& x : family) total += static_cast<size_t>(x.inner_size());
        return total;
    };

    for (;;) {
        // Drop duplicate and nested members first, keeping the larger one.
        bool dropped = true;
        while (dropped) {
            dropped = false;
            for (size_t i = 0; i < family.size() && !dropped; ++i) {
                for (size_t j = i + 1; j < family.size() && !dropped; ++j) {
                    if (family[i].is_included(family[j])) {
                        family.erase(family.begin() + i);
                        dropped = true;
                    } else if (family[j].is_included(family[i])) {
                        family.erase(family.begin() + j);
                        dropped = true;
                    }
                }
            }
        }

        size_t xi = family.size();
        size_t yj = family.size();
        for (size_t i = 0; i < family.size() && xi == family.size(); ++i)
            for (size_t j = i + 1; j < family.size(); ++j)
                if (!family[i].innerly_disjoint(family[j])) {
                    xi = i;
                    yj = j;
                    break;
                }
        if (xi == family.size()) break;

        size_t before = inner_total();
        BiSet x = family[xi];
        BiSet y = family[yj];
        // The three uncrossing candidates partition inner(x) | inner(y), so
        // dropping the ones holding no neighbor of s keeps the coverage of
        // N(s) intact.
        std::vector<BiSet> cands = {x.meet(y), x.meet(y.complement()), y.meet(x.complement())};
        std::vector<BiSet> kept;
        for (const BiSet& c : cands) {
            if (c.is_trivial() || !holds_neighbor(c)) continue;
            std::vector<VertexId> wall = c.wall();
            if (wall.size() != 1 || wall[0] != t || f_value(h, p, c) > 2 * p.k)
                throw defect_error("uncrossing produced a non-critical bi-set");
            kept.push_back(c);
        }
        family.erase(family.begin() + yj);
        family.erase(family.begin() + xi);
        family.insert(family.begin() + xi, kept.begin(), kept.end());
        if (inner_total() >= before)
            throw defect_error("uncrossing failed to shrink the family");
    }

    std::sort(family.begin(), family.end(), [](const BiSet& a, const BiSet& b) {
        return a.inner_mask() != b.inner_mask() ? a.inner_mask() < b.inner_mask()
                                                : a.outer_mask() < b.outer_mask();
    });
    return family;
}

std::optional<Obstacle> find_obstacle(const MultiGraph& h, VertexId s, const ConnParams& p) {
    require_k2(p);
    if (!h.has_vertex(s)) throw precondition_error("designated vertex is not in the graph");
    if (h.multiplicity(s, s) > 0)
        throw precondition_error("obstacle search is undefined with loops at s");
    if (h.degree(s) % 2 != 0 || h.degree(s) < 4)
        throw precondition_error("obstacle search needs even d(s) >= 4");
    std::vector<VertexId> ground = minus_vertex(h.vertices(), s);
    std::vector<VertexId> nbrs = h.neighbors(s);

    for (VertexId t : nbrs) {
        if (h.multiplicity(s, t) % 2 == 0) continue;
        // An obstacle at t exists iff every other neighbor of s sits inside
        // some critical bi-set with wall {t}; collect one per uncovered
        // neighbor, then uncross the family into a disjoint one.
        std::vector<BiSet> family;
        bool failed = false;
        auto covered = [&](VertexId u) {
            for (const BiSet& x : family)
                if (x.in_inner(u)) return true;
            return false;
        };
        for (VertexId u : nbrs) {
            if (u == t || covered(u)) continue;
            std::optional<BiSet> member;
            for (VertexId z : ground) {
                if (z == t || z == u) continue;
                auto cut = detail::min_cut(h, {u}, {s, z}, {t}, p.k + 1);
                if (cut.value <= p.k) {
                    member = BiSet(ground, cut.source_side, with_vertex(cut.source_side, t));
                    break;
                }
            }
            if (!member) {
                failed = true;
                break;
            }
            family.push_back(std::move(*member));
        }
        if (failed) continue;
        Obstacle ob{t, uncross_family(h, s, p, t, std::move(family))};
        ObstacleCheck chk = verify_obstacle(h, s, p, ob);
        if (!chk.ok)
            throw defect_error("assembled obstacle failed verification: " + chk.first_failure);
        return ob;
    }
    return std::nullopt;
}

namespace {

// Recursive engine behind complete_splitting. Obstacles returned by solve()
// are always verified against the graph the call received.
struct Solver {
    VertexId s;
    ConnParams p;

    SplitOutcome solve(const MultiGraph& h) {
        int d = h.degree(s);
        assert(d % 2 == 0);
        SplitOutcome out;
        if (d == 0) {
            SplitTrace tr{s, {}, h};
            tr.final_graph.delete_vertex(s);
            out.trace = std::move(tr);
            return out;
        }
        std::vector<VertexId> nbrs = h.neighbors(s);
        if (d == 2) {
            SplitPair pr = nbrs.size() == 1 ? SplitPair{nbrs[0], nbrs[0]}
                                            : SplitPair{nbrs[0], nbrs[1]};
            if (is_admissible(h, s, p, pr)) {
                SplitTrace tr{s, {pr}, split_pair(h, s, pr)};
                tr.final_graph.delete_vertex(s);
                out.trace = std::move(tr);
                return out;
            }
            auto blk = find_blocking_biset(h, s, p, pr);
            if (!blk)
                throw defect_error("pair reported non-admissible but no blocking bi-set found");
            out.blocked = std::move(*blk);
            return out;
        }

        std::optional<SplitPair> chosen;
        for (size_t i = 0; i < nbrs.size() && !chosen; ++i) {
            for (size_t j = i; j < nbrs.size() && !chosen; ++j) {
                if (i == j && h.multiplicity(s, nbrs[i]) < 2) continue;
                SplitPair pr{nbrs[i], nbrs[j]};
                if (is_admissible(h, s, p, pr)) chosen = pr;
            }
        }
        if (!chosen) {
            if (d != 4)
                throw defect_error("no admissible pair at degree " + std::to_string(d) +
                                   "; theory allows that only at degree 4");
            auto ob = find_obstacle(h, s, p);
            if (!ob) throw defect_error("no admissible pair and no obstacle at degree 4");
            out.obstacle = std::move(*ob);
            return out;
        }
        return recurse_after(h, *chosen);
    }

    SplitOutcome recurse_after(const MultiGraph& h, const SplitPair& pr) {
        MultiGraph h2 = split_pair(h, s, pr);
        SplitOutcome sub = solve(h2);
        if (sub.trace) {
            sub.trace->pairs.insert(sub.trace->pairs.begin(), pr);
            return sub;
        }
        if (sub.blocked) throw defect_error("blocked outcome surfaced below an admissible split");
        const Obstacle& ob = *sub.obstacle;
        VertexId t = ob.t;
        if (t != pr.u && t != pr.v) return foreign_obstacle(h, t, pr);

        if (pr.u == pr.v) return lift_after_double_split(h, ob);

        // The split moved two s-edges away from t's side and thereby created
        // the obstacle; splitting (st, st) instead is admissible.
        if (h.multiplicity(s, t) < 2)
            throw defect_error("obstacle hub lacks the parallel s-edges the theory promises");
        SplitPair both{t, t};
        if (!is_admissible(h, s, p, both))
            throw defect_error("the (st, st) recovery split is not admissible");
        SplitOutcome sub2 = solve(split_pair(h, s, both));
        if (sub2.trace) {
            sub2.trace->pairs.insert(sub2.trace->pairs.begin(), both);
            return sub2;
        }
        if (sub2.blocked) throw defect_error("blocked outcome surfaced below an admissible split");
        if (sub2.obstacle->t == t) return lift_after_double_split(h, *sub2.obstacle);
        return foreign_obstacle(h, sub2.obstacle->t, both);
    }

    // An obstacle at t sitting below an (st, st) split transfers verbatim:
    // the removed edges never enter a bi-set with t on its wall, the new
    // loop enters nothing, and d(s, t) keeps its parity.
    SplitOutcome lift_after_double_split(const MultiGraph& h, const Obstacle& ob) {
        Obstacle lifted{ob.t, ob.members};
        ObstacleCheck chk = verify_obstacle(h, s, p, lifted);
        if (!chk.ok)
            throw defect_error("obstacle below an (st, st) split failed to lift: " +
                               chk.first_failure);
        SplitOutcome out;
        out.obstacle = std::move(lifted);
        return out;
    }

    // A split produced an obstacle elsewhere. Either h has an obstacle of
    // its own, or a complete splitting exists and backtracking finds it;
    // pairs through the foreign hub are the likeliest fix, so they go first.
    SplitOutcome foreign_obstacle(const MultiGraph& h, VertexId t, const SplitPair& avoid) {
        auto own = find_obstacle(h, s, p);
        if (own) {
            SplitOutcome out;
            out.obstacle = std::move(*own);
            return out;
        }
        std::vector<VertexId> nbrs = h.neighbors(s);
        std::vector<SplitPair> order;
        for (VertexId w : nbrs) {
            if (w == t && h.multiplicity(s, t) < 2) continue;
            order.push_back({std::min(t, w), std::max(t, w)});
        }
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i; j < nbrs.size(); ++j) {
                if (nbrs[i] == t || nbrs[j] == t) continue;
                if (i == j && h.multiplicity(s, nbrs[i]) < 2) continue;
                order.push_back({nbrs[i], nbrs[j]});
            }
        }
        for (const SplitPair& pr : order) {
            if (pr.u == avoid.u && pr.v == avoid.v) continue;  // known to fail
            if (!is_admissible(h, s, p, pr)) continue;
            MultiGraph h2 = split_pair(h, s, pr);
            SplitOutcome sub = solve(h2);
            if (sub.trace) {
                sub.trace->pairs.insert(sub.trace->pairs.begin(), pr);
                return sub;
            }
            if (sub.blocked)
                throw defect_error("blocked outcome surfaced below an admissible split");
            // A verified obstacle below: that branch admits no completion.
        }
        throw defect_error("no branch completes although the graph has no obstacle");
    }
};

}  // namespace

SplitOutcome complete_splitting(const MultiGraph& h, VertexId s, const ConnParams& p) {
    require_k2(p);
    if (!h.has_vertex(s)) throw precondition_error("designated vertex is not in the graph");
    if (h.multiplicity(s, s) > 0)
        throw precondition_error("complete splitting is undefined with loops at s");
    if (h.degree(s) % 2 != 0)
        throw precondition_error("complete splitting needs even degree at s");
    if (!check_in_V(h, s, p).ok)
        throw precondition_error("the graph is not (2k,k)-connected in V");

    Solver solver{s, p};
    SplitOutcome out = solver.solve(h);
    if (out.trace) {
        assert(static_cast<int>(out.trace->pairs.size()) * 2 == h.degree(s));
        if (!check(out.trace->final_graph, p).ok)
            throw defect_error("complete splitting produced a graph that fails verification");
    }
    return out;
}

}  // namespace conn2k
