#include <doctest.h>

#include <numeric>
#include <vector>

#include "conn2k/biset.hpp"
#include "conn2k/errors.hpp"

using namespace conn2k;

namespace {

const std::vector<VertexId> G4{0, 1, 2, 3};

// Every bi-set of a 4-element ground: outer mask, then inner submasks of it.
std::vector<BiSet> all_bisets() {
    std::vector<BiSet> out;
    for (uint64_t outer = 0; outer < 16; ++outer) {
        uint64_t inner = outer;
        while (true) {
            out.push_back(BiSet::from_masks(G4, inner, outer));
            if (inner == 0) break;
            inner = (inner - 1) & outer;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("construction validates membership and nesting") {
    BiSet x(G4, {1}, {1, 2});
    CHECK(x.inner() == std::vector<VertexId>{1});
    CHECK(x.outer() == std::vector<VertexId>{1, 2});
    CHECK(x.wall() == std::vector<VertexId>{2});
    CHECK(x.inner_size() == 1);
    CHECK(x.wall_size() == 1);
    CHECK(x.is_pair());
    CHECK_FALSE(x.is_set());

    CHECK_THROWS_AS(BiSet(G4, {5}, {5}), precondition_error);
    CHECK_THROWS_AS(BiSet(G4, {1}, {2}), precondition_error);  // inner not inside outer
    CHECK_THROWS_AS(BiSet::from_masks(G4, 0x10, 0x10), precondition_error);
    CHECK_THROWS_AS(BiSet::from_masks(G4, 3, 1), precondition_error);
    std::vector<VertexId> huge(65);
    std::iota(huge.begin(), huge.end(), 0);
    CHECK_THROWS_AS(BiSet(huge, {}, {}), precondition_error);

    // ground input may be unsorted with duplicates
    BiSet y({3, 0, 2, 1, 2}, {0, 3}, {0, 3});
    CHECK(y.ground() == G4);
    CHECK(y == BiSet(G4, {3, 0}, {3, 0}));
}

TEST_CASE("membership answers false outside the ground") {
    BiSet x(G4, {1}, {1, 2});
    CHECK(x.in_inner(1));
    CHECK(x.in_outer(2));
    CHECK(x.in_wall(2));
    CHECK_FALSE(x.in_inner(2));
    CHECK_FALSE(x.in_outer(0));
    CHECK_FALSE(x.in_inner(17));
    CHECK_FALSE(x.in_outer(17));
    CHECK_FALSE(x.in_wall(-1));
}

TEST_CASE("triviality: empty inner or full outer") {
    CHECK(BiSet(G4, {}, {}).is_trivial());
    CHECK(BiSet(G4, {}, {0, 1}).is_trivial());
    CHECK(BiSet(G4, {0}, G4).is_trivial());
    CHECK_FALSE(BiSet(G4, {0}, {0}).is_trivial());
    CHECK_FALSE(BiSet(G4, {0}, {0, 1, 2}).is_trivial());
}

TEST_CASE("operations across different grounds are rejected") {
    BiSet a(G4, {0}, {0});
    BiSet b({0, 1, 2}, {0}, {0});
    CHECK_THROWS_AS((void)a.meet(b), precondition_error);
    CHECK_THROWS_AS((void)a.join(b), precondition_error);
    CHECK_THROWS_AS((void)a.is_included(b), precondition_error);
    CHECK_THROWS_AS((void)a.innerly_disjoint(b), precondition_error);
    CHECK(a != b);
}

TEST_CASE("lattice laws hold for every bi-set pair of a 4-element ground") {
    // 3^4 = 81 bi-sets; check all 81 * 81 pairs exhaustively.
    const std::vector<BiSet> all = all_bisets();
    REQUIRE(all.size() == 81);
    for (const BiSet& x : all) {
        CHECK(x.complement().complement() == x);
        CHECK(x.meet(x) == x);
        CHECK(x.join(x) == x);
        CHECK(x.is_included(x));
        for (const BiSet& y : all) {
            const BiSet m = x.meet(y), j = x.join(y);
            CHECK(m.inner_mask() == (x.inner_mask() & y.inner_mask()));
            CHECK(m.outer_mask() == (x.outer_mask() & y.outer_mask()));
            CHECK(j.inner_mask() == (x.inner_mask() | y.inner_mask()));
            CHECK(j.outer_mask() == (x.outer_mask() | y.outer_mask()));
            CHECK(m.is_included(x));
            CHECK(x.is_included(j));

            // wall sizes are modular under meet and join
            CHECK(m.wall_size() + j.wall_size() == x.wall_size() + y.wall_size());

            // complement swaps and inverts the components: De Morgan both ways
            CHECK(m.complement() == x.complement().join(y.complement()));
            CHECK(j.complement() == x.complement().meet(y.complement()));

            CHECK(x.is_included(y) == (x.meet(y) == x));
            CHECK(x.is_included(y) == (x.join(y) == y));
            CHECK(x.innerly_disjoint(y) == (m.inner_size() == 0));
        }
    }
}

TEST_CASE("complement exchanges inner and outer complements") {
    BiSet x(G4, {0}, {0, 1});
    BiSet c = x.complement();
    CHECK(c.inner() == std::vector<VertexId>{2, 3});     // ground minus outer
    CHECK(c.outer() == std::vector<VertexId>{1, 2, 3});  // ground minus inner
    CHECK(c.wall() == x.wall());
    // non-trivial with proper outer stays non-trivial under complement
    CHECK_FALSE(c.is_trivial());
}
