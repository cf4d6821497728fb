#include <doctest.h>

#include <random>

#include "conn2k/augmentation.hpp"
#include "conn2k/construction.hpp"
#include "conn2k/errors.hpp"
#include "helpers.hpp"

using namespace conn2k;
using testutil::load_fixture;

TEST_CASE("the minimal extension of a triangle doubles every corner") {
    MultiGraph g = load_fixture("triangle.txt");
    Extension ext = minimal_extension(g, ConnParams{2});
    CHECK(ext.s == 3);
    CHECK(ext.host.degree(ext.s) == 6);
    for (VertexId v : {0, 1, 2}) CHECK(ext.host.multiplicity(ext.s, v) == 2);
    CHECK(check_in_V(ext.host, ext.s, ConnParams{2}).ok);

    // inclusion-minimal: no single s-edge can go
    for (const Edge& e : ext.host.edges()) {
        if (e.u != ext.s && e.v != ext.s) continue;
        MultiGraph trimmed = ext.host;
        trimmed.remove_edge(e.id);
        CHECK_FALSE(check_in_V(trimmed, ext.s, ConnParams{2}).ok);
    }
}

TEST_CASE("an already connected graph gets the empty extension") {
    MultiGraph g = k_K3(ConnParams{2});
    Extension ext = minimal_extension(g, ConnParams{2});
    CHECK(ext.host.degree(ext.s) == 0);

    AugmentationResult res = augment(g, ConnParams{2});
    CHECK(res.added_edges.empty());
    CHECK(res.certificate.value == 0);
    CHECK(res.certificate.exhaustive);
    CHECK(res.certificate.members.empty());
    CHECK(res.augmented == g);
}

TEST_CASE("augmenting a triangle to (4,2)-connected takes exactly 3 edges") {
    MultiGraph g = load_fixture("triangle.txt");
    AugmentationResult res = augment(g, ConnParams{2});
    REQUIRE(res.added_edges.size() == 3);
    CHECK(res.added_edges[0].u == 0);
    CHECK(res.added_edges[0].v == 1);
    CHECK(res.added_edges[1].u == 0);
    CHECK(res.added_edges[1].v == 2);
    CHECK(res.added_edges[2].u == 1);
    CHECK(res.added_edges[2].v == 2);
    CHECK(res.augmented.same_edge_multiset(k_K3(ConnParams{2})));
    CHECK(check(res.augmented, ConnParams{2}).ok);

    CHECK(res.certificate.value == 6);
    CHECK(res.certificate.exhaustive);
    REQUIRE(res.certificate.members.size() == 3);
    for (const BiSet& m : res.certificate.members) {
        CHECK(m.inner_size() == 1);
        CHECK(m.wall_size() == 0);
    }
    CHECK(verify_certificate(g, ConnParams{2}, res.certificate) == 6);
}

TEST_CASE("one missing parallel edge costs one added edge") {
    MultiGraph g = k_K3(ConnParams{2});
    g.remove_edge(5);  // one 1-2 copy
    AugmentationResult res = augment(g, ConnParams{2});
    REQUIRE(res.added_edges.size() == 1);
    CHECK(res.added_edges[0].u == 1);
    CHECK(res.added_edges[0].v == 2);
    CHECK(res.augmented.same_edge_multiset(k_K3(ConnParams{2})));
    CHECK(res.certificate.value == 2);
}

TEST_CASE("certificate search maximizes the deficiency over disjoint families") {
    MultiGraph g = load_fixture("triangle.txt");
    CertificateFamily fam = certificate_bruteforce(g, ConnParams{2});
    CHECK(fam.value == 6);
    CHECK(fam.exhaustive);
    REQUIRE(fam.members.size() == 3);
    CHECK(fam.members[0].inner() == std::vector<VertexId>{0});
    CHECK(fam.members[1].inner() == std::vector<VertexId>{1});
    CHECK(fam.members[2].inner() == std::vector<VertexId>{2});

    // the empty graph on 8 vertices exceeds the default cap but not the raised one
    MultiGraph empty8(8);
    CHECK_THROWS_AS((void)certificate_bruteforce(empty8, ConnParams{2}), precondition_error);
    CertificateFamily big = certificate_bruteforce(empty8, ConnParams{2}, 8);
    CHECK(big.value == 32);  // eight isolated vertices, deficiency 4 each
}

TEST_CASE("verify_certificate validates family shape") {
    MultiGraph g = load_fixture("triangle.txt");
    const ConnParams p{2};
    const std::vector<VertexId> V{0, 1, 2};
    CertificateFamily ok{{BiSet(V, {0}, {0}), BiSet(V, {1}, {1})}, 0, false};
    CHECK(verify_certificate(g, p, ok) == 4);

    CertificateFamily overlap{{BiSet(V, {0, 1}, {0, 1}), BiSet(V, {1}, {1})}, 0, false};
    CHECK_THROWS_AS((void)verify_certificate(g, p, overlap), precondition_error);

    CertificateFamily trivial{{BiSet(V, {}, {0})}, 0, false};
    CHECK_THROWS_AS((void)verify_certificate(g, p, trivial), precondition_error);

    CertificateFamily alien{{BiSet({0, 1, 2, 3}, {0}, {0})}, 0, false};
    CHECK_THROWS_AS((void)verify_certificate(g, p, alien), precondition_error);

    // deficiencies clip at zero: an over-satisfied member contributes nothing
    MultiGraph rich = k_K3(ConnParams{2});
    CertificateFamily sat{{BiSet(V, {0}, {0})}, 0, false};
    CHECK(verify_certificate(rich, p, sat) == 0);
}

TEST_CASE("augmentation output is internally consistent on random graphs") {
    std::mt19937_64 rng(1234);
    const ConnParams p{2};
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + testutil::below(rng, 3);
        MultiGraph g = testutil::random_multigraph(rng, n, 8);
        AugmentationResult res = augment(g, p);
        CHECK(check_bruteforce(res.augmented, p).ok);
        CHECK(res.added_edges.size() == (res.certificate.value + 1) / 2);
        CHECK(res.certificate.exhaustive);
        CHECK(verify_certificate(g, p, res.certificate) == res.certificate.value);
        CHECK(minimal_extension(g, p).host.degree(n) == res.certificate.value);
        CHECK(certificate_bruteforce(g, p).value == res.certificate.value);

        // the result really is a multiset extension of the input
        for (const Edge& e : g.edges()) CHECK(res.augmented.has_edge(e.id));
        CHECK(res.augmented.num_edges() == g.num_edges() + (int)res.added_edges.size());
    }
}

TEST_CASE("augmentation preconditions") {
    CHECK_THROWS_AS((void)augment(load_fixture("triangle.txt"), ConnParams{1}),
                    unsupported_k_error);
    CHECK_THROWS_AS((void)augment(MultiGraph(2), ConnParams{2}), precondition_error);
    CHECK_THROWS_AS((void)minimal_extension(MultiGraph(2), ConnParams{2}), precondition_error);
}
