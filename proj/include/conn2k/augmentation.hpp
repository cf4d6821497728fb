#pragma once

#include <vector>

#include "conn2k/connectivity.hpp"
#include "conn2k/multigraph.hpp"
#include "conn2k/splitting.hpp"

namespace conn2k {

// g plus an external vertex s wired so the result is (2k,k)-connected in V.
struct Extension {
    MultiGraph host;
    VertexId s;
};

// Pairwise innerly-disjoint non-trivial bi-sets, certifying that any
// augmentation needs at least ceil(value / 2) new edges: value is the total
// deficiency sum(2k - f(x)) over the members. With exhaustive set, value is
// the maximum over all such families.
struct CertificateFamily {
    std::vector<BiSet> members;
    int value = 0;
    bool exhaustive = false;
};

struct AugmentationResult {
    int k = 0;
    std::vector<SplitPair> added_edges;
    CertificateFamily certificate;
    MultiGraph augmented;
};

// Attach a new vertex s with 2k parallel edges to every vertex, then greedily
// delete s-edges in ascending id order while the result stays (2k,k)-connected
// in V. Any inclusion-minimal edge set reaches the minimum d(s), so one pass
// is optimal. Requires |V| >= 3.
Extension minimal_extension(const MultiGraph& g, const ConnParams& p);

// Exact maximum-deficiency family by dynamic programming over subsets of V:
// deficient bi-sets have wall size <= 1, and only inner sets must be
// disjoint. Capped at max_vertices because the table is exponential.
CertificateFamily certificate_bruteforce(const MultiGraph& g, const ConnParams& p,
                                         int max_vertices = 7);

// Total deficiency of a claimed family, validating its shape (members are
// non-trivial bi-sets of V, pairwise innerly disjoint).
int verify_certificate(const MultiGraph& g, const ConnParams& p, const CertificateFamily& fam);

// Add the minimum number of edges making g (2k,k)-connected: build the
// minimal extension, add one parity edge if d(s) is odd, split everything
// off. The certificate has value d(s), matching ceil(d(s) / 2) added edges;
// it is exhaustive (with members) when |V| is small enough to search.
// Requires |V| >= 3 and k >= 2.
AugmentationResult augment(const MultiGraph& g, const ConnParams& p);

}  // namespace conn2k
