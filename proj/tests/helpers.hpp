#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "conn2k/multigraph.hpp"

namespace testutil {

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(CONN2K_FIXTURES_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline conn2k::MultiGraph load_fixture(const std::string& name) {
    return conn2k::MultiGraph::parse(read_fixture(name));
}

// mt19937_64 is bit-exact everywhere; the modulo bias is irrelevant here.
inline int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

inline conn2k::MultiGraph random_multigraph(std::mt19937_64& rng, int n, int max_edges,
                                            bool loops = true) {
    conn2k::MultiGraph g(n);
    int m = below(rng, max_edges + 1);
    for (int i = 0; i < m; ++i) {
        conn2k::VertexId u = below(rng, n), v = below(rng, n);
        if (!loops && u == v) continue;
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace testutil
