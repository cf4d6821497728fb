#pragma once

#include <vector>

#include "conn2k/multigraph.hpp"

namespace conn2k::detail {

struct CutResult {
    int value;                          // min(max-flow, limit)
    std::vector<VertexId> source_side;  // minimal source side; filled only when value < limit
};

// Max-flow between merged terminal groups after deleting the `removed`
// vertices. Parallel edges carry unit capacity each; loops are ignored.
// Augmentation stops once `limit` is reached, so a return value equal to
// `limit` means "at least limit".
CutResult min_cut(const MultiGraph& g, const std::vector<VertexId>& sources,
                  const std::vector<VertexId>& sinks, const std::vector<VertexId>& removed,
                  int limit);

}  // namespace conn2k::detail
