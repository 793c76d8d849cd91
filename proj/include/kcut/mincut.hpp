#pragma once

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// A minimum cut separating a source set from a sink set.
//
// source_side is the MINIMAL minimum-cut source side: the set of vertices
// reachable from the (super-)source in the residual network after a maximum
// flow. It is contained in the source side of every other minimum cut for
// the same query. This minimality is a hard contract, not an implementation
// detail: isolating-cut source sets rely on it.
struct StCut {
  std::vector<VertexId> source_side;  // sorted, contains all sources
  EdgeSet cut_edges;                  // edges with exactly one endpoint in source_side
  Weight weight;                      // == max-flow value == cut_weight(cut_edges)
};

// Exact-rational max-flow/min-cut between contracted super-source and
// super-sink. Sources and sinks must be nonempty and disjoint; the instance
// itself is untouched. Deterministic: identical inputs yield identical cuts.
StCut min_st_cut(const Instance& inst, const std::vector<VertexId>& sources,
                 const std::vector<VertexId>& sinks);

}  // namespace kcut
