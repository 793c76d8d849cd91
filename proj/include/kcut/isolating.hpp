#pragma once

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// Minimum cut separating terminal t_i from all other terminals. The source
// set is source-minimal (see mincut.hpp), so it is contained in the i-th
// part of some optimal k-terminal cut.
struct IsolatingCut {
  int terminal_index;                 // 0-based i
  std::vector<VertexId> source_set;   // Q: t_i plus whatever stays with it
  EdgeSet cut_edges;                  // E_i: boundary of Q
  Weight weight;
};

// Union of all isolating cut edge sets except the heaviest one, a feasible
// (2 - 2/k)-approximation of the optimal k-terminal cut.
struct IsoApproxSolution {
  std::vector<IsolatingCut> cuts;  // one per terminal, index order
  int dropped_index;               // max weight; ties drop the largest index
  EdgeSet e_iso;                   // union of cut_edges over i != dropped_index
  Weight weight;                   // cut_weight(e_iso); shared edges count once
};

IsolatingCut isolating_cut(const Instance& inst, int terminal_index);

IsoApproxSolution iso_union_approx(const Instance& inst);

}  // namespace kcut
