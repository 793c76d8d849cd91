#include "kcut/isolating.hpp"

#include <cassert>
#include <utility>

#include "kcut/errors.hpp"
#include "kcut/mincut.hpp"

namespace kcut {

IsolatingCut isolating_cut(const Instance& inst, int terminal_index) {
  const int k = inst.terminal_count();
  if (terminal_index < 0 || terminal_index >= k) throw InputError("terminal index out of range");

  std::vector<VertexId> sources{inst.terminal(terminal_index)};
  std::vector<VertexId> sinks;
  sinks.reserve(static_cast<size_t>(k - 1));
  for (int i = 0; i < k; ++i) {
    if (i != terminal_index) sinks.push_back(inst.terminal(i));
  }

  StCut cut = min_st_cut(inst, sources, sinks);
  return IsolatingCut{terminal_index, std::move(cut.source_side), std::move(cut.cut_edges),
                      std::move(cut.weight)};
}

IsoApproxSolution iso_union_approx(const Instance& inst) {
  const int k = inst.terminal_count();

  IsoApproxSolution sol;
  sol.cuts.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) sol.cuts.push_back(isolating_cut(inst, i));

  // Ties drop the largest terminal index, for reproducible reports.
  sol.dropped_index = 0;
  for (int i = 1; i < k; ++i) {
    if (sol.cuts[static_cast<size_t>(i)].weight >= sol.cuts[static_cast<size_t>(sol.dropped_index)].weight) {
      sol.dropped_index = i;
    }
  }

  for (int i = 0; i < k; ++i) {
    if (i == sol.dropped_index) continue;
    sol.e_iso = edge_set_union(sol.e_iso, sol.cuts[static_cast<size_t>(i)].cut_edges);
  }
  sol.weight = cut_weight(inst, sol.e_iso);
  // Any k-1 isolating cuts already separate every terminal pair.
  assert(is_feasible_cut(inst, sol.e_iso));
  return sol;
}

}  // namespace kcut
