#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

struct SolveOptions {
  int budget = 16;  // max free (non-terminal) vertices the oracle will scan
  int jobs = 1;     // worker threads; the result never depends on this
};

// Ground truth from enumerating all k^(n-k) terminal assignments.
// Partition-induced cuts suffice: any feasible edge set contains one with
// no larger weight and no larger stability ratio, so nothing else is ever
// enumerated.
struct ExactResult {
  Weight optimum_weight;
  // Every distinct minimum-weight cut edge set, in lexicographic edge-set
  // order; assignments are the first ones encountered in scan order.
  std::vector<KCutSolution> optima;
  std::uint64_t enumerated_count = 0;           // assignments scanned, k^(n-k)
  std::uint64_t optimal_assignment_count = 0;   // assignments attaining the optimum

  bool unique() const { return optima.size() == 1; }
  // The unique optimal edge set may still be induced by several assignments:
  // an edgeless terminal-free component can sit in any part without touching
  // the cut. Only when this returns true do the optimal source sets S_i*
  // exist as well-defined objects.
  bool partition_unique() const { return optima.size() == 1 && optimal_assignment_count == 1; }
  // Deterministic representative: the lexicographically smallest cut set.
  const KCutSolution& canonical() const { return optima.front(); }
};

// Throws BudgetError instead of silently approximating when n-k exceeds
// opts.budget.
ExactResult solve_exact(const Instance& inst, const SolveOptions& opts = {});

// Streams every distinct partition-induced cut edge set exactly once, in
// first-encounter scan order.
void enumerate_feasible_cuts(const Instance& inst, int budget,
                             const std::function<void(const KCutSolution&)>& yield);

}  // namespace kcut
