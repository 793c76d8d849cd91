#include "kcut/exact.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "kcut/detail/assignment_fold.hpp"

namespace kcut {

namespace detail {

std::vector<VertexId> free_vertices(const Instance& inst) {
  std::vector<VertexId> free;
  free.reserve(static_cast<size_t>(inst.vertex_count() - inst.terminal_count()));
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    if (inst.terminal_index(v) == -1) free.push_back(v);
  }
  return free;
}

std::uint64_t assignment_space_size(std::uint64_t k, std::uint64_t f) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < f; ++i) {
    if (total > (std::uint64_t{1} << 62) / k) {
      throw BudgetError("assignment space k^(n-k) exceeds the scan limit");
    }
    total *= k;
  }
  return total;
}

void check_budget(const Instance& inst, int budget) {
  const int free = inst.vertex_count() - inst.terminal_count();
  if (budget < 0) budget = 0;
  if (free > budget) {
    throw BudgetError("instance has " + std::to_string(free) +
                      " free vertices, exceeding the oracle budget of " + std::to_string(budget));
  }
  assignment_space_size(static_cast<std::uint64_t>(inst.terminal_count()),
                        static_cast<std::uint64_t>(free));
}

}  // namespace detail

namespace {

struct SolveAcc {
  std::optional<Weight> best;
  // Distinct optimal cut sets -> first assignment in scan order.
  std::map<EdgeSet, std::vector<int>> cuts;
  std::uint64_t scanned = 0;
  std::uint64_t best_hits = 0;  // assignments attaining best
};

}  // namespace

ExactResult solve_exact(const Instance& inst, const SolveOptions& opts) {
  detail::check_budget(inst, opts.budget);
  const auto& edges = inst.edges();

  auto visit = [&edges](SolveAcc& acc, const std::vector<int>& assign) {
    ++acc.scanned;
    EdgeSet cut;
    Weight w = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      const Edge& edge = edges[static_cast<size_t>(e)];
      if (assign[static_cast<size_t>(edge.u)] != assign[static_cast<size_t>(edge.v)]) {
        cut.push_back(e);
        w += edge.w;
      }
    }
    if (!acc.best || w < *acc.best) {
      acc.best = std::move(w);
      acc.cuts.clear();
      acc.cuts.emplace(std::move(cut), assign);
      acc.best_hits = 1;
    } else if (w == *acc.best) {
      acc.cuts.emplace(std::move(cut), assign);  // keeps the first on repeats
      ++acc.best_hits;
    }
  };
  auto merge = [](SolveAcc& into, SolveAcc&& from) {
    into.scanned += from.scanned;
    if (!from.best) return;
    if (!into.best || *from.best < *into.best) {
      into.best = std::move(from.best);
      into.cuts = std::move(from.cuts);
      into.best_hits = from.best_hits;
    } else if (*from.best == *into.best) {
      into.cuts.merge(std::move(from.cuts));  // existing keys win: earlier block first
      into.best_hits += from.best_hits;
    }
  };

  SolveAcc acc = detail::fold_assignments<SolveAcc>(inst, opts.jobs, visit, merge);

  ExactResult result;
  result.optimum_weight = *acc.best;
  result.enumerated_count = acc.scanned;
  result.optimal_assignment_count = acc.best_hits;
  result.optima.reserve(acc.cuts.size());
  for (auto& [cut, assign] : acc.cuts) {
    result.optima.push_back(KCutSolution{assign, cut, result.optimum_weight});
  }
  return result;
}

void enumerate_feasible_cuts(const Instance& inst, int budget,
                             const std::function<void(const KCutSolution&)>& yield) {
  detail::check_budget(inst, budget);
  const auto& edges = inst.edges();

  struct StreamAcc {
    std::set<EdgeSet> seen;
  };
  auto visit = [&edges, &yield](StreamAcc& acc, const std::vector<int>& assign) {
    EdgeSet cut;
    Weight w = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      const Edge& edge = edges[static_cast<size_t>(e)];
      if (assign[static_cast<size_t>(edge.u)] != assign[static_cast<size_t>(edge.v)]) {
        cut.push_back(e);
        w += edge.w;
      }
    }
    if (acc.seen.insert(cut).second) {
      yield(KCutSolution{assign, std::move(cut), std::move(w)});
    }
  };
  auto merge = [](StreamAcc&, StreamAcc&&) {};
  detail::fold_assignments<StreamAcc>(inst, /*jobs=*/1, visit, merge);
}

}  // namespace kcut
