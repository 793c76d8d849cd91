#include "kcut/stability.hpp"

#include <utility>

#include "kcut/detail/assignment_fold.hpp"
#include "kcut/detail/rng.hpp"
#include "kcut/errors.hpp"

namespace kcut {

namespace {

// Total weight of edges in `a` but not `b`; both sorted.
Weight difference_weight(const Instance& inst, const EdgeSet& a, const EdgeSet& b) {
  Weight total = 0;
  size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j == b.size() || a[i] < b[j]) {
      total += inst.edges()[static_cast<size_t>(a[i])].w;
      ++i;
    } else if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      ++j;
    }
  }
  return total;
}

struct RatioAcc {
  std::optional<Weight> ratio;
  EdgeSet cut;
  std::vector<int> assign;
};

}  // namespace

StabilityReport stability_factor(const Instance& inst, const ExactResult& exact,
                                 const SolveOptions& opts) {
  const EdgeSet& opt_cut = exact.canonical().cut_edges;
  const auto& edges = inst.edges();

  auto visit = [&](RatioAcc& acc, const std::vector<int>& assign) {
    EdgeSet cut;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
      const Edge& edge = edges[static_cast<size_t>(e)];
      if (assign[static_cast<size_t>(edge.u)] != assign[static_cast<size_t>(edge.v)]) {
        cut.push_back(e);
      }
    }
    if (cut == opt_cut) return;
    Weight opt_minus_alt = difference_weight(inst, opt_cut, cut);
    if (opt_minus_alt == 0) return;  // OPT subset of ALT: vacuous
    Weight alt_minus_opt = difference_weight(inst, cut, opt_cut);
    Weight ratio = alt_minus_opt / opt_minus_alt;
    if (!acc.ratio || ratio < *acc.ratio || (ratio == *acc.ratio && cut < acc.cut)) {
      acc.ratio = std::move(ratio);
      acc.cut = std::move(cut);
      acc.assign = assign;
    }
  };
  // Min by ratio, ties by lexicographically smallest witness cut set, so the
  // merge is order-insensitive and the report is identical for any jobs.
  auto merge = [](RatioAcc& into, RatioAcc&& from) {
    if (!from.ratio) return;
    if (!into.ratio || *from.ratio < *into.ratio ||
        (*from.ratio == *into.ratio && from.cut < into.cut)) {
      into = std::move(from);
    }
  };

  RatioAcc acc = detail::fold_assignments<RatioAcc>(inst, opts.jobs, visit, merge);

  StabilityReport report;
  report.optima_count = exact.optima.size();
  report.optimal_assignment_count = exact.optimal_assignment_count;
  report.opt = exact.canonical();
  if (acc.ratio) {
    report.gamma_star = std::move(*acc.ratio);
    Weight w = cut_weight(inst, acc.cut);
    report.witness = KCutSolution{std::move(acc.assign), std::move(acc.cut), std::move(w)};
  }
  return report;
}

StabilityReport stability_factor(const Instance& inst, const SolveOptions& opts) {
  return stability_factor(inst, solve_exact(inst, opts), opts);
}

bool stable_at(const StabilityReport& report, const Weight& gamma) {
  if (!(gamma > 1)) throw InputError("gamma must exceed 1");
  if (report.optima_count != 1) return false;
  return !report.gamma_star || gamma < *report.gamma_star;
}

bool is_gamma_stable(const Instance& inst, const Weight& gamma, const SolveOptions& opts) {
  if (!(gamma > 1)) throw InputError("gamma must exceed 1");
  return stable_at(stability_factor(inst, opts), gamma);
}

PerturbationSpec PerturbationSpec::identity(const Instance& inst, Weight gamma) {
  if (!(gamma >= 1)) throw InputError("gamma must be at least 1");
  PerturbationSpec spec;
  spec.gamma = std::move(gamma);
  spec.multipliers.assign(static_cast<size_t>(inst.edge_count()), Weight(1));
  return spec;
}

PerturbationSpec PerturbationSpec::worst_case(const Instance& inst, Weight gamma,
                                              const SolveOptions& opts) {
  if (!(gamma > 1)) throw InputError("gamma must exceed 1");
  ExactResult exact = solve_exact(inst, opts);
  PerturbationSpec spec = identity(inst, gamma);
  for (EdgeId e : exact.canonical().cut_edges) spec.multipliers[static_cast<size_t>(e)] = spec.gamma;
  return spec;
}

PerturbationSpec PerturbationSpec::random(const Instance& inst, Weight gamma, std::uint64_t seed) {
  if (!(gamma > 1)) throw InputError("gamma must exceed 1");
  PerturbationSpec spec;
  spec.gamma = std::move(gamma);
  std::mt19937_64 rng(seed);
  Weight span = (spec.gamma - 1) / 64;
  spec.multipliers.reserve(static_cast<size_t>(inst.edge_count()));
  for (int e = 0; e < inst.edge_count(); ++e) {
    Weight mult = 1 + Weight(static_cast<long>(detail::rand_below(rng, 65))) * span;
    spec.multipliers.push_back(std::move(mult));
  }
  return spec;
}

Instance apply_perturbation(const Instance& inst, const PerturbationSpec& spec) {
  if (!(spec.gamma >= 1)) throw InputError("gamma must be at least 1");
  if (static_cast<int>(spec.multipliers.size()) != inst.edge_count()) {
    throw InputError("multiplier list must cover every edge");
  }
  std::vector<Edge> edges;
  edges.reserve(spec.multipliers.size());
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    const Weight& mult = spec.multipliers[static_cast<size_t>(e)];
    if (mult < 1 || mult > spec.gamma) throw InputError("multiplier out of range [1, gamma]");
    const Edge& edge = inst.edges()[static_cast<size_t>(e)];
    Weight w = mult * edge.w;
    edges.push_back(Edge{edge.u, edge.v, std::move(w)});
  }
  return Instance(inst.vertex_count(), std::move(edges), inst.terminals());
}

}  // namespace kcut
