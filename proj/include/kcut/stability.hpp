#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcut/exact.hpp"
#include "kcut/graph.hpp"

namespace kcut {

// Exact stability analysis of an instance.
//
// gamma_star is the minimum, over every partition-induced alternative cut
// ALT != OPT with w(OPT \ ALT) > 0, of the ratio w(ALT \ OPT) / w(OPT \ ALT).
// Alternatives with OPT a strict subset are skipped (their ratio is +inf and
// the stability inequality is vacuous); when nothing remains, gamma_star is
// +infinity, encoded as nullopt.
//
// The instance is gamma-stable exactly for 1 < gamma < gamma_star with a
// unique optimum; the threshold itself is NOT stable (the inequality is
// strict). With multiple optima some ratio equals 1, so gamma_star <= 1 and
// the instance is stable for no gamma > 1.
struct StabilityReport {
  std::optional<Weight> gamma_star;      // nullopt = +infinity
  std::optional<KCutSolution> witness;   // alternative attaining gamma_star
  std::uint64_t optima_count = 0;        // distinct optimal cut edge sets
  std::uint64_t optimal_assignment_count = 0;  // assignments attaining the optimum
  KCutSolution opt;                      // canonical optimum (lex-smallest cut set)

  // The optimal source sets are well defined (no edgeless component floating
  // between parts of the single optimal cut).
  bool partition_unique() const { return optima_count == 1 && optimal_assignment_count == 1; }
};

StabilityReport stability_factor(const Instance& inst, const SolveOptions& opts = {});
// Variant reusing an already computed oracle result for the same instance.
StabilityReport stability_factor(const Instance& inst, const ExactResult& exact,
                                 const SolveOptions& opts = {});

// Strict threshold test on a finished report. gamma must
// exceed 1.
bool stable_at(const StabilityReport& report, const Weight& gamma);

// True iff the optimum is unique and gamma < gamma_star (strict).
bool is_gamma_stable(const Instance& inst, const Weight& gamma, const SolveOptions& opts = {});

// Edge reweighting with per-edge multipliers in [1, gamma].
struct PerturbationSpec {
  Weight gamma;
  std::vector<Weight> multipliers;  // one per edge id

  static PerturbationSpec identity(const Instance& inst, Weight gamma);
  // The adversarial choice: multiplier gamma exactly on the canonical
  // optimum's cut edges, 1 elsewhere.
  static PerturbationSpec worst_case(const Instance& inst, Weight gamma,
                                     const SolveOptions& opts = {});
  // Seeded multipliers 1 + j*(gamma-1)/64, j uniform in [0, 64].
  static PerturbationSpec random(const Instance& inst, Weight gamma, std::uint64_t seed);
};

// New instance with w'(e) = multiplier(e) * w(e). Edge ids are preserved.
Instance apply_perturbation(const Instance& inst, const PerturbationSpec& spec);

}  // namespace kcut
