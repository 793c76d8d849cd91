#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcut/exact.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph.hpp"
#include "kcut/stability.hpp"

namespace kcut {

struct TerminalDetail {
  int terminal = 0;                        // 1-based in reports
  std::vector<VertexId> isolating_source;  // Q_i
  std::vector<VertexId> optimal_source;    // S_i* of the canonical optimum
  bool equal = false;
  bool contained = false;  // Q_i subset of S_i*
};

// Executable statement of one theorem over one instance. The audit never
// assumes the claim is true: premise_holds && !conclusion_holds is reported
// as a failure, not suppressed.
struct TheoremAudit {
  std::string theorem;  // "theorem1" | "theorem2"
  std::string instance_id;
  std::string error;  // nonempty: construction/budget error surfaced here

  std::optional<Weight> gamma_star;
  std::uint64_t optima_count = 0;
  bool partition_unique = false;  // optimal source sets well defined
  bool premise_holds = false;
  bool conclusion_holds = false;
  bool pass = false;  // theorem1: premise implies conclusion; theorem2: all checks

  std::vector<TerminalDetail> details;

  struct Check {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
  };
  std::vector<Check> checks;             // theorem2 only
  std::optional<TightParams> params;     // theorem2 only
};

// Premise: unique optimum (as a cut AND as a partition, so the S_i* are
// well defined) with gamma_star > k-1 strictly. Conclusion: every isolating
// source set equals the optimum's source set. Vacuous passes keep full
// per-terminal details.
TheoremAudit verify_theorem1(const Instance& inst, const SolveOptions& opts = {},
                             const std::string& instance_id = "instance");
// Variant reusing a precomputed stability report for the same instance.
TheoremAudit verify_theorem1(const Instance& inst, const StabilityReport& report,
                             const std::string& instance_id = "instance");

// Builds G_k(eps) and checks: (i) every isolating source set is the bare
// terminal, (ii) the paired partition {t_i, s_i} has weight
// C(k,2)*a + k*(k-1)*c and (budget permitting) is the unique optimum,
// (iii) the instance is (k-1-eps)-stable, (iv) the isolating-cut union
// approximation is strictly heavier than the optimum. When the oracle
// budget is exceeded, (iii) is skipped with notice and (ii)/(iv) fall back
// to the closed-form optimum value.
TheoremAudit verify_theorem2(int k, const Weight& eps, const SolveOptions& opts = {});

struct SweepOptions {
  std::uint64_t count = 0;
  RandomGraphSpec base;  // per-instance seed = base.seed + index
  int budget = 16;
  int jobs = 1;  // instances audited in parallel; report independent of jobs
};

struct SweepInstanceRecord {
  std::string id;
  std::uint64_t seed = 0;
  std::string error;  // generation failed; everything else skipped
  std::optional<Weight> gamma_star;
  std::uint64_t optima_count = 0;
  bool premise = false;
  bool conclusion = false;
  bool pass = false;
  Weight opt_weight;
  Weight iso_weight;
  Weight iso_ratio;       // iso_weight / opt_weight
  bool approx_bound_ok = false;  // iso_ratio <= 2 - 2/k
  bool containment_ok = false;  // every Q_i inside the i-th part of some optimum
};

struct SweepReport {
  SweepOptions options;
  std::uint64_t instances = 0;
  std::uint64_t errors = 0;
  std::uint64_t premise_met = 0;
  std::uint64_t implication_failures = 0;
  std::uint64_t approx_bound_violations = 0;
  std::uint64_t containment_violations = 0;
  std::optional<Weight> max_iso_ratio;
  std::vector<SweepInstanceRecord> records;

  bool clean() const {
    return implication_failures == 0 && approx_bound_violations == 0 &&
           containment_violations == 0;
  }
};

SweepReport sweep(const SweepOptions& opts);

}  // namespace kcut
