#pragma once

#include <json.hpp>

#include "kcut/exact.hpp"
#include "kcut/isolating.hpp"
#include "kcut/stability.hpp"
#include "kcut/verify.hpp"

namespace kcut {

// Machine-readable report documents. Every weight is an exact rational
// string ("p" or "p/q"); an infinite stability factor prints as "inf".
// ordered_json keeps insertion order, so identical inputs serialize to
// identical bytes.
using Report = nlohmann::ordered_json;

// [[u, v, "w"], ...] with 1-based endpoints.
Report edge_list_json(const Instance& inst, const EdgeSet& es);

// {"weight": ..., "assignment": [...]} with 1-based terminal indices.
Report optimum_section(const ExactResult& exact);

// Per-terminal source sets and cut edges plus the assembled approximation.
Report iso_section(const Instance& inst, const IsoApproxSolution& iso);

// {"gamma_star": ..., "witness_cut": ..., "optima_count": ...}
Report stability_section(const Instance& inst, const StabilityReport& report);

Report audit_json(const TheoremAudit& audit);

Report sweep_json(const SweepReport& report);

}  // namespace kcut
