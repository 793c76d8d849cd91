#include "kcut/report.hpp"

namespace kcut {

namespace {

Report vertex_list_json(const std::vector<VertexId>& vs) {
  Report arr = Report::array();
  for (VertexId v : vs) arr.push_back(v + 1);
  return arr;
}

Report assignment_json(const std::vector<int>& assignment) {
  Report arr = Report::array();
  for (int part : assignment) arr.push_back(part + 1);
  return arr;
}

std::string gamma_star_str(const std::optional<Weight>& gamma_star) {
  return gamma_star ? rational_str(*gamma_star) : "inf";
}

}  // namespace

Report edge_list_json(const Instance& inst, const EdgeSet& es) {
  Report arr = Report::array();
  for (EdgeId e : es) {
    const Edge& edge = inst.edge(e);
    arr.push_back(Report::array({edge.u + 1, edge.v + 1, rational_str(edge.w)}));
  }
  return arr;
}

Report optimum_section(const ExactResult& exact) {
  Report section;
  section["weight"] = rational_str(exact.optimum_weight);
  section["assignment"] = assignment_json(exact.canonical().assignment);
  return section;
}

Report iso_section(const Instance& inst, const IsoApproxSolution& iso) {
  Report section;
  Report cuts = Report::array();
  for (const IsolatingCut& cut : iso.cuts) {
    Report entry;
    entry["terminal"] = cut.terminal_index + 1;
    entry["source_set"] = vertex_list_json(cut.source_set);
    entry["cut_edges"] = edge_list_json(inst, cut.cut_edges);
    entry["weight"] = rational_str(cut.weight);
    cuts.push_back(std::move(entry));
  }
  section["cuts"] = std::move(cuts);
  section["dropped_terminal"] = iso.dropped_index + 1;
  section["e_iso"] = edge_list_json(inst, iso.e_iso);
  section["weight"] = rational_str(iso.weight);
  return section;
}

Report stability_section(const Instance& inst, const StabilityReport& report) {
  Report section;
  section["gamma_star"] = gamma_star_str(report.gamma_star);
  if (report.witness) {
    section["witness_cut"] = edge_list_json(inst, report.witness->cut_edges);
  } else {
    section["witness_cut"] = nullptr;
  }
  section["optima_count"] = report.optima_count;
  return section;
}

Report audit_json(const TheoremAudit& audit) {
  Report doc;
  doc["audit"] = audit.theorem;
  doc["instance"] = audit.instance_id;
  if (!audit.error.empty()) {
    doc["error"] = audit.error;
    doc["pass"] = false;
    return doc;
  }
  if (audit.params) {
    doc["k"] = audit.params->k;
    doc["eps"] = rational_str(audit.params->eps);
    Report params;
    params["a"] = rational_str(audit.params->a);
    params["b"] = rational_str(audit.params->b);
    params["c"] = rational_str(audit.params->c);
    doc["params"] = std::move(params);
  }
  doc["gamma_star"] = gamma_star_str(audit.gamma_star);
  doc["optima_count"] = audit.optima_count;
  if (audit.theorem == "theorem1") doc["partition_unique"] = audit.partition_unique;
  doc["premise_holds"] = audit.premise_holds;
  doc["conclusion_holds"] = audit.conclusion_holds;
  doc["pass"] = audit.pass;
  if (!audit.details.empty()) {
    Report terminals = Report::array();
    for (const TerminalDetail& detail : audit.details) {
      Report entry;
      entry["terminal"] = detail.terminal;
      entry["isolating_source_set"] = vertex_list_json(detail.isolating_source);
      entry["optimal_source_set"] = vertex_list_json(detail.optimal_source);
      entry["equal"] = detail.equal;
      entry["contained"] = detail.contained;
      terminals.push_back(std::move(entry));
    }
    doc["terminals"] = std::move(terminals);
  }
  if (!audit.checks.empty()) {
    Report checks = Report::array();
    for (const TheoremAudit::Check& check : audit.checks) {
      Report entry;
      entry["name"] = check.name;
      entry["pass"] = check.pass;
      entry["skipped"] = check.skipped;
      entry["detail"] = check.detail;
      checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
  }
  return doc;
}

Report sweep_json(const SweepReport& report) {
  Report doc;
  Report params;
  params["count"] = report.options.count;
  params["n"] = report.options.base.n;
  params["k"] = report.options.base.k;
  params["prob"] = rational_str(report.options.base.edge_prob);
  params["wmin"] = rational_str(report.options.base.wmin);
  params["wmax"] = rational_str(report.options.base.wmax);
  params["seed"] = report.options.base.seed;
  params["budget"] = report.options.budget;
  doc["sweep"] = std::move(params);

  Report summary;
  summary["instances"] = report.instances;
  summary["errors"] = report.errors;
  summary["premise_met"] = report.premise_met;
  summary["implication_failures"] = report.implication_failures;
  summary["approx_bound_violations"] = report.approx_bound_violations;
  summary["containment_violations"] = report.containment_violations;
  if (report.max_iso_ratio) {
    summary["max_iso_ratio"] = rational_str(*report.max_iso_ratio);
  } else {
    summary["max_iso_ratio"] = nullptr;
  }
  doc["summary"] = std::move(summary);

  Report records = Report::array();
  for (const SweepInstanceRecord& rec : report.records) {
    Report entry;
    entry["id"] = rec.id;
    entry["seed"] = rec.seed;
    if (!rec.error.empty()) {
      entry["error"] = rec.error;
      records.push_back(std::move(entry));
      continue;
    }
    entry["gamma_star"] = gamma_star_str(rec.gamma_star);
    entry["optima_count"] = rec.optima_count;
    entry["premise"] = rec.premise;
    entry["conclusion"] = rec.conclusion;
    entry["pass"] = rec.pass;
    entry["opt_weight"] = rational_str(rec.opt_weight);
    entry["iso_weight"] = rational_str(rec.iso_weight);
    entry["iso_ratio"] = rational_str(rec.iso_ratio);
    entry["approx_bound_ok"] = rec.approx_bound_ok;
    entry["containment_ok"] = rec.containment_ok;
    records.push_back(std::move(entry));
  }
  doc["instances"] = std::move(records);
  return doc;
}

}  // namespace kcut
