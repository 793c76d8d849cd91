// kcut - exact and approximate k-terminal (multiway) cut toolkit.
//
// Reports go to standard output, instances to files (or stdout with -o -),
// diagnostics to standard error. Exit codes: 0 success/verified, 1 property
// violation or audit failure, 2 input/parse error, 3 oracle budget refusal.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "kcut/errors.hpp"
#include "kcut/exact.hpp"
#include "kcut/generators.hpp"
#include "kcut/instance_io.hpp"
#include "kcut/isolating.hpp"
#include "kcut/report.hpp"
#include "kcut/stability.hpp"
#include "kcut/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Cli {
  // solve
  std::string solve_method = "exact";
  std::string solve_file;
  // stability
  std::string stability_file;
  // generate tight
  int tight_k = 3;
  std::string tight_eps = "1/2";
  std::string tight_out = "-";
  // generate random
  int rnd_n = 8;
  int rnd_k = 3;
  std::string rnd_prob = "1/2";
  std::string rnd_wmin = "1";
  std::string rnd_wmax = "10";
  std::uint64_t rnd_seed = 1;
  std::string rnd_out = "-";
  // perturb
  std::string perturb_gamma = "2";
  std::string perturb_mode = "worst";
  std::uint64_t perturb_seed = 1;
  std::string perturb_file;
  std::string perturb_out = "-";
  // verify theorem1 / theorem2
  std::string vt1_file;
  int vt2_k = 3;
  std::string vt2_eps = "1/2";
  // sweep
  std::uint64_t sweep_count = 100;
  int sweep_n = 7;
  int sweep_k = 3;
  std::string sweep_prob = "2/5";
  std::string sweep_wmin = "1";
  std::string sweep_wmax = "10";
  std::uint64_t sweep_seed = 1;

  int budget = 16;
  int jobs = 1;
  bool verbose = false;
};

void emit(const kcut::Report& report) { std::cout << report.dump(2) << '\n'; }

int run_solve(const Cli& cli) {
  kcut::Instance inst = kcut::load_instance_file(cli.solve_file);
  kcut::Report doc;
  if (cli.solve_method == "exact") {
    kcut::ExactResult exact = kcut::solve_exact(inst, {cli.budget, cli.jobs});
    if (cli.verbose) {
      std::cerr << "scanned " << exact.enumerated_count << " assignments, "
                << exact.optima.size() << " optimal cut set(s)\n";
    }
    doc["optimum"] = kcut::optimum_section(exact);
  } else if (cli.solve_method == "iso") {
    doc["iso"] = kcut::iso_section(inst, kcut::iso_union_approx(inst));
  } else {
    throw kcut::InputError("unknown solve method '" + cli.solve_method + "' (want iso or exact)");
  }
  emit(doc);
  return kExitOk;
}

int run_stability(const Cli& cli) {
  kcut::Instance inst = kcut::load_instance_file(cli.stability_file);
  kcut::SolveOptions opts{cli.budget, cli.jobs};
  kcut::ExactResult exact = kcut::solve_exact(inst, opts);
  kcut::StabilityReport report = kcut::stability_factor(inst, exact, opts);
  kcut::Report doc;
  doc["optimum"] = kcut::optimum_section(exact);
  doc["stability"] = kcut::stability_section(inst, report);
  emit(doc);
  return kExitOk;
}

int run_generate_tight(const Cli& cli) {
  kcut::Instance inst = kcut::tight_instance(cli.tight_k, kcut::parse_rational(cli.tight_eps, "eps"));
  kcut::write_instance_file(inst, cli.tight_out);
  return kExitOk;
}

int run_generate_random(const Cli& cli) {
  kcut::RandomGraphSpec spec;
  spec.n = cli.rnd_n;
  spec.k = cli.rnd_k;
  spec.edge_prob = kcut::parse_rational(cli.rnd_prob, "edge probability");
  spec.wmin = kcut::parse_rational(cli.rnd_wmin, "wmin");
  spec.wmax = kcut::parse_rational(cli.rnd_wmax, "wmax");
  spec.seed = cli.rnd_seed;
  kcut::write_instance_file(kcut::random_instance(spec), cli.rnd_out);
  return kExitOk;
}

int run_perturb(const Cli& cli) {
  kcut::Instance inst = kcut::load_instance_file(cli.perturb_file);
  kcut::Weight gamma = kcut::parse_rational(cli.perturb_gamma, "gamma");
  kcut::PerturbationSpec spec;
  if (cli.perturb_mode == "worst") {
    spec = kcut::PerturbationSpec::worst_case(inst, gamma, {cli.budget, cli.jobs});
  } else if (cli.perturb_mode == "random") {
    spec = kcut::PerturbationSpec::random(inst, gamma, cli.perturb_seed);
  } else {
    throw kcut::InputError("unknown perturbation mode '" + cli.perturb_mode +
                           "' (want worst or random)");
  }
  kcut::write_instance_file(kcut::apply_perturbation(inst, spec), cli.perturb_out);
  return kExitOk;
}

int run_verify_theorem1(const Cli& cli) {
  kcut::Instance inst = kcut::load_instance_file(cli.vt1_file);
  kcut::TheoremAudit audit =
      kcut::verify_theorem1(inst, kcut::SolveOptions{cli.budget, cli.jobs}, cli.vt1_file);
  emit(kcut::audit_json(audit));
  return audit.pass ? kExitOk : kExitViolation;
}

int run_verify_theorem2(const Cli& cli) {
  kcut::TheoremAudit audit = kcut::verify_theorem2(
      cli.vt2_k, kcut::parse_rational(cli.vt2_eps, "eps"), kcut::SolveOptions{cli.budget, cli.jobs});
  emit(kcut::audit_json(audit));
  if (!audit.error.empty()) return kExitInput;
  return audit.pass ? kExitOk : kExitViolation;
}

int run_sweep(const Cli& cli) {
  kcut::SweepOptions opts;
  opts.count = cli.sweep_count;
  opts.base.n = cli.sweep_n;
  opts.base.k = cli.sweep_k;
  opts.base.edge_prob = kcut::parse_rational(cli.sweep_prob, "edge probability");
  opts.base.wmin = kcut::parse_rational(cli.sweep_wmin, "wmin");
  opts.base.wmax = kcut::parse_rational(cli.sweep_wmax, "wmax");
  opts.base.seed = cli.sweep_seed;
  opts.budget = cli.budget;
  opts.jobs = cli.jobs;
  kcut::SweepReport report = kcut::sweep(opts);
  if (cli.verbose) {
    std::cerr << report.premise_met << "/" << report.instances
              << " instances met the stability premise\n";
  }
  emit(kcut::sweep_json(report));
  return report.clean() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"exact and approximate k-terminal (multiway) cut toolkit"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", cli.verbose, "diagnostics on standard error");

  auto add_budget = [&cli](CLI::App* cmd) {
    cmd->add_option("--budget", cli.budget, "max free vertices for the exact oracle");
    cmd->add_option("--jobs", cli.jobs, "worker threads (never affects results)");
  };

  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--method", cli.solve_method, "iso or exact")->required();
  solve->add_option("instance", cli.solve_file, "instance file, or - for stdin")->required();
  add_budget(solve);

  auto* stability = app.add_subcommand("stability", "exact stability factor");
  stability->add_option("instance", cli.stability_file)->required();
  add_budget(stability);

  auto* generate = app.add_subcommand("generate", "emit instances");
  generate->require_subcommand(1);
  auto* tight = generate->add_subcommand("tight", "tight 2k-vertex construction G_k(eps)");
  tight->add_option("--k", cli.tight_k)->required();
  tight->add_option("--eps", cli.tight_eps, "rational, 0 < eps < k-2")->required();
  tight->add_option("-o,--output", cli.tight_out, "file, or - for stdout");
  auto* random = generate->add_subcommand("random", "seeded random instance");
  random->add_option("--n", cli.rnd_n)->required();
  random->add_option("--k", cli.rnd_k)->required();
  random->add_option("--prob", cli.rnd_prob, "edge probability, rational in (0,1]");
  random->add_option("--wmin", cli.rnd_wmin);
  random->add_option("--wmax", cli.rnd_wmax);
  random->add_option("--seed", cli.rnd_seed);
  random->add_option("-o,--output", cli.rnd_out, "file, or - for stdout");

  auto* perturb = app.add_subcommand("perturb", "apply a gamma-perturbation");
  perturb->add_option("--gamma", cli.perturb_gamma, "rational > 1")->required();
  perturb->add_option("--mode", cli.perturb_mode, "worst or random");
  perturb->add_option("--seed", cli.perturb_seed);
  perturb->add_option("-o,--output", cli.perturb_out, "file, or - for stdout");
  perturb->add_option("instance", cli.perturb_file)->required();
  add_budget(perturb);

  auto* verify = app.add_subcommand("verify", "audit the structural guarantees");
  verify->require_subcommand(1);
  auto* vt1 = verify->add_subcommand("theorem1", "stability premise implies isolating optimality");
  vt1->add_option("instance", cli.vt1_file)->required();
  add_budget(vt1);
  auto* vt2 = verify->add_subcommand("theorem2", "tight construction behaves as designed");
  vt2->add_option("--k", cli.vt2_k)->required();
  vt2->add_option("--eps", cli.vt2_eps)->required();
  add_budget(vt2);

  auto* sweep = app.add_subcommand("sweep", "batch audit over random instances");
  sweep->add_option("--count", cli.sweep_count)->required();
  sweep->add_option("--n", cli.sweep_n);
  sweep->add_option("--k", cli.sweep_k);
  sweep->add_option("--prob", cli.sweep_prob);
  sweep->add_option("--wmin", cli.sweep_wmin);
  sweep->add_option("--wmax", cli.sweep_wmax);
  sweep->add_option("--seed", cli.sweep_seed);
  add_budget(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) return run_solve(cli);
    if (stability->parsed()) return run_stability(cli);
    if (generate->parsed() && tight->parsed()) return run_generate_tight(cli);
    if (generate->parsed() && random->parsed()) return run_generate_random(cli);
    if (perturb->parsed()) return run_perturb(cli);
    if (verify->parsed() && vt1->parsed()) return run_verify_theorem1(cli);
    if (verify->parsed() && vt2->parsed()) return run_verify_theorem2(cli);
    if (sweep->parsed()) return run_sweep(cli);
  } catch (const kcut::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const kcut::ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kcut::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
