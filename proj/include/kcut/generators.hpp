#pragma once

#include <cstdint>
#include <string>

#include "kcut/graph.hpp"

namespace kcut {

// Parameters of the 2k-vertex tight family G_k(eps): terminals t_1..t_k and
// satellites s_1..s_k, with edge weights a on (s_i, s_j), b on (t_i, s_i)
// and c on (t_i, s_j), i != j.
struct TightParams {
  int k = 0;
  Weight eps;
  Weight a, b, c;
};

// Closed-form parameters a = 2*eps, b = k(k-1)(k-1-eps), c = k(k-1-eps)-eps.
// Requires k >= 3 and 0 < eps < k-2 (so the stability level k-1-eps
// exceeds 1).
TightParams tight_params(int k, const Weight& eps);

struct TightParamsCheck {
  bool ok = false;
  bool stability_ok = false;  // b > gamma * (c + (k/2) * a)
  bool isolation_ok = false;  // b < (k-1) * (a + c)
  std::string detail;         // exact sides of both comparisons
};

// Evaluates both strict inequalities at the given gamma, exactly.
TightParamsCheck validate_tight_params(const TightParams& p, const Weight& gamma);

// G_k(eps) from the closed form; always valid for 0 < eps < k-2.
Instance tight_instance(int k, const Weight& eps);
// Explicit (a, b, c) override; throws ConstructionError naming the violated
// inequality when validation at gamma = k-1-eps fails.
Instance tight_instance(const TightParams& p);

struct RandomGraphSpec {
  int n = 0;
  int k = 0;
  Weight edge_prob;       // in (0, 1], applied exactly per vertex pair
  Weight wmin, wmax;      // 0 < wmin <= wmax; weights drawn on the common-denominator grid
  std::uint64_t seed = 0;
  int max_retries = 100;  // re-sample while some terminal pair is disconnected
};

// Seeded, reproducible; terminals are vertices 1..k. Retries until all
// terminals share one component, then throws InputError when max_retries
// draws were not enough.
Instance random_instance(const RandomGraphSpec& spec);

}  // namespace kcut
