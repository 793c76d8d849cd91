#include "kcut/generators.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "kcut/detail/rng.hpp"
#include "kcut/errors.hpp"

namespace kcut {

namespace {

std::uint64_t to_u64(const mpz_class& z, const char* what) {
  if (z < 0 || !z.fits_ulong_p()) {
    throw InputError(std::string(what) + " out of supported range");
  }
  return static_cast<std::uint64_t>(z.get_ui());
}

}  // namespace

TightParams tight_params(int k, const Weight& eps) {
  if (k < 3) throw InputError("tight construction requires k >= 3");
  if (!(eps > 0)) throw InputError("eps must be positive");
  Weight gamma = Weight(k - 1) - eps;
  if (!(gamma > 1)) {
    throw ConstructionError("eps must stay below k-2 so the stability level k-1-eps exceeds 1");
  }
  TightParams p;
  p.k = k;
  p.eps = eps;
  p.a = 2 * eps;
  p.b = Weight(k) * Weight(k - 1) * gamma;
  p.c = Weight(k) * gamma - eps;
  return p;
}

TightParamsCheck validate_tight_params(const TightParams& p, const Weight& gamma) {
  TightParamsCheck check;
  Weight stability_rhs = gamma * (p.c + rational(p.k, 2) * p.a);
  Weight isolation_rhs = Weight(p.k - 1) * (p.a + p.c);
  check.stability_ok = p.b > stability_rhs;
  check.isolation_ok = p.b < isolation_rhs;
  check.ok = check.stability_ok && check.isolation_ok;
  check.detail = "b = " + rational_str(p.b) + ", gamma*(c + (k/2)*a) = " +
                 rational_str(stability_rhs) + " (need b greater), (k-1)*(a+c) = " +
                 rational_str(isolation_rhs) + " (need b smaller)";
  return check;
}

Instance tight_instance(const TightParams& p) {
  if (p.k < 3) throw InputError("tight construction requires k >= 3");
  if (!(p.a > 0) || !(p.b > 0) || !(p.c > 0)) {
    throw ConstructionError("tight construction needs positive a, b, c");
  }
  Weight gamma = Weight(p.k - 1) - p.eps;
  if (!(gamma > 1)) {
    throw ConstructionError("eps must stay below k-2 so the stability level k-1-eps exceeds 1");
  }
  TightParamsCheck check = validate_tight_params(p, gamma);
  if (!check.stability_ok) {
    throw ConstructionError("stability inequality b > gamma*(c + (k/2)*a) violated: " + check.detail);
  }
  if (!check.isolation_ok) {
    throw ConstructionError("isolation inequality b < (k-1)*(a+c) violated: " + check.detail);
  }

  const int k = p.k;
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(k * (k - 1) / 2 + k * k));
  // Terminals t_i = i, satellites s_i = k + i.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.push_back(Edge{k + i, k + j, p.a});
  }
  for (int i = 0; i < k; ++i) edges.push_back(Edge{i, k + i, p.b});
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) edges.push_back(Edge{i, k + j, p.c});
    }
  }
  std::vector<VertexId> terminals(static_cast<size_t>(k));
  std::iota(terminals.begin(), terminals.end(), 0);
  return Instance(2 * k, std::move(edges), std::move(terminals));
}

Instance tight_instance(int k, const Weight& eps) { return tight_instance(tight_params(k, eps)); }

Instance random_instance(const RandomGraphSpec& spec) {
  if (spec.n < 2) throw InputError("random instance needs n >= 2");
  if (spec.k < 2 || spec.k > spec.n) throw InputError("random instance needs 2 <= k <= n");
  if (!(spec.edge_prob > 0) || spec.edge_prob > 1) {
    throw InputError("edge probability must lie in (0, 1]");
  }
  if (!(spec.wmin > 0) || spec.wmin > spec.wmax) {
    throw InputError("weight range needs 0 < wmin <= wmax");
  }

  const std::uint64_t prob_num = to_u64(spec.edge_prob.get_num(), "edge probability numerator");
  const std::uint64_t prob_den = to_u64(spec.edge_prob.get_den(), "edge probability denominator");

  // Weights live on the coarsest grid containing both bounds.
  mpz_class grid;
  mpz_lcm(grid.get_mpz_t(), spec.wmin.get_den().get_mpz_t(), spec.wmax.get_den().get_mpz_t());
  mpz_class lo_z = spec.wmin.get_num() * (grid / spec.wmin.get_den());
  mpz_class hi_z = spec.wmax.get_num() * (grid / spec.wmax.get_den());
  const std::uint64_t span = to_u64(mpz_class(hi_z - lo_z + 1), "weight range span");

  std::mt19937_64 rng(spec.seed);
  std::vector<VertexId> terminals(static_cast<size_t>(spec.k));
  std::iota(terminals.begin(), terminals.end(), 0);

  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < spec.n; ++u) {
      for (int v = u + 1; v < spec.n; ++v) {
        if (detail::rand_below(rng, prob_den) >= prob_num) continue;
        mpz_class num = lo_z + mpz_class(static_cast<unsigned long>(detail::rand_below(rng, span)));
        Weight w(num, grid);
        w.canonicalize();
        edges.push_back(Edge{u, v, std::move(w)});
      }
    }
    // All terminals must share a component, or stability analysis trivializes.
    std::vector<int> parent(static_cast<size_t>(spec.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    for (const Edge& e : edges) parent[static_cast<size_t>(find(e.u))] = find(e.v);
    bool connected = true;
    for (int i = 1; i < spec.k; ++i) {
      if (find(terminals[static_cast<size_t>(i)]) != find(terminals[0])) {
        connected = false;
        break;
      }
    }
    if (connected) return Instance(spec.n, std::move(edges), terminals);
  }
  throw InputError("could not connect all terminals within " + std::to_string(spec.max_retries) +
                   " retries; raise edge probability");
}

}  // namespace kcut
