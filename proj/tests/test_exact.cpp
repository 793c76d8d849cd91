#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "kcut/errors.hpp"
#include "kcut/exact.hpp"
#include "kcut/generators.hpp"
#include "kcut/mincut.hpp"

using namespace kcut;
using namespace kcut::tests;

TEST_CASE("star optimum") {
  ExactResult res = solve_exact(star_112());
  CHECK(res.optimum_weight == 2);
  CHECK(res.enumerated_count == 3);
  CHECK(res.unique());
  CHECK(res.partition_unique());
  CHECK(res.canonical().cut_edges == es({0, 1}));
  CHECK(res.canonical().assignment == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("tight instance optimum is the paired partition") {
  ExactResult res = solve_exact(tight_instance(3, rational(1, 2)));
  CHECK(res.optimum_weight == 27);
  CHECK(res.enumerated_count == 27);  // 3^3 assignments
  CHECK(res.unique());
  CHECK(res.canonical().assignment == std::vector<int>{0, 1, 2, 0, 1, 2});
}

TEST_CASE("symmetric square has four tied optima") {
  ExactResult res = solve_exact(square_k2());
  CHECK(res.optimum_weight == 2);
  CHECK(res.optima.size() == 4);  // one edge from each 2-path, both choices
  CHECK(res.optimal_assignment_count == 4);
  for (const KCutSolution& sol : res.optima) CHECK(sol.weight == 2);
}

TEST_CASE("an isolated vertex leaves the cut unique but not the partition") {
  Instance inst(5,
                {Edge{0, 3, Weight(1)}, Edge{1, 3, Weight(1)}, Edge{2, 3, Weight(2)}},
                {0, 1, 2});
  ExactResult res = solve_exact(inst);
  CHECK(res.unique());
  CHECK(res.optimal_assignment_count == 3);  // the edgeless vertex floats across the parts
  CHECK_FALSE(res.partition_unique());
}

TEST_CASE("no free vertices means exactly one cut") {
  Instance inst(3, {Edge{0, 1, Weight(1)}, Edge{1, 2, Weight(2)}}, {0, 1, 2});
  ExactResult res = solve_exact(inst);
  CHECK(res.enumerated_count == 1);
  CHECK(res.optimum_weight == 3);
  int streamed = 0;
  enumerate_feasible_cuts(inst, 16, [&](const KCutSolution&) { ++streamed; });
  CHECK(streamed == 1);
}

TEST_CASE("budget refusal is explicit") {
  RandomGraphSpec spec;
  spec.n = 9;
  spec.k = 3;
  spec.edge_prob = 1;
  spec.wmin = 1;
  spec.wmax = 1;
  spec.seed = 4;
  Instance inst = random_instance(spec);
  CHECK_THROWS_AS(solve_exact(inst, SolveOptions{5, 1}), BudgetError);
  CHECK_THROWS_AS(enumerate_feasible_cuts(inst, 5, [](const KCutSolution&) {}), BudgetError);
  CHECK_NOTHROW(solve_exact(inst, SolveOptions{6, 1}));
}

TEST_CASE("stream yields each edge set once and covers the optimum") {
  Instance inst = star_112();
  std::set<EdgeSet> seen;
  enumerate_feasible_cuts(inst, 16, [&](const KCutSolution& sol) {
    CHECK(seen.insert(sol.cut_edges).second);
  });
  CHECK(seen.size() == 3);

  // Every satellite of the tight instance touches every terminal, so each of
  // the 27 assignments leaves a different spoke uncut: all 27 sets distinct.
  int tight_sets = 0;
  enumerate_feasible_cuts(tight_instance(3, rational(1, 2)), 16,
                          [&](const KCutSolution&) { ++tight_sets; });
  CHECK(tight_sets == 27);

  for (std::uint64_t seed = 21; seed <= 26; ++seed) {
    RandomGraphSpec spec;
    spec.n = 7;
    spec.k = 3;
    spec.edge_prob = rational(1, 2);
    spec.wmin = 1;
    spec.wmax = 9;
    spec.seed = seed;
    Instance rnd = random_instance(spec);
    ExactResult res = solve_exact(rnd);
    std::set<EdgeSet> sets;
    int optimal_hits = 0;
    enumerate_feasible_cuts(rnd, 16, [&](const KCutSolution& sol) {
      CHECK(sets.insert(sol.cut_edges).second);
      CHECK(sol.weight >= res.optimum_weight);
      if (sol.weight == res.optimum_weight) ++optimal_hits;
    });
    CHECK(optimal_hits == static_cast<int>(res.optima.size()));
  }
}

TEST_CASE("agrees with the flow engine when k = 2") {
  for (std::uint64_t seed = 41; seed <= 52; ++seed) {
    RandomGraphSpec spec;
    spec.n = 6 + static_cast<int>(seed % 3);
    spec.k = 2;
    spec.edge_prob = rational(1, 2);
    spec.wmin = 1;
    spec.wmax = 7;
    spec.seed = seed;
    Instance inst = random_instance(spec);
    ExactResult res = solve_exact(inst);
    StCut cut = min_st_cut(inst, vs({0}), vs({1}));
    CHECK(res.optimum_weight == cut.weight);
  }
}

TEST_CASE("job count never changes the result") {
  for (std::uint64_t seed = 61; seed <= 64; ++seed) {
    RandomGraphSpec spec;
    spec.n = 8;
    spec.k = 3;
    spec.edge_prob = rational(1, 2);
    spec.wmin = 1;
    spec.wmax = 5;
    spec.seed = seed;
    Instance inst = random_instance(spec);
    ExactResult lone = solve_exact(inst, SolveOptions{16, 1});
    ExactResult pooled = solve_exact(inst, SolveOptions{16, 4});
    CHECK(lone.optimum_weight == pooled.optimum_weight);
    CHECK(lone.enumerated_count == pooled.enumerated_count);
    CHECK(lone.optimal_assignment_count == pooled.optimal_assignment_count);
    REQUIRE(lone.optima.size() == pooled.optima.size());
    for (size_t i = 0; i < lone.optima.size(); ++i) {
      CHECK(lone.optima[i].cut_edges == pooled.optima[i].cut_edges);
      CHECK(lone.optima[i].assignment == pooled.optima[i].assignment);
    }
  }
}
