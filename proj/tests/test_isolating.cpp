#include <doctest.h>

#include "helpers.hpp"
#include "kcut/errors.hpp"
#include "kcut/exact.hpp"
#include "kcut/generators.hpp"
#include "kcut/isolating.hpp"

using namespace kcut;
using namespace kcut::tests;

TEST_CASE("isolating cuts on the stars") {
  IsolatingCut c3 = isolating_cut(star_112(), 2);
  CHECK(c3.source_set == vs({2}));
  CHECK(c3.weight == 2);

  IsolatingCut wide = isolating_cut(star_113(), 2);
  CHECK(wide.source_set == vs({2, 3}));
  CHECK(wide.cut_edges == es({0, 1}));
  CHECK(wide.weight == 2);

  IsolatingCut t1 = isolating_cut(tight_instance(3, rational(1, 2)), 0);
  CHECK(t1.source_set == vs({0}));
  CHECK(t1.weight == 17);

  CHECK_THROWS_AS(isolating_cut(star_112(), 3), InputError);
  CHECK_THROWS_AS(isolating_cut(star_112(), -1), InputError);
}

TEST_CASE("union approximation on the stars") {
  IsoApproxSolution a = iso_union_approx(star_112());
  CHECK(a.dropped_index == 2);  // unique max weight 2
  CHECK(a.e_iso == es({0, 1}));
  CHECK(a.weight == 2);  // equals the optimum here

  IsoApproxSolution b = iso_union_approx(star_113());
  CHECK(b.dropped_index == 2);  // E_3 = {e1,e2} weighs 2, the heaviest
  CHECK(b.e_iso == es({0, 1}));
  CHECK(b.weight == 2);
}

TEST_CASE("ties drop the largest terminal index") {
  IsoApproxSolution sol = iso_union_approx(star(1, 1, 1));
  CHECK(sol.cuts[0].weight == 1);
  CHECK(sol.cuts[1].weight == 1);
  CHECK(sol.cuts[2].weight == 1);
  CHECK(sol.dropped_index == 2);
  CHECK(sol.e_iso == es({0, 1}));
}

TEST_CASE("tight instance approximation is feasible but suboptimal") {
  Instance inst = tight_instance(3, rational(1, 2));
  IsoApproxSolution sol = iso_union_approx(inst);
  for (const IsolatingCut& cut : sol.cuts) CHECK(cut.weight == 17);
  CHECK(sol.dropped_index == 2);
  CHECK(sol.weight == 34);  // two disjoint 17s
  CHECK(is_feasible_cut(inst, sol.e_iso));
  // 34/27 <= 2 - 2/3.
  CHECK(sol.weight * 3 <= Weight(27) * 4);
}

TEST_CASE("random instances: feasibility, containment, approximation bound") {
  for (std::uint64_t seed = 71; seed <= 85; ++seed) {
    RandomGraphSpec spec;
    spec.n = 7;
    spec.k = 3 + static_cast<int>(seed % 2);
    spec.edge_prob = rational(1, 2);
    spec.wmin = 1;
    spec.wmax = 9;
    spec.seed = seed;
    Instance inst = random_instance(spec);
    const int k = inst.terminal_count();

    std::vector<IsolatingCut> cuts;
    for (int i = 0; i < k; ++i) cuts.push_back(isolating_cut(inst, i));

    // Dropping ANY single cut leaves a feasible k-terminal cut.
    for (int drop = 0; drop < k; ++drop) {
      EdgeSet rest;
      for (int i = 0; i < k; ++i) {
        if (i != drop) rest = edge_set_union(rest, cuts[static_cast<size_t>(i)].cut_edges);
      }
      CHECK(is_feasible_cut(inst, rest));
    }

    ExactResult exact = solve_exact(inst);

    // Q_i sits inside the i-th part of some optimum; with a unique optimal
    // assignment that containment holds simultaneously for every i.
    for (int i = 0; i < k; ++i) {
      bool contained = false;
      for (const KCutSolution& sol : exact.optima) {
        bool inside = true;
        for (VertexId v : cuts[static_cast<size_t>(i)].source_set) {
          if (sol.assignment[static_cast<size_t>(v)] != i) {
            inside = false;
            break;
          }
        }
        contained = contained || inside;
      }
      CHECK(contained);
    }

    IsoApproxSolution sol = iso_union_approx(inst);
    CHECK(sol.weight * k <= exact.optimum_weight * (2 * k - 2));
  }
}
