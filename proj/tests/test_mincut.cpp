#include <doctest.h>

#include "helpers.hpp"
#include "kcut/errors.hpp"
#include "kcut/generators.hpp"
#include "kcut/mincut.hpp"
#include "oracle.hpp"

using namespace kcut;
using namespace kcut::tests;

TEST_CASE("star cuts pick the minimal source side") {
  Instance inst = star_112();

  // Two tied minimum cuts ({e3} and {e1,e2}); minimality forces {t3}.
  StCut t3 = min_st_cut(inst, vs({2}), vs({0, 1}));
  CHECK(t3.weight == 2);
  CHECK(t3.source_side == vs({2}));
  CHECK(t3.cut_edges == es({2}));

  StCut t1 = min_st_cut(inst, vs({0}), vs({1, 2}));
  CHECK(t1.weight == 1);
  CHECK(t1.source_side == vs({0}));
  CHECK(t1.cut_edges == es({0}));

  // Contracted multi-vertex sides; again a tie, again the smaller side.
  StCut both = min_st_cut(inst, vs({0, 1}), vs({2}));
  CHECK(both.weight == 2);
  CHECK(both.source_side == vs({0, 1}));
  CHECK(both.cut_edges == es({0, 1}));
}

TEST_CASE("heavier spoke pulls the hub across") {
  StCut cut = min_st_cut(star_113(), vs({2}), vs({0, 1}));
  CHECK(cut.weight == 2);
  CHECK(cut.source_side == vs({2, 3}));
  CHECK(cut.cut_edges == es({0, 1}));
}

TEST_CASE("tight instance isolates the bare terminal") {
  Instance inst = tight_instance(3, rational(1, 2));
  StCut cut = min_st_cut(inst, vs({0}), vs({1, 2}));
  CHECK(cut.weight == 17);  // b + (k-1)c = 9 + 8 < (k-1)a + 2(k-1)c = 18
  CHECK(cut.source_side == vs({0}));
}

TEST_CASE("input validation") {
  Instance inst = star_112();
  CHECK_THROWS_AS(min_st_cut(inst, {}, vs({1})), InputError);
  CHECK_THROWS_AS(min_st_cut(inst, vs({0}), {}), InputError);
  CHECK_THROWS_AS(min_st_cut(inst, vs({0, 1}), vs({1})), InputError);  // overlap
  CHECK_THROWS_AS(min_st_cut(inst, vs({9}), vs({1})), InputError);
}

TEST_CASE("matches exhaustive enumeration, including minimality") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomGraphSpec spec;
    spec.n = 5 + static_cast<int>(seed % 4);  // 5..8
    spec.k = 2;
    spec.edge_prob = rational(3, 5);
    spec.wmin = 1;
    spec.wmax = 8;
    spec.seed = 1000 + seed;
    Instance inst = random_instance(spec);

    std::vector<VertexId> sources{0}, sinks{1};
    if (seed % 3 == 0 && inst.vertex_count() >= 4) {
      sources.push_back(2);  // exercise contraction
      sinks.push_back(3);
    }
    StCut cut = min_st_cut(inst, sources, sinks);
    StCutOracle oracle = brute_force_st_cut(inst, sources, sinks);

    CHECK(cut.weight == oracle.min_weight);
    CHECK(cut.source_side == oracle.minimal_side);
    CHECK(cut.weight == cut_weight(inst, cut.cut_edges));

    // Deterministic: identical calls, identical cuts.
    StCut again = min_st_cut(inst, sources, sinks);
    CHECK(again.source_side == cut.source_side);
    CHECK(again.cut_edges == cut.cut_edges);
  }
}

TEST_CASE("disconnected source and sink yield an empty cut") {
  Instance inst(4, {Edge{0, 2, Weight(3)}, Edge{1, 3, Weight(4)}}, {0, 1});
  StCut cut = min_st_cut(inst, vs({0}), vs({1}));
  CHECK(cut.weight == 0);
  CHECK(cut.cut_edges.empty());
  CHECK(cut.source_side == vs({0, 2}));
}
