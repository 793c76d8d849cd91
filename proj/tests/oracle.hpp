#pragma once

// Test-side oracles, kept independent of the library's solver paths: the
// s-t cut oracle enumerates raw source-side subsets, never touching the
// flow engine it checks.

#include <optional>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut::tests {

struct StCutOracle {
  Weight min_weight;
  std::vector<std::vector<VertexId>> min_sides;  // every optimal source side, sorted sets
  std::vector<VertexId> minimal_side;            // intersection of min_sides
};

// Enumerates all 2^(n-|sources|-|sinks|) source sides containing `sources`
// and avoiding `sinks`, weighing each boundary directly.
inline StCutOracle brute_force_st_cut(const Instance& inst, const std::vector<VertexId>& sources,
                                      const std::vector<VertexId>& sinks) {
  const int n = inst.vertex_count();
  std::vector<char> pinned(static_cast<size_t>(n), 0);  // 1 source, 2 sink
  for (VertexId v : sources) pinned[static_cast<size_t>(v)] = 1;
  for (VertexId v : sinks) pinned[static_cast<size_t>(v)] = 2;
  std::vector<VertexId> loose;
  for (int v = 0; v < n; ++v) {
    if (!pinned[static_cast<size_t>(v)]) loose.push_back(v);
  }

  StCutOracle oracle;
  std::optional<Weight> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << loose.size()); ++mask) {
    std::vector<char> in_side(pinned.begin(), pinned.end());
    for (size_t i = 0; i < loose.size(); ++i) {
      in_side[static_cast<size_t>(loose[i])] = (mask >> i) & 1 ? 1 : 0;
    }
    Weight w = 0;
    for (const Edge& e : inst.edges()) {
      if ((in_side[static_cast<size_t>(e.u)] == 1) != (in_side[static_cast<size_t>(e.v)] == 1)) {
        w += e.w;
      }
    }
    std::vector<VertexId> side;
    for (int v = 0; v < n; ++v) {
      if (in_side[static_cast<size_t>(v)] == 1) side.push_back(v);
    }
    if (!best || w < *best) {
      best = w;
      oracle.min_sides.clear();
      oracle.min_sides.push_back(std::move(side));
    } else if (w == *best) {
      oracle.min_sides.push_back(std::move(side));
    }
  }
  oracle.min_weight = *best;

  // Minimum-cut source sides are closed under intersection, so the unique
  // minimal one is the intersection of them all.
  std::vector<char> common(static_cast<size_t>(n), 1);
  for (const auto& side : oracle.min_sides) {
    std::vector<char> here(static_cast<size_t>(n), 0);
    for (VertexId v : side) here[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) common[static_cast<size_t>(v)] &= here[static_cast<size_t>(v)];
  }
  for (int v = 0; v < n; ++v) {
    if (common[static_cast<size_t>(v)]) oracle.minimal_side.push_back(v);
  }
  return oracle;
}

}  // namespace kcut::tests
