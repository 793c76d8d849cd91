#pragma once

#include <vector>

#include "kcut/weight.hpp"

namespace kcut {

using VertexId = int;  // 0-based internally, 1-based in files and reports
using EdgeId = int;    // position in Instance::edges()

struct Edge {
  VertexId u;  // u < v after canonicalization
  VertexId v;
  Weight w;    // > 0

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

// Sorted vector of distinct edge ids. Plain storage keeps the set algebra
// cheap and the iteration order deterministic.
using EdgeSet = std::vector<EdgeId>;

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_set_difference(const EdgeSet& a, const EdgeSet& b);

// Weighted undirected graph with an ordered terminal list. Immutable after
// construction; every operation on it is a pure function, so instances can
// be shared freely across worker threads.
class Instance {
 public:
  // Rejects self-loops, nonpositive weights, and bad terminal lists
  // (fewer than 2, more than n, duplicates, out of range). Parallel edges
  // are merged by summing weights; edges end up sorted by (u, v) and edge
  // ids are positions in that order.
  Instance(int n, std::vector<Edge> edges, std::vector<VertexId> terminals);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;  // range-checked

  const std::vector<VertexId>& terminals() const { return terminals_; }
  VertexId terminal(int i) const { return terminals_[static_cast<size_t>(i)]; }
  // Index i with terminal(i) == v, or -1 when v is not a terminal.
  int terminal_index(VertexId v) const { return terminal_index_[static_cast<size_t>(v)]; }

  Weight total_weight() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.terminals_ == b.terminals_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<VertexId> terminals_;
  std::vector<int> terminal_index_;
};

// A k-terminal cut given by a total assignment of vertices to terminal
// indices. cut_edges is exactly the set of cross-assignment edges and
// weight its total weight.
struct KCutSolution {
  std::vector<int> assignment;  // size n, values in [0, k), assignment[t_i] == i
  EdgeSet cut_edges;
  Weight weight;
};

// Total weight of an edge set. Throws InputError on invalid or unsorted ids.
Weight cut_weight(const Instance& inst, const EdgeSet& es);

// Cut induced by a total assignment. Throws InputError when the assignment
// is not total, out of range, or maps a terminal to a foreign index.
KCutSolution induced_cut(const Instance& inst, const std::vector<int>& assignment);

// True iff removing es leaves no path between any pair of terminals.
bool is_feasible_cut(const Instance& inst, const EdgeSet& es);

}  // namespace kcut
