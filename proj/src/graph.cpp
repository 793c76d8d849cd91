#include "kcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

void require_sorted_valid(const Instance& inst, const EdgeSet& es) {
  const int m = inst.edge_count();
  EdgeId prev = -1;
  for (EdgeId e : es) {
    if (e < 0 || e >= m) throw InputError("edge id " + std::to_string(e) + " out of range");
    if (e <= prev) throw InputError("edge set must be sorted and duplicate-free");
    prev = e;
  }
}

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Instance::Instance(int n, std::vector<Edge> edges, std::vector<VertexId> terminals) : n_(n) {
  if (n < 1) throw InputError("vertex count must be positive");
  const int k = static_cast<int>(terminals.size());
  if (k < 2) throw InputError("at least two terminals required");
  if (k > n) throw InputError("more terminals than vertices");

  terminal_index_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < k; ++i) {
    VertexId t = terminals[static_cast<size_t>(i)];
    if (t < 0 || t >= n) throw InputError("terminal id out of range");
    if (terminal_index_[static_cast<size_t>(t)] != -1) throw InputError("duplicate terminal");
    terminal_index_[static_cast<size_t>(t)] = i;
  }
  terminals_ = std::move(terminals);

  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop rejected");
    if (!(e.w > 0)) throw InputError("nonpositive edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  // Parallel edges merge by weight sum.
  edges_.reserve(edges.size());
  for (Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
    } else {
      edges_.push_back(std::move(e));
    }
  }
}

const Edge& Instance::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw InputError("edge id " + std::to_string(e) + " out of range");
  return edges_[static_cast<size_t>(e)];
}

Weight Instance::total_weight() const {
  Weight total = 0;
  for (const Edge& e : edges_) total += e.w;
  return total;
}

Weight cut_weight(const Instance& inst, const EdgeSet& es) {
  require_sorted_valid(inst, es);
  Weight total = 0;
  for (EdgeId e : es) total += inst.edges()[static_cast<size_t>(e)].w;
  return total;
}

KCutSolution induced_cut(const Instance& inst, const std::vector<int>& assignment) {
  const int n = inst.vertex_count();
  const int k = inst.terminal_count();
  if (static_cast<int>(assignment.size()) != n) throw InputError("assignment must cover every vertex");
  for (int v = 0; v < n; ++v) {
    if (assignment[static_cast<size_t>(v)] < 0 || assignment[static_cast<size_t>(v)] >= k) {
      throw InputError("assignment value out of range");
    }
  }
  for (int i = 0; i < k; ++i) {
    if (assignment[static_cast<size_t>(inst.terminal(i))] != i) {
      throw InputError("terminal assigned to foreign index");
    }
  }

  KCutSolution sol;
  sol.assignment = assignment;
  sol.weight = 0;
  const auto& edges = inst.edges();
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    const Edge& edge = edges[static_cast<size_t>(e)];
    if (assignment[static_cast<size_t>(edge.u)] != assignment[static_cast<size_t>(edge.v)]) {
      sol.cut_edges.push_back(e);
      sol.weight += edge.w;
    }
  }
  return sol;
}

bool is_feasible_cut(const Instance& inst, const EdgeSet& es) {
  require_sorted_valid(inst, es);
  Dsu dsu(inst.vertex_count());
  size_t next = 0;
  const auto& edges = inst.edges();
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    if (next < es.size() && es[next] == e) {
      ++next;
      continue;
    }
    dsu.unite(edges[static_cast<size_t>(e)].u, edges[static_cast<size_t>(e)].v);
  }
  std::vector<int> roots;
  roots.reserve(static_cast<size_t>(inst.terminal_count()));
  for (VertexId t : inst.terminals()) {
    int r = dsu.find(t);
    for (int seen : roots) {
      if (seen == r) return false;
    }
    roots.push_back(r);
  }
  return true;
}

}  // namespace kcut
