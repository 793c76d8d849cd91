#include "kcut/mincut.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

// Dinic over exact rational residual capacities. Arc 2i+1 is the reverse of
// arc 2i. Rational capacities do not hurt termination: the usual phase
// bounds depend only on the graph, not on capacity values.
struct FlowNetwork {
  struct Arc {
    int to;
    Weight cap;  // residual
  };

  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj;
  std::vector<int> level;
  std::vector<size_t> iter;

  explicit FlowNetwork(int n) : adj(static_cast<size_t>(n)), level(static_cast<size_t>(n)), iter(static_cast<size_t>(n)) {}

  void add_arc(int u, int v, Weight cap_uv, Weight cap_vu) {
    adj[static_cast<size_t>(u)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back(Arc{v, std::move(cap_uv)});
    adj[static_cast<size_t>(v)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back(Arc{u, std::move(cap_vu)});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[static_cast<size_t>(s)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int id : adj[static_cast<size_t>(v)]) {
        const Arc& a = arcs[static_cast<size_t>(id)];
        if (a.cap > 0 && level[static_cast<size_t>(a.to)] == -1) {
          level[static_cast<size_t>(a.to)] = level[static_cast<size_t>(v)] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[static_cast<size_t>(t)] != -1;
  }

  Weight dfs(int v, int t, const Weight& pushed) {
    if (v == t) return pushed;
    for (size_t& i = iter[static_cast<size_t>(v)]; i < adj[static_cast<size_t>(v)].size(); ++i) {
      int id = adj[static_cast<size_t>(v)][i];
      Arc& a = arcs[static_cast<size_t>(id)];
      if (a.cap > 0 && level[static_cast<size_t>(a.to)] == level[static_cast<size_t>(v)] + 1) {
        Weight d = dfs(a.to, t, pushed < a.cap ? pushed : a.cap);
        if (d > 0) {
          a.cap -= d;
          arcs[static_cast<size_t>(id ^ 1)].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  Weight max_flow(int s, int t, const Weight& inf) {
    Weight flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      for (;;) {
        Weight d = dfs(s, t, inf);
        if (d == 0) break;
        flow += d;
      }
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int id : adj[static_cast<size_t>(queue[head])]) {
        const Arc& a = arcs[static_cast<size_t>(id)];
        if (a.cap > 0 && !seen[static_cast<size_t>(a.to)]) {
          seen[static_cast<size_t>(a.to)] = 1;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }
};

}  // namespace

StCut min_st_cut(const Instance& inst, const std::vector<VertexId>& sources,
                 const std::vector<VertexId>& sinks) {
  const int n = inst.vertex_count();
  if (sources.empty() || sinks.empty()) throw InputError("sources and sinks must be nonempty");
  // 0 = free, 1 = source, 2 = sink
  std::vector<char> side(static_cast<size_t>(n), 0);
  for (VertexId v : sources) {
    if (v < 0 || v >= n) throw InputError("source id out of range");
    side[static_cast<size_t>(v)] = 1;
  }
  for (VertexId v : sinks) {
    if (v < 0 || v >= n) throw InputError("sink id out of range");
    if (side[static_cast<size_t>(v)] == 1) throw InputError("sources and sinks overlap");
    side[static_cast<size_t>(v)] = 2;
  }

  // Super-vertices contract the source and sink sets; any capacity above
  // the total edge weight acts as infinity.
  const int super_s = n;
  const int super_t = n + 1;
  Weight inf = inst.total_weight() + 1;

  FlowNetwork net(n + 2);
  for (const Edge& e : inst.edges()) net.add_arc(e.u, e.v, e.w, e.w);
  for (int v = 0; v < n; ++v) {
    if (side[static_cast<size_t>(v)] == 1) net.add_arc(super_s, v, inf, 0);
    if (side[static_cast<size_t>(v)] == 2) net.add_arc(v, super_t, inf, 0);
  }

  Weight flow = net.max_flow(super_s, super_t, inf);
  std::vector<char> reach = net.residual_reachable(super_s);

  StCut cut;
  for (int v = 0; v < n; ++v) {
    if (reach[static_cast<size_t>(v)]) cut.source_side.push_back(v);
  }
  cut.weight = 0;
  const auto& edges = inst.edges();
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    const Edge& edge = edges[static_cast<size_t>(e)];
    if (reach[static_cast<size_t>(edge.u)] != reach[static_cast<size_t>(edge.v)]) {
      cut.cut_edges.push_back(e);
      cut.weight += edge.w;
    }
  }
  // Max-flow value and the boundary of the residual-reachable side agree.
  assert(cut.weight == flow);
  (void)flow;
  return cut;
}

}  // namespace kcut
