#pragma once

#include <initializer_list>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut::tests {

// Star on t1, t2, t3 and a hub v (vertex 3), spoke weights wa, wb, wc.
// Edge ids after canonicalization: 0 = (t1,v), 1 = (t2,v), 2 = (t3,v).
inline Instance star(long wa, long wb, long wc) {
  return Instance(4,
                  {Edge{0, 3, Weight(wa)}, Edge{1, 3, Weight(wb)}, Edge{2, 3, Weight(wc)}},
                  {0, 1, 2});
}

inline Instance star_112() { return star(1, 1, 2); }
inline Instance star_113() { return star(1, 1, 3); }

// Two unit-weight 2-paths t1-a-t2 and t1-b-t2; k = 2. Four symmetric optima.
inline Instance square_k2() {
  return Instance(4,
                  {Edge{0, 2, Weight(1)}, Edge{2, 1, Weight(1)}, Edge{0, 3, Weight(1)},
                   Edge{3, 1, Weight(1)}},
                  {0, 1});
}

inline EdgeSet es(std::initializer_list<EdgeId> ids) { return EdgeSet(ids); }

inline std::vector<VertexId> vs(std::initializer_list<VertexId> ids) {
  return std::vector<VertexId>(ids);
}

}  // namespace kcut::tests
