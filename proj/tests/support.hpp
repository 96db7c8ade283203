#pragma once

#include <initializer_list>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon::testing {

inline UndirectedGraph ug(std::size_t n, std::initializer_list<VertexPair> pairs) {
  std::vector<VertexPair> p(pairs);
  return build_undirected(n, p);
}

inline DirectedGraph dg(std::size_t n, std::initializer_list<VertexPair> arcs) {
  std::vector<VertexPair> a(arcs);
  return build_directed(n, a);
}

// Triangles {0,1,2} and {2,3,4}.
inline UndirectedGraph bowtie() { return ug(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Triangles {0,1,2} and {1,2,3} sharing the diagonal {1,2}.
inline UndirectedGraph diamond() { return ug(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// 0-1-2-3 and 0-4-5-6.
inline UndirectedGraph two_c4_sharing_vertex() {
  return ug(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
}

// 0-1-2-3 and 0-1-4-5 sharing {0,1}.
inline UndirectedGraph two_c4_sharing_edge() {
  return ug(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 0}});
}

// Cyclic triangle 0→3→1→0 and transitive triangle 3→2→1 with shortcut 3→1.
// Strongly connected and triangular, but only {0,1,3} lies on a directed 3-cycle.
inline DirectedGraph mixed_orientation_diamond() {
  return dg(4, {{0, 3}, {3, 1}, {1, 0}, {3, 2}, {2, 1}});
}

}  // namespace cyclecon::testing
