#pragma once

#include <cstdint>

#include "cyclecon/graph.hpp"

namespace cyclecon::generators {

/// Erdős–Rényi G(n, p).
UndirectedGraph random_undirected(std::size_t n, double p, std::uint64_t seed);
/// Each ordered pair (u ≠ v) is an arc with probability p.
DirectedGraph random_directed(std::size_t n, double p, std::uint64_t seed);
/// m distinct edges drawn uniformly (G(n, m)); requires m ≤ n(n−1)/2.
UndirectedGraph random_undirected_m(std::size_t n, std::size_t m, std::uint64_t seed);

UndirectedGraph complete_graph(std::size_t r);
UndirectedGraph cycle_graph(std::size_t s);
UndirectedGraph path_graph(std::size_t n);
/// Directed cycle 0 → 1 → … → s−1 → 0.
DirectedGraph directed_cycle(std::size_t s);
/// Every ordered pair is an arc.
DirectedGraph complete_digraph(std::size_t r);
/// Directed 6-cycle 0..5 plus centre 6 with arcs (i, 6) from every rim vertex.
DirectedGraph wheel_c6_center();

}  // namespace cyclecon::generators
