#pragma once

// Brute-force reference implementations. They share only the graph
// containers with the production code: every relation here is recomputed
// from adjacency matrices by exhaustive search, for tests and `oracle-check`.

#include <cstdint>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon::oracle {

/// Every cycle of bounded length, once each, in canonical form: undirected
/// cycles start at their minimum vertex with vertices[1] < vertices.back();
/// directed cycles start at their minimum vertex.
struct CycleCatalog {
  bool directed = false;
  std::size_t vertex_count = 0;
  std::vector<std::vector<Vertex>> cycles;
};

inline constexpr std::size_t kMaxUndirectedOrder = 60;
inline constexpr std::size_t kMaxDirectedOrder = 30;
inline constexpr std::size_t kMaxSkArcs = 14;

/// Undirected cycles of length 3..k. Throws std::length_error if n > 60.
CycleCatalog enumerate_all_cycles(const UndirectedGraph& g, unsigned k);
/// Directed cycles of length 2..k. Throws std::length_error if n > 30.
CycleCatalog enumerate_all_cycles(const DirectedGraph& d, unsigned k);

/// Chain connectivity read off the cycle-intersection graph.
/// Vertex mode: cycles adjacent when they share a vertex (Kₖ, Cₖ).
VertexPartition chain_vertex_classes(const CycleCatalog& catalog);
/// Edge mode over g's edge ids: cycles adjacent when they share an edge (Lₖ).
EdgePartition chain_edge_classes(const CycleCatalog& catalog, const UndirectedGraph& g);
/// Arc mode over d's arc ids (Dₖ).
ArcPartition chain_arc_classes(const CycleCatalog& catalog, const DirectedGraph& d);

/// Vertex pairs (u,v) such that some single chain class of edges touches both;
/// the vertex form of Lₖ. related[u][v].
std::vector<std::vector<bool>> chain_edge_vertex_relation(const CycleCatalog& catalog);

/// u Sₖ v by trying every arc subset. Throws std::length_error if |A| > 14.
bool bruteforce_sk(const DirectedGraph& d, unsigned k, Vertex u, Vertex v);
/// The whole Sₖ relation from one pass over the arc subsets.
std::vector<std::vector<bool>> bruteforce_sk_relation(const DirectedGraph& d, unsigned k);

/// Classical relations and counts for cross-checks.
std::vector<std::vector<bool>> transitive_closure(const DirectedGraph& d);  // reflexive
VertexPartition bfs_components(const UndirectedGraph& g);
std::uint64_t count_triangles(const UndirectedGraph& g);
/// Triangles containing each vertex, by triple loop.
std::vector<std::uint64_t> triangles_at_vertices(const UndirectedGraph& g);
/// Some cycle (any length) contains both u and v. Exponential; small graphs.
bool on_common_cycle(const UndirectedGraph& g, Vertex u, Vertex v);

}  // namespace cyclecon::oracle
