#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/network.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon {

/// Extraction discipline for the worklist algorithms. The resulting classes
/// do not depend on it; it exists so tests can shake the order.
struct Worklist {
  enum class Discipline { fifo, lifo };
  Discipline discipline = Discipline::fifo;
  /// Order in which unassigned seeds are chosen; empty means increasing id.
  std::vector<std::uint32_t> seed_order;
};

/// Triangular connectivity classes (K₃). Vertices on no triangle are singletons.
VertexPartition k3_components(const UndirectedGraph& g, const Worklist& order = {});

/// N₃: w₃(e) = |N(u) ∩ N(v)|, the number of triangles through e.
EdgeNetwork triangular_network(const UndirectedGraph& g);

/// t(v), triangles at v, derived from w₃ as half the incident weight sum.
/// Throws ConsistencyError if some sum is odd.
std::vector<std::uint64_t> triangle_count_per_vertex(const UndirectedGraph& g);
std::vector<std::uint64_t> triangle_count_per_vertex(const UndirectedGraph& g,
                                                     const EdgeNetwork& triangular);

/// Edge triangular connectivity classes (L₃ on edges).
///
/// Worklist over edges; an assigned edge is tombstoned and drops out of every
/// later neighbourhood intersection, so it never re-enters the worklist.
EdgePartition l3_edge_classes(const UndirectedGraph& g, const Worklist& order = {});

/// Vertex relation induced by an edge partition: u ~ v iff u = v or some
/// nontrivial class (two or more edges) has an edge at u and an edge at v.
/// Not transitive in general.
class InducedVertexRelation {
 public:
  InducedVertexRelation(const UndirectedGraph& g, const EdgePartition& classes);
  bool related(Vertex u, Vertex v) const;
  /// Nontrivial classes touching v, increasing.
  std::span<const std::uint32_t> classes_at(Vertex v) const { return classes_at_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> classes_at_;
};

/// u L₃ v for a partition produced by l3_edge_classes(g).
bool l3_vertex_related(const UndirectedGraph& g, const EdgePartition& classes, Vertex u, Vertex v);

/// Directed triangles on an arc (u,v), counted over third vertices w:
/// cyclic (v,w),(w,u); transitive (u,w),(w,v); input (w,u),(w,v);
/// output (u,w),(v,w). One w may count towards several types.
struct TriangleTypeCounts {
  std::uint32_t cyc = 0;
  std::uint32_t tra = 0;
  std::uint32_t inp = 0;
  std::uint32_t out = 0;
  friend bool operator==(const TriangleTypeCounts&, const TriangleTypeCounts&) = default;
};

TriangleTypeCounts classify_directed_triangles(const DirectedGraph& d, ArcId a);
/// Throws GraphError if (tail, head) is not an arc.
TriangleTypeCounts classify_directed_triangles(const DirectedGraph& d, Vertex tail, Vertex head);

struct DirectedTriangleNetworks {
  ArcNetwork cyc;
  ArcNetwork tra;
  ArcNetwork inp;
  ArcNetwork out;
};

DirectedTriangleNetworks directed_triangle_networks(const DirectedGraph& d);

}  // namespace cyclecon
