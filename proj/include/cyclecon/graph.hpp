#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclecon/partition.hpp"

namespace cyclecon {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using ArcId = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct BuildOptions {
  /// Reject loops and duplicates instead of dropping them.
  bool strict = false;
};

/// What the non-strict builder discarded.
struct BuildReport {
  std::size_t dropped_loops = 0;
  std::size_t dropped_duplicates = 0;
};

/// Simple undirected graph in CSR form. Edge ids follow lexicographic order
/// of (u, v) with u < v; every neighbour list is strictly increasing and
/// carries the id of the connecting edge alongside.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  /// Edge ids parallel to neighbors(u).
  std::span<const EdgeId> incident_edges(Vertex u) const {
    return {edge_ids_.data() + offsets_[u], edge_ids_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  std::size_t max_degree() const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend UndirectedGraph build_undirected(std::size_t, std::span<const VertexPair>,
                                          BuildOptions, BuildReport*);
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Edge> edges_;
};

/// Simple loopless digraph. Arc ids follow lexicographic (tail, head) order.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  std::size_t order() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t size() const noexcept { return arcs_.size(); }

  std::span<const Vertex> out_neighbors(Vertex u) const {
    return {out_targets_.data() + out_offsets_[u], out_targets_.data() + out_offsets_[u + 1]};
  }
  /// Out-arcs of u are the contiguous id range [out_offsets_[u], out_offsets_[u+1]).
  ArcId first_out_arc(Vertex u) const { return out_offsets_[u]; }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  /// Arc ids parallel to in_neighbors(v).
  std::span<const ArcId> in_arcs(Vertex v) const {
    return {in_arc_ids_.data() + in_offsets_[v], in_arc_ids_.data() + in_offsets_[v + 1]};
  }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return find_arc(tail, head).has_value(); }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  friend DirectedGraph build_directed(std::size_t, std::span<const VertexPair>, BuildOptions,
                                      BuildReport*);
  std::vector<std::uint32_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::uint32_t> in_offsets_;
  std::vector<Vertex> in_sources_;
  std::vector<ArcId> in_arc_ids_;
  std::vector<Arc> arcs_;
};

/// Builds a simple undirected graph; pairs are unordered.
/// Throws GraphError on an out-of-range endpoint, or on a loop/duplicate when strict.
UndirectedGraph build_undirected(std::size_t n, std::span<const VertexPair> pairs,
                                 BuildOptions options = {}, BuildReport* report = nullptr);

DirectedGraph build_directed(std::size_t n, std::span<const VertexPair> arcs,
                             BuildOptions options = {}, BuildReport* report = nullptr);

/// Mixed graph to digraph: every edge {u,v} becomes the arcs (u,v) and (v,u).
DirectedGraph expand_mixed(std::size_t n, std::span<const VertexPair> edges,
                           std::span<const VertexPair> arcs, BuildOptions options = {},
                           BuildReport* report = nullptr);

/// Underlying undirected graph (arc directions forgotten, opposite pairs merged).
UndirectedGraph underlying_graph(const DirectedGraph& d);

/// Spanning subgraph keeping only the listed edges / arcs.
UndirectedGraph edge_subgraph(const UndirectedGraph& g, std::span<const EdgeId> keep);
DirectedGraph arc_subgraph(const DirectedGraph& d, std::span<const ArcId> keep);

/// D with the given arcs deleted; no precondition on which arcs.
DirectedGraph remove_arcs(const DirectedGraph& d, std::span<const ArcId> arcs);

/// N(u) ∩ N(v) by a linear merge of the sorted neighbour lists.
std::vector<Vertex> neighbor_intersection(const UndirectedGraph& g, Vertex u, Vertex v);

/// Size of a sorted-sequence intersection without materializing it.
std::size_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);

VertexPartition connected_components(const UndirectedGraph& g);

/// Classes of mutual reachability (Tarjan, iterative).
VertexPartition strong_components(const DirectedGraph& d);

/// Vertices reachable from u by a walk, u included, increasing order.
std::vector<Vertex> reachable_set(const DirectedGraph& d, Vertex u);

/// Biconnected blocks of an undirected graph. A pair of distinct vertices is
/// cocyclic iff they share a block with at least two edges; a single-edge block
/// is a bridge and carries no cycle.
class BiconnectedBlocks {
 public:
  explicit BiconnectedBlocks(const UndirectedGraph& g);

  std::size_t block_count() const noexcept { return block_edge_count_.size(); }
  std::uint32_t block_of_edge(EdgeId e) const { return block_of_edge_[e]; }
  std::size_t block_edge_count(std::uint32_t b) const { return block_edge_count_[b]; }
  /// Blocks containing v, increasing.
  std::span<const std::uint32_t> blocks_of_vertex(Vertex v) const { return blocks_of_vertex_[v]; }
  bool is_bridge(EdgeId e) const { return block_edge_count_[block_of_edge_[e]] == 1; }

  bool cocyclic(Vertex u, Vertex v) const;

 private:
  std::vector<std::uint32_t> block_of_edge_;
  std::vector<std::size_t> block_edge_count_;
  std::vector<std::vector<std::uint32_t>> blocks_of_vertex_;
};

/// One-shot form of BiconnectedBlocks::cocyclic.
bool cocyclic(const UndirectedGraph& g, Vertex u, Vertex v);

}  // namespace cyclecon
