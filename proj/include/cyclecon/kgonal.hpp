#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/limits.hpp"
#include "cyclecon/network.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon {

/// One (k)-gone, vertices in cyclic order. Canonical form starts at the
/// smallest vertex and runs towards its smaller neighbour on the cycle.
struct CycleSubgraph {
  std::vector<Vertex> vertices;

  static CycleSubgraph canonical(std::span<const Vertex> cyclic_order);
  std::size_t length() const noexcept { return vertices.size(); }
  friend auto operator<=>(const CycleSubgraph&, const CycleSubgraph&) = default;
};

/// Called once per (k)-gone with its vertices in cyclic order and the ids of
/// its edges (same length; edge i joins vertex i and vertex i+1 mod s).
using KgoneVisitor = std::function<void(std::span<const Vertex>, std::span<const EdgeId>)>;

/// Visits every (k)-gone of g exactly once. Each cycle is found from its
/// minimum-id edge by a depth-bounded path search over higher-id edges.
void for_each_kgone(const UndirectedGraph& g, unsigned k, const EnumerationLimits& limits,
                    const KgoneVisitor& visit);

/// All (k)-gones through e, canonical and sorted.
std::vector<CycleSubgraph> cycles_through_edge(
    const UndirectedGraph& g, EdgeId e, unsigned k,
    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Nₖ: wₖ(e) = number of (k)-gones through e. For k = 3 equals N₃.
EdgeNetwork kgonal_network(const UndirectedGraph& g, unsigned k,
                           const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Kₖ classes as connected components of (V, Eₖ).
VertexPartition kk_components(const UndirectedGraph& g, unsigned k,
                              const EnumerationLimits& limits = EnumerationLimits::from_environment());
VertexPartition kk_components(const UndirectedGraph& g, const EdgeNetwork& kgonal);

/// Lₖ edge classes: union-find over the edge set of every (k)-gone.
EdgePartition lk_edge_classes(const UndirectedGraph& g, unsigned k,
                              const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Bₖ = B ∩ Kₖ, prepared for repeated queries.
class BkRelation {
 public:
  BkRelation(const UndirectedGraph& g, unsigned k,
             const EnumerationLimits& limits = EnumerationLimits::from_environment());
  bool related(Vertex u, Vertex v) const { return u == v || (kk_.same(u, v) && blocks_.cocyclic(u, v)); }
  const VertexPartition& kk() const noexcept { return kk_; }

 private:
  BiconnectedBlocks blocks_;
  VertexPartition kk_;
};

bool bk_related(const UndirectedGraph& g, unsigned k, Vertex u, Vertex v,
                const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Everett's k-decomposition: nontrivial Kₖ classes plus bridges, the
/// connected components of G restricted to the leftover vertices. Both lists
/// are ordered by smallest member; members increase.
struct EverettDecomposition {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::vector<Vertex>> bridges;

  /// Components and bridges as one vertex partition.
  VertexPartition to_partition(std::size_t n) const;
};

EverettDecomposition everett_decomposition(
    const UndirectedGraph& g, unsigned k,
    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Σ_{i=3}^{min(k,r)} (r−2)(r−3)⋯(r−i+1): (k)-gones through an edge of K_r.
std::uint64_t clique_weight_lower_bound(unsigned r, unsigned k);

}  // namespace cyclecon
