#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/limits.hpp"
#include "cyclecon/network.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon {

/// A directed (k)-cycle, length 2..k, rotated so the smallest vertex is first.
struct DirectedCycle {
  std::vector<Vertex> vertices;

  static DirectedCycle canonical(std::span<const Vertex> cyclic_order);
  std::size_t length() const noexcept { return vertices.size(); }
  friend auto operator<=>(const DirectedCycle&, const DirectedCycle&) = default;
};

/// An arc (the shortcut) plus a reinforcement path from its tail to its head.
/// `path` lists the path vertices, tail first and head last.
struct TransitiveSemicycle {
  Arc shortcut;
  std::vector<Vertex> path;
  std::size_t length() const noexcept { return path.size(); }  // path arcs + shortcut
  friend auto operator<=>(const TransitiveSemicycle&, const TransitiveSemicycle&) = default;
};

/// Receives cycle vertices in order and the arc ids (arc i leaves vertex i).
using DicycleVisitor = std::function<void(std::span<const Vertex>, std::span<const ArcId>)>;

/// Visits each directed cycle of length 2..k once, found from its minimum-id arc.
void for_each_kcycle(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits,
                     const DicycleVisitor& visit);

std::vector<DirectedCycle> directed_cycles_through_arc(
    const DirectedGraph& d, ArcId a, unsigned k,
    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Transitive (k)-semicycles whose shortcut is a: simple paths tail → head of
/// length 2..k−1, sorted.
std::vector<TransitiveSemicycle> transitive_semicycles_on_arc(
    const DirectedGraph& d, ArcId a, unsigned k,
    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// N_F: w_F(a) = number of (k)-cycles through a.
ArcNetwork feedback_network(const DirectedGraph& d, unsigned k,
                            const EnumerationLimits& limits = EnumerationLimits::from_environment());

struct TransitiveSupportNetworks {
  ArcNetwork transitive;  // N_T: semicycles using the arc as shortcut
  ArcNetwork support;     // N_S: semicycles using the arc on the reinforcement path
};

TransitiveSupportNetworks transitive_support_networks(
    const DirectedGraph& d, unsigned k,
    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Cₖ classes: strong components of (V, A_F).
VertexPartition ck_components(const DirectedGraph& d, unsigned k,
                              const EnumerationLimits& limits = EnumerationLimits::from_environment());
VertexPartition ck_components(const DirectedGraph& d, const ArcNetwork& feedback);

/// Dₖ arc classes: union-find over the arc set of every (k)-cycle.
ArcPartition dk_arc_classes(const DirectedGraph& d, unsigned k,
                            const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Arcs on some directed cycle but on no (k)-cycle, increasing ids.
std::vector<ArcId> k_long_arcs(const DirectedGraph& d, unsigned k,
                               const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Quotient of a digraph by the Cₖ classes.
struct ReductionGraph {
  VertexPartition classes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // (X, Y), X ≠ Y, sorted, unique

  DirectedGraph as_graph() const;
  bool is_acyclic() const;
};

ReductionGraph cyclic_reduction(const DirectedGraph& d, unsigned k,
                                const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Sₖ classes by greatest-fixpoint pruning.
///
/// Starting from the whole arc set, repeatedly keep only arcs inside a strong
/// component whose underlying edge lies on a (k)-gone of the current
/// underlying graph or whose reverse arc survives (a 2-cycle), until nothing
/// changes. The surviving strong components
/// are the maximal strongly connected k-gonal subgraphs.
VertexPartition sk_components(const DirectedGraph& d, unsigned k,
                              const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Arcs that are the shortcut of at least one transitive (k)-semicycle.
std::vector<ArcId> k_transitive_arcs(const DirectedGraph& d, unsigned k,
                                     const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// {v : u Tₖ v}, increasing, u included.
std::vector<Vertex> tk_reachability(const DirectedGraph& d, unsigned k, Vertex u,
                                    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// T̂ₖ classes: strong components over the k-transitive arcs.
VertexPartition mutual_tk_classes(const DirectedGraph& d, unsigned k,
                                  const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Deletes the arcs of the directed path v₀ → v₁ → … → v_r.
///
/// Every arc of the path must be the shortcut of a transitive triangle; under
/// that condition reachability is unchanged. Throws GraphError if the
/// sequence is not a simple path of D or some arc has no two-arc bypass.
DirectedGraph remove_transitive_path(const DirectedGraph& d, std::span<const Vertex> path);

}  // namespace cyclecon
