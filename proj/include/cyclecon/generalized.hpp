#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/limits.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon {

/// The family H of chain members.
struct FamilySpec {
  enum class Kind { cycles_up_to, cliques_range };
  Kind kind = Kind::cycles_up_to;
  unsigned low = 3;   // shortest cycle / smallest clique
  unsigned high = 3;  // longest cycle / largest clique

  static FamilySpec cycles_up_to(unsigned k) { return {Kind::cycles_up_to, 3, k}; }
  static FamilySpec cliques(unsigned min_size, unsigned max_size) {
    return {Kind::cliques_range, min_size, max_size};
  }
};

/// The family H₀ that consecutive chain members must share.
struct OverlapSpec {
  enum class Kind { shared_vertices, shared_edge, shared_clique };
  Kind kind = Kind::shared_vertices;
  unsigned size = 1;

  /// At least t common vertices ({K₁} for t = 1).
  static OverlapSpec shared_vertices(unsigned t) { return {Kind::shared_vertices, t}; }
  /// A common edge of both members ({K₂}).
  static OverlapSpec shared_edge() { return {Kind::shared_edge, 2}; }
  /// A K_r made of vertices and edges common to both members.
  static OverlapSpec shared_clique(unsigned r) { return {Kind::shared_clique, r}; }
};

/// One subgraph of G isomorphic to a member of H.
struct FamilyMember {
  std::vector<Vertex> vertices;  // increasing
  std::vector<EdgeId> edges;     // increasing
  bool complete = false;         // induces a clique (edges = all pairs)
};

/// Every member of H in G exactly once. Throws BudgetExceeded.
std::vector<FamilyMember> enumerate_family(
    const UndirectedGraph& g, const FamilySpec& spec,
    const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Classes of chain-connected members projected onto vertices.
///
/// Each class is the vertex set covered by one class of members; with a
/// vertex overlap these sets are disjoint, with edge or larger overlaps they
/// may share vertices and the induced vertex relation need not be transitive.
class ChainClasses {
 public:
  ChainClasses(std::size_t n, std::vector<std::vector<Vertex>> classes);

  std::size_t vertex_count() const noexcept { return classes_at_.size(); }
  std::size_t count() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
  std::span<const std::uint32_t> classes_at(Vertex v) const { return classes_at_[v]; }

  /// u = v, or some class contains both.
  bool related(Vertex u, Vertex v) const;
  /// No vertex lies in two classes.
  bool is_partition() const;
  /// Classes plus singletons for uncovered vertices. Throws std::logic_error
  /// when classes overlap.
  VertexPartition to_partition() const;

 private:
  std::vector<std::vector<Vertex>> classes_;
  std::vector<std::vector<std::uint32_t>> classes_at_;
};

/// (H, H₀) connectivity by union-find over overlapping members.
ChainClasses hh0_components(const UndirectedGraph& g, const FamilySpec& family,
                            const OverlapSpec& overlap,
                            const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// (k, r)-clique connectivity: cliques K_{r+1}..K_k sharing a K_r. Members
/// start at K₃ so that (3,1) reproduces K₃ rather than plain connectivity.
ChainClasses kr_clique_components(const UndirectedGraph& g, unsigned k, unsigned r,
                                  const EnumerationLimits& limits = EnumerationLimits::from_environment());

}  // namespace cyclecon
