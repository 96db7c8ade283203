#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon {

/// Nonnegative integer weights over the edges (or arcs) of a base graph.
/// Members are exactly the elements with weight >= 1.
template <class Tag>
class WeightedSubnetwork {
 public:
  WeightedSubnetwork() = default;
  explicit WeightedSubnetwork(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {}

  /// Number of edges/arcs in the base graph.
  std::size_t base_size() const noexcept { return weights_.size(); }
  std::uint64_t weight(std::uint32_t id) const { return weights_[id]; }
  bool contains(std::uint32_t id) const { return weights_[id] > 0; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] > 0) out.push_back(i);
    }
    return out;
  }
  std::size_t member_count() const {
    std::size_t c = 0;
    for (auto w : weights_) c += w > 0;
    return c;
  }
  std::uint64_t total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), std::uint64_t{0});
  }
  bool empty() const { return member_count() == 0; }

  friend bool operator==(const WeightedSubnetwork&, const WeightedSubnetwork&) = default;

 private:
  std::vector<std::uint64_t> weights_;
};

using EdgeNetwork = WeightedSubnetwork<EdgeTag>;
using ArcNetwork = WeightedSubnetwork<ArcTag>;

/// (V, members) as a graph, e.g. G₃ or Gₖ from a network.
inline UndirectedGraph member_graph(const UndirectedGraph& g, const EdgeNetwork& net) {
  auto m = net.members();
  return edge_subgraph(g, m);
}
inline DirectedGraph member_graph(const DirectedGraph& d, const ArcNetwork& net) {
  auto m = net.members();
  return arc_subgraph(d, m);
}

}  // namespace cyclecon
