#include "cyclecon/directed.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclecon/errors.hpp"
#include "cyclecon/kgonal.hpp"
#include "cyclecon/union_find.hpp"
#include "path_search.hpp"

namespace cyclecon {

DirectedCycle DirectedCycle::canonical(std::span<const Vertex> cyclic_order) {
  DirectedCycle c;
  if (cyclic_order.empty()) return c;
  auto min_it = std::min_element(cyclic_order.begin(), cyclic_order.end());
  c.vertices.assign(min_it, cyclic_order.end());
  c.vertices.insert(c.vertices.end(), cyclic_order.begin(), min_it);
  return c;
}

void for_each_kcycle(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits,
                     const DicycleVisitor& visit) {
  limits.check_length(k, 2);
  Budget budget(limits, "(k)-cycle enumeration");
  detail::PathScratch scratch(d.order());
  std::vector<Vertex> cycle;
  std::vector<ArcId> arcs;
  for (ArcId a = 0; a < d.size(); ++a) {
    const auto [u, v] = d.arc(a);
    detail::for_each_directed_path(
        d, v, u, 1, k - 1, [a](ArcId b) { return b > a; },
        [&](std::span<const Vertex> path, std::span<const std::uint32_t> path_arcs) {
          budget.charge();
          // u → v by a, then v → … → u; drop the repeated u at the end.
          cycle.assign(1, u);
          cycle.insert(cycle.end(), path.begin(), path.end() - 1);
          arcs.assign(1, a);
          arcs.insert(arcs.end(), path_arcs.begin(), path_arcs.end());
          visit(cycle, arcs);
        },
        scratch);
  }
}

std::vector<DirectedCycle> directed_cycles_through_arc(const DirectedGraph& d, ArcId a, unsigned k,
                                                       const EnumerationLimits& limits) {
  limits.check_length(k, 2);
  if (a >= d.size()) throw std::out_of_range("arc id out of range");
  Budget budget(limits, "cycles through arc");
  detail::PathScratch scratch(d.order());
  std::vector<DirectedCycle> out;
  const auto [u, v] = d.arc(a);
  std::vector<Vertex> cycle;
  detail::for_each_directed_path(
      d, v, u, 1, k - 1, [a](ArcId b) { return b != a; },
      [&](std::span<const Vertex> path, std::span<const std::uint32_t>) {
        budget.charge();
        cycle.assign(1, u);
        cycle.insert(cycle.end(), path.begin(), path.end() - 1);
        out.push_back(DirectedCycle::canonical(cycle));
      },
      scratch);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TransitiveSemicycle> transitive_semicycles_on_arc(const DirectedGraph& d, ArcId a,
                                                              unsigned k,
                                                              const EnumerationLimits& limits) {
  limits.check_length(k, 3);
  if (a >= d.size()) throw std::out_of_range("arc id out of range");
  Budget budget(limits, "transitive semicycles");
  detail::PathScratch scratch(d.order());
  std::vector<TransitiveSemicycle> out;
  const auto arc = d.arc(a);
  detail::for_each_directed_path(
      d, arc.tail, arc.head, 2, k - 1, [a](ArcId b) { return b != a; },
      [&](std::span<const Vertex> path, std::span<const std::uint32_t>) {
        budget.charge();
        out.push_back({arc, std::vector<Vertex>(path.begin(), path.end())});
      },
      scratch);
  std::sort(out.begin(), out.end());
  return out;
}

ArcNetwork feedback_network(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits) {
  std::vector<std::uint64_t> w(d.size(), 0);
  for_each_kcycle(d, k, limits, [&](std::span<const Vertex>, std::span<const ArcId> arcs) {
    for (ArcId a : arcs) ++w[a];
  });
  return ArcNetwork(std::move(w));
}

TransitiveSupportNetworks transitive_support_networks(const DirectedGraph& d, unsigned k,
                                                      const EnumerationLimits& limits) {
  limits.check_length(k, 3);
  Budget budget(limits, "transitive semicycle enumeration");
  detail::PathScratch scratch(d.order());
  std::vector<std::uint64_t> wt(d.size(), 0), ws(d.size(), 0);
  for (ArcId a = 0; a < d.size(); ++a) {
    const auto [u, v] = d.arc(a);
    detail::for_each_directed_path(
        d, u, v, 2, k - 1, [a](ArcId b) { return b != a; },
        [&](std::span<const Vertex>, std::span<const std::uint32_t> path_arcs) {
          budget.charge();
          ++wt[a];
          for (ArcId b : path_arcs) ++ws[b];
        },
        scratch);
  }
  return {ArcNetwork(std::move(wt)), ArcNetwork(std::move(ws))};
}

VertexPartition ck_components(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits) {
  return ck_components(d, feedback_network(d, k, limits));
}

VertexPartition ck_components(const DirectedGraph& d, const ArcNetwork& feedback) {
  return strong_components(member_graph(d, feedback));
}

ArcPartition dk_arc_classes(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits) {
  DisjointSets sets(d.size());
  for_each_kcycle(d, k, limits, [&](std::span<const Vertex>, std::span<const ArcId> arcs) {
    for (std::size_t i = 1; i < arcs.size(); ++i) sets.unite(arcs[0], arcs[i]);
  });
  auto labels = sets.labels();
  return ArcPartition::from_labels(labels);
}

std::vector<ArcId> k_long_arcs(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits) {
  auto feedback = feedback_network(d, k, limits);
  auto strong = strong_components(d);
  std::vector<ArcId> out;
  for (ArcId a = 0; a < d.size(); ++a) {
    if (strong.same(d.arc(a).tail, d.arc(a).head) && !feedback.contains(a)) out.push_back(a);
  }
  return out;
}

DirectedGraph ReductionGraph::as_graph() const {
  std::vector<VertexPair> pairs(arcs.begin(), arcs.end());
  return build_directed(classes.count(), pairs);
}

bool ReductionGraph::is_acyclic() const {
  // Kahn's algorithm: every class gets removed iff there is no cycle.
  const std::size_t n = classes.count();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::uint32_t>> out(n);
  for (auto [x, y] : arcs) {
    out[x].push_back(y);
    ++indegree[y];
  }
  std::vector<std::uint32_t> ready;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push_back(x);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto x = ready.back();
    ready.pop_back();
    ++removed;
    for (auto y : out[x]) {
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  return removed == n;
}

ReductionGraph cyclic_reduction(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits) {
  ReductionGraph r;
  r.classes = ck_components(d, k, limits);
  for (auto a : d.arcs()) {
    auto x = r.classes[a.tail];
    auto y = r.classes[a.head];
    if (x != y) r.arcs.emplace_back(x, y);
  }
  std::sort(r.arcs.begin(), r.arcs.end());
  r.arcs.erase(std::unique(r.arcs.begin(), r.arcs.end()), r.arcs.end());
  return r;
}

VertexPartition sk_components(const DirectedGraph& d, unsigned k, const EnumerationLimits& limits) {
  limits.check_length(k, 3);
  std::vector<std::uint8_t> active(d.size(), 1);
  auto active_ids = [&] {
    std::vector<ArcId> ids;
    for (ArcId a = 0; a < d.size(); ++a) {
      if (active[a]) ids.push_back(a);
    }
    return ids;
  };
  for (;;) {
    auto current = arc_subgraph(d, active_ids());
    auto strong = strong_components(current);
    bool changed = false;
    std::vector<VertexPair> inner;
    for (ArcId a = 0; a < d.size(); ++a) {
      if (!active[a]) continue;
      if (!strong.same(d.arc(a).tail, d.arc(a).head)) {
        active[a] = 0;
        changed = true;
      } else {
        inner.emplace_back(d.arc(a).tail, d.arc(a).head);
      }
    }
    // Components are vertex-disjoint with no edges between them, so every
    // (k)-gone of the combined underlying graph lies inside one component.
    auto underlying = build_undirected(d.order(), inner);
    auto net = kgonal_network(underlying, k, limits);
    for (ArcId a = 0; a < d.size(); ++a) {
      if (!active[a]) continue;
      const auto [x, y] = d.arc(a);
      auto back = d.find_arc(y, x);
      const bool two_cycle = back && active[*back];
      if (!two_cycle && !net.contains(*underlying.find_edge(x, y))) {
        active[a] = 0;
        changed = true;
      }
    }
    if (!changed) return strong_components(arc_subgraph(d, active_ids()));
  }
}

std::vector<ArcId> k_transitive_arcs(const DirectedGraph& d, unsigned k,
                                     const EnumerationLimits& limits) {
  return transitive_support_networks(d, k, limits).transitive.members();
}

std::vector<Vertex> tk_reachability(const DirectedGraph& d, unsigned k, Vertex u,
                                    const EnumerationLimits& limits) {
  if (u >= d.order()) throw GraphError("vertex out of range");
  auto arcs = k_transitive_arcs(d, k, limits);
  return reachable_set(arc_subgraph(d, arcs), u);
}

VertexPartition mutual_tk_classes(const DirectedGraph& d, unsigned k,
                                  const EnumerationLimits& limits) {
  auto arcs = k_transitive_arcs(d, k, limits);
  return strong_components(arc_subgraph(d, arcs));
}

DirectedGraph remove_transitive_path(const DirectedGraph& d, std::span<const Vertex> path) {
  if (path.size() < 2) throw GraphError("a transitive path needs at least one arc");
  std::vector<std::uint8_t> seen(d.order(), 0);
  for (Vertex v : path) {
    if (v >= d.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw GraphError("not a path: vertex " + std::to_string(v) + " repeats");
    seen[v] = 1;
  }
  std::vector<ArcId> doomed;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto a = d.find_arc(path[i], path[i + 1]);
    if (!a) {
      throw GraphError("not a path: (" + std::to_string(path[i]) + ", " +
                       std::to_string(path[i + 1]) + ") is not an arc");
    }
    if (sorted_intersection_size(d.out_neighbors(path[i]), d.in_neighbors(path[i + 1])) == 0) {
      throw GraphError("arc (" + std::to_string(path[i]) + ", " + std::to_string(path[i + 1]) +
                       ") has no two-arc bypass");
    }
    doomed.push_back(*a);
  }
  return remove_arcs(d, doomed);
}

}  // namespace cyclecon
