#include "cyclecon/kgonal.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclecon/union_find.hpp"
#include "path_search.hpp"

namespace cyclecon {

CycleSubgraph CycleSubgraph::canonical(std::span<const Vertex> cyclic_order) {
  const std::size_t s = cyclic_order.size();
  CycleSubgraph c;
  if (s == 0) return c;
  auto min_it = std::min_element(cyclic_order.begin(), cyclic_order.end());
  const std::size_t start = static_cast<std::size_t>(min_it - cyclic_order.begin());
  const Vertex next = cyclic_order[(start + 1) % s];
  const Vertex prev = cyclic_order[(start + s - 1) % s];
  c.vertices.reserve(s);
  if (next <= prev) {
    for (std::size_t i = 0; i < s; ++i) c.vertices.push_back(cyclic_order[(start + i) % s]);
  } else {
    for (std::size_t i = 0; i < s; ++i) c.vertices.push_back(cyclic_order[(start + s - i) % s]);
  }
  return c;
}

void for_each_kgone(const UndirectedGraph& g, unsigned k, const EnumerationLimits& limits,
                    const KgoneVisitor& visit) {
  limits.check_length(k, 3);
  Budget budget(limits, "(k)-gone enumeration");
  detail::PathScratch scratch(g.order());
  std::vector<EdgeId> cycle_edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    detail::for_each_undirected_path(
        g, u, v, 2, k - 1, [e](EdgeId f) { return f > e; },
        [&](std::span<const Vertex> path, std::span<const std::uint32_t> edges) {
          budget.charge();
          // path runs u → … → v; the cycle closes with e from v back to u.
          cycle_edges.assign(edges.begin(), edges.end());
          cycle_edges.push_back(e);
          visit(path, cycle_edges);
        },
        scratch);
  }
}

std::vector<CycleSubgraph> cycles_through_edge(const UndirectedGraph& g, EdgeId e, unsigned k,
                                               const EnumerationLimits& limits) {
  limits.check_length(k, 3);
  if (e >= g.size()) throw std::out_of_range("edge id out of range");
  Budget budget(limits, "cycles through edge");
  detail::PathScratch scratch(g.order());
  std::vector<CycleSubgraph> out;
  const auto [u, v] = g.edge(e);
  detail::for_each_undirected_path(
      g, u, v, 2, k - 1, [e](EdgeId f) { return f != e; },
      [&](std::span<const Vertex> path, std::span<const std::uint32_t>) {
        budget.charge();
        out.push_back(CycleSubgraph::canonical(path));
      },
      scratch);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeNetwork kgonal_network(const UndirectedGraph& g, unsigned k, const EnumerationLimits& limits) {
  std::vector<std::uint64_t> w(g.size(), 0);
  for_each_kgone(g, k, limits, [&](std::span<const Vertex>, std::span<const EdgeId> edges) {
    for (EdgeId f : edges) ++w[f];
  });
  return EdgeNetwork(std::move(w));
}

VertexPartition kk_components(const UndirectedGraph& g, unsigned k, const EnumerationLimits& limits) {
  return kk_components(g, kgonal_network(g, k, limits));
}

VertexPartition kk_components(const UndirectedGraph& g, const EdgeNetwork& kgonal) {
  DisjointSets sets(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (kgonal.contains(e)) sets.unite(g.edge(e).u, g.edge(e).v);
  }
  auto labels = sets.labels();
  return VertexPartition::from_labels(labels);
}

EdgePartition lk_edge_classes(const UndirectedGraph& g, unsigned k, const EnumerationLimits& limits) {
  DisjointSets sets(g.size());
  for_each_kgone(g, k, limits, [&](std::span<const Vertex>, std::span<const EdgeId> edges) {
    for (std::size_t i = 1; i < edges.size(); ++i) sets.unite(edges[0], edges[i]);
  });
  auto labels = sets.labels();
  return EdgePartition::from_labels(labels);
}

BkRelation::BkRelation(const UndirectedGraph& g, unsigned k, const EnumerationLimits& limits)
    : blocks_(g), kk_(kk_components(g, k, limits)) {}

bool bk_related(const UndirectedGraph& g, unsigned k, Vertex u, Vertex v,
                const EnumerationLimits& limits) {
  return BkRelation(g, k, limits).related(u, v);
}

VertexPartition EverettDecomposition::to_partition(std::size_t n) const {
  std::vector<std::uint32_t> labels(n, 0);
  std::uint32_t next = 0;
  for (const auto* list : {&components, &bridges}) {
    for (const auto& members : *list) {
      for (Vertex v : members) labels[v] = next;
      ++next;
    }
  }
  return VertexPartition::from_labels(labels);
}

EverettDecomposition everett_decomposition(const UndirectedGraph& g, unsigned k,
                                           const EnumerationLimits& limits) {
  auto kk = kk_components(g, k, limits);
  EverettDecomposition out;
  std::vector<std::uint8_t> in_component(g.order(), 0);
  for (auto& members : kk.classes()) {
    if (members.size() < 2) continue;
    for (Vertex v : members) in_component[v] = 1;
    out.components.push_back(std::move(members));
  }
  DisjointSets sets(g.order());
  for (auto e : g.edges()) {
    if (!in_component[e.u] && !in_component[e.v]) sets.unite(e.u, e.v);
  }
  std::vector<std::int64_t> slot(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_component[v]) continue;
    auto root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.bridges.size());
      out.bridges.emplace_back();
    }
    out.bridges[static_cast<std::size_t>(slot[root])].push_back(v);
  }
  return out;
}

std::uint64_t clique_weight_lower_bound(unsigned r, unsigned k) {
  std::uint64_t sum = 0;
  const unsigned top = std::min(k, r);
  for (unsigned i = 3; i <= top; ++i) {
    std::uint64_t term = 1;
    for (unsigned j = 2; j + 1 <= i; ++j) term *= r - j;
    sum += term;
  }
  return sum;
}

}  // namespace cyclecon
