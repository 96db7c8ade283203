#include "cyclecon/triangular.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cyclecon/errors.hpp"

namespace cyclecon {

namespace {

// Pops according to the discipline; the deque doubles as queue and stack.
template <class T>
T take(std::deque<T>& list, Worklist::Discipline discipline) {
  T x;
  if (discipline == Worklist::Discipline::fifo) {
    x = list.front();
    list.pop_front();
  } else {
    x = list.back();
    list.pop_back();
  }
  return x;
}

std::vector<std::uint32_t> seeds_for(const Worklist& order, std::size_t count) {
  if (!order.seed_order.empty()) {
    if (order.seed_order.size() != count) {
      throw std::invalid_argument("seed order must list every element exactly once");
    }
    return order.seed_order;
  }
  std::vector<std::uint32_t> seeds(count);
  for (std::uint32_t i = 0; i < count; ++i) seeds[i] = i;
  return seeds;
}

}  // namespace

VertexPartition k3_components(const UndirectedGraph& g, const Worklist& order) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> label(n, kUnassigned);
  std::vector<std::uint8_t> listed(n, 0);
  std::deque<Vertex> list;
  std::uint32_t classes = 0;

  auto enqueue = [&](Vertex w) {
    if (label[w] == kUnassigned && !listed[w]) {
      listed[w] = 1;
      list.push_back(w);
    }
  };

  for (Vertex seed : seeds_for(order, n)) {
    if (label[seed] != kUnassigned) continue;
    const std::uint32_t c = classes++;
    enqueue(seed);
    while (!list.empty()) {
      Vertex u = take(list, order.discipline);
      label[u] = c;
      auto nu = g.neighbors(u);
      for (Vertex v : nu) {
        auto nv = g.neighbors(v);
        bool common = false;
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
          if (nu[i] < nv[j]) {
            ++i;
          } else if (nv[j] < nu[i]) {
            ++j;
          } else {
            common = true;
            enqueue(nu[i]);
            ++i;
            ++j;
          }
        }
        if (common) enqueue(v);
      }
    }
  }
  return VertexPartition::from_labels(label);
}

EdgeNetwork triangular_network(const UndirectedGraph& g) {
  std::vector<std::uint64_t> w(g.size(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    w[e] = sorted_intersection_size(g.neighbors(g.edge(e).u), g.neighbors(g.edge(e).v));
  }
  return EdgeNetwork(std::move(w));
}

std::vector<std::uint64_t> triangle_count_per_vertex(const UndirectedGraph& g) {
  return triangle_count_per_vertex(g, triangular_network(g));
}

std::vector<std::uint64_t> triangle_count_per_vertex(const UndirectedGraph& g,
                                                     const EdgeNetwork& triangular) {
  std::vector<std::uint64_t> t(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::uint64_t sum = 0;
    for (EdgeId e : g.incident_edges(v)) sum += triangular.weight(e);
    if (sum % 2 != 0) {
      throw ConsistencyError("odd triangle weight sum " + std::to_string(sum) + " at vertex " +
                             std::to_string(v));
    }
    t[v] = sum / 2;
  }
  return t;
}

EdgePartition l3_edge_classes(const UndirectedGraph& g, const Worklist& order) {
  const std::size_t m = g.size();
  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> label(m, kUnassigned);  // doubles as the tombstone flag
  std::vector<std::uint8_t> listed(m, 0);
  std::deque<EdgeId> list;
  std::uint32_t classes = 0;

  auto enqueue = [&](EdgeId f) {
    if (label[f] == kUnassigned && !listed[f]) {
      listed[f] = 1;
      list.push_back(f);
    }
  };

  for (EdgeId seed : seeds_for(order, m)) {
    if (label[seed] != kUnassigned) continue;
    const std::uint32_t c = classes++;
    enqueue(seed);
    while (!list.empty()) {
      EdgeId e = take(list, order.discipline);
      label[e] = c;
      const auto [u, v] = g.edge(e);
      auto nu = g.neighbors(u);
      auto eu = g.incident_edges(u);
      auto nv = g.neighbors(v);
      auto ev = g.incident_edges(v);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
          ++i;
        } else if (nv[j] < nu[i]) {
          ++j;
        } else {
          // w is a current common neighbour only if neither edge is removed yet.
          if (label[eu[i]] == kUnassigned && label[ev[j]] == kUnassigned) {
            enqueue(eu[i]);
            enqueue(ev[j]);
          }
          ++i;
          ++j;
        }
      }
    }
  }
  return EdgePartition::from_labels(label);
}

InducedVertexRelation::InducedVertexRelation(const UndirectedGraph& g, const EdgePartition& classes)
    : classes_at_(g.order()) {
  auto sizes = classes.class_sizes();
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& list = classes_at_[v];
    for (EdgeId e : g.incident_edges(v)) {
      if (sizes[classes[e]] >= 2) list.push_back(classes[e]);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool InducedVertexRelation::related(Vertex u, Vertex v) const {
  if (u == v) return true;
  return sorted_intersection_size(classes_at_[u], classes_at_[v]) > 0;
}

bool l3_vertex_related(const UndirectedGraph& g, const EdgePartition& classes, Vertex u, Vertex v) {
  return InducedVertexRelation(g, classes).related(u, v);
}

TriangleTypeCounts classify_directed_triangles(const DirectedGraph& d, ArcId a) {
  const auto [u, v] = d.arc(a);
  TriangleTypeCounts c;
  c.cyc = static_cast<std::uint32_t>(sorted_intersection_size(d.out_neighbors(v), d.in_neighbors(u)));
  c.tra = static_cast<std::uint32_t>(sorted_intersection_size(d.out_neighbors(u), d.in_neighbors(v)));
  c.inp = static_cast<std::uint32_t>(sorted_intersection_size(d.in_neighbors(u), d.in_neighbors(v)));
  c.out = static_cast<std::uint32_t>(sorted_intersection_size(d.out_neighbors(u), d.out_neighbors(v)));
  return c;
}

TriangleTypeCounts classify_directed_triangles(const DirectedGraph& d, Vertex tail, Vertex head) {
  auto a = d.find_arc(tail, head);
  if (!a) {
    throw GraphError("(" + std::to_string(tail) + ", " + std::to_string(head) + ") is not an arc");
  }
  return classify_directed_triangles(d, *a);
}

DirectedTriangleNetworks directed_triangle_networks(const DirectedGraph& d) {
  std::vector<std::uint64_t> cyc(d.size()), tra(d.size()), inp(d.size()), out(d.size());
  for (ArcId a = 0; a < d.size(); ++a) {
    auto c = classify_directed_triangles(d, a);
    cyc[a] = c.cyc;
    tra[a] = c.tra;
    inp[a] = c.inp;
    out[a] = c.out;
  }
  return {ArcNetwork(std::move(cyc)), ArcNetwork(std::move(tra)), ArcNetwork(std::move(inp)),
          ArcNetwork(std::move(out))};
}

}  // namespace cyclecon
