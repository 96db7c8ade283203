#pragma once

// Depth-bounded simple-path enumeration shared by the undirected (k)-gone and
// directed (k)-cycle / semicycle code. Not part of the public API.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cyclecon/graph.hpp"

namespace cyclecon::detail {

/// Reusable per-thread scratch: BFS distances to the target and on-path marks.
struct PathScratch {
  static constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

  explicit PathScratch(std::size_t n) : dist(n, kFar), on_path(n, 0) {}

  std::vector<std::uint32_t> dist;
  std::vector<std::uint8_t> on_path;
  std::vector<Vertex> touched;
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> links;  // edge or arc ids along the current path

  void clear_distances() {
    for (auto v : touched) dist[v] = kFar;
    touched.clear();
  }
};

/// Enumerates simple paths source → target in an undirected graph with
/// min_len ≤ length ≤ max_len, using only edges accepted by `edge_ok`.
/// `visit(vertices, edges)` receives the path (source first). Distances to the
/// target over accepted edges prune branches that cannot close in time.
template <class EdgeOk, class Visit>
void for_each_undirected_path(const UndirectedGraph& g, Vertex source, Vertex target,
                              unsigned min_len, unsigned max_len, EdgeOk&& edge_ok, Visit&& visit,
                              PathScratch& s) {
  if (max_len < min_len || max_len == 0) return;
  s.clear_distances();
  s.dist[target] = 0;
  s.touched.push_back(target);
  for (std::size_t head = 0; head < s.touched.size(); ++head) {
    Vertex x = s.touched[head];
    if (s.dist[x] + 1 > max_len) continue;
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (s.dist[nb[i]] != PathScratch::kFar || !edge_ok(ids[i])) continue;
      s.dist[nb[i]] = s.dist[x] + 1;
      s.touched.push_back(nb[i]);
    }
  }
  if (s.dist[source] > max_len) return;

  s.vertices.assign(1, source);
  s.links.clear();
  s.on_path[source] = 1;
  auto dfs = [&](auto&& self, Vertex x, unsigned depth) -> void {
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex y = nb[i];
      if (s.on_path[y] || !edge_ok(ids[i])) continue;
      if (depth + 1 + s.dist[y] > max_len || s.dist[y] == PathScratch::kFar) continue;
      if (y == target) {
        if (depth + 1 >= min_len) {
          s.vertices.push_back(y);
          s.links.push_back(ids[i]);
          visit(std::span<const Vertex>(s.vertices), std::span<const std::uint32_t>(s.links));
          s.vertices.pop_back();
          s.links.pop_back();
        }
        continue;
      }
      s.on_path[y] = 1;
      s.vertices.push_back(y);
      s.links.push_back(ids[i]);
      self(self, y, depth + 1);
      s.vertices.pop_back();
      s.links.pop_back();
      s.on_path[y] = 0;
    }
  };
  dfs(dfs, source, 0);
  s.on_path[source] = 0;
}

/// Directed counterpart: follows out-arcs, `arc_ok(arc_id)` filters arcs.
template <class ArcOk, class Visit>
void for_each_directed_path(const DirectedGraph& d, Vertex source, Vertex target, unsigned min_len,
                            unsigned max_len, ArcOk&& arc_ok, Visit&& visit, PathScratch& s) {
  if (max_len < min_len || max_len == 0) return;
  s.clear_distances();
  s.dist[target] = 0;
  s.touched.push_back(target);
  for (std::size_t head = 0; head < s.touched.size(); ++head) {
    Vertex x = s.touched[head];
    if (s.dist[x] + 1 > max_len) continue;
    auto nb = d.in_neighbors(x);
    auto ids = d.in_arcs(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (s.dist[nb[i]] != PathScratch::kFar || !arc_ok(ids[i])) continue;
      s.dist[nb[i]] = s.dist[x] + 1;
      s.touched.push_back(nb[i]);
    }
  }
  if (s.dist[source] > max_len) return;

  s.vertices.assign(1, source);
  s.links.clear();
  s.on_path[source] = 1;
  auto dfs = [&](auto&& self, Vertex x, unsigned depth) -> void {
    auto nb = d.out_neighbors(x);
    ArcId first = d.first_out_arc(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex y = nb[i];
      ArcId a = first + static_cast<ArcId>(i);
      if (s.on_path[y] || !arc_ok(a)) continue;
      if (s.dist[y] == PathScratch::kFar || depth + 1 + s.dist[y] > max_len) continue;
      if (y == target) {
        if (depth + 1 >= min_len) {
          s.vertices.push_back(y);
          s.links.push_back(a);
          visit(std::span<const Vertex>(s.vertices), std::span<const std::uint32_t>(s.links));
          s.vertices.pop_back();
          s.links.pop_back();
        }
        continue;
      }
      s.on_path[y] = 1;
      s.vertices.push_back(y);
      s.links.push_back(a);
      self(self, y, depth + 1);
      s.vertices.pop_back();
      s.links.pop_back();
      s.on_path[y] = 0;
    }
  };
  dfs(dfs, source, 0);
  s.on_path[source] = 0;
}

}  // namespace cyclecon::detail
