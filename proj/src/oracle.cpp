#include "cyclecon/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cyclecon::oracle {

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency(const UndirectedGraph& g) {
  Matrix adj(g.order(), std::vector<bool>(g.order(), false));
  for (auto e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

Matrix adjacency(const DirectedGraph& d) {
  Matrix adj(d.order(), std::vector<bool>(d.order(), false));
  for (auto a : d.arcs()) adj[a.tail][a.head] = true;
  return adj;
}

// Labels components of an explicit adjacency-list graph by BFS.
std::vector<std::uint32_t> bfs_labels(const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::uint32_t> label(adj.size(), 0xffffffffu);
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] != 0xffffffffu) continue;
    label[s] = next;
    std::vector<std::size_t> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto t : adj[queue[h]]) {
        if (label[t] == 0xffffffffu) {
          label[t] = next;
          queue.push_back(t);
        }
      }
    }
    ++next;
  }
  return label;
}

std::pair<Vertex, Vertex> undirected_key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Cycle ids grouped by a shared key; cycles with a common key are adjacent.
template <class Key>
std::vector<std::uint32_t> cycle_component_labels(const std::vector<std::vector<Key>>& keys_of_cycle) {
  std::map<Key, std::vector<std::size_t>> holders;
  for (std::size_t c = 0; c < keys_of_cycle.size(); ++c) {
    for (const auto& key : keys_of_cycle[c]) holders[key].push_back(c);
  }
  std::vector<std::vector<std::size_t>> adj(keys_of_cycle.size());
  for (auto& [key, list] : holders) {
    for (std::size_t i = 1; i < list.size(); ++i) {
      adj[list[0]].push_back(list[i]);
      adj[list[i]].push_back(list[0]);
    }
  }
  return bfs_labels(adj);
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> cycle_links(const CycleCatalog& catalog) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  for (const auto& c : catalog.cycles) {
    std::vector<std::pair<Vertex, Vertex>> links;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = c[i], b = c[(i + 1) % c.size()];
      links.push_back(catalog.directed ? std::pair{a, b} : undirected_key(a, b));
    }
    out.push_back(std::move(links));
  }
  return out;
}

bool strongly_connected(const std::vector<Vertex>& vertices, const Matrix& adj) {
  if (vertices.size() <= 1) return true;
  for (int dir = 0; dir < 2; ++dir) {
    std::set<Vertex> seen{vertices[0]};
    std::vector<Vertex> stack{vertices[0]};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : vertices) {
        bool linked = dir == 0 ? adj[x][y] : adj[y][x];
        if (linked && !seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
    if (seen.size() != vertices.size()) return false;
  }
  return true;
}

// Is edge {a,b} on a cycle of length ≤ k inside the undirected graph `adj`?
bool edge_on_short_cycle(const Matrix& adj, Vertex a, Vertex b, unsigned k) {
  // Search for a simple path b → a of length 2..k−1 avoiding the edge itself.
  std::vector<bool> used(adj.size(), false);
  used[b] = true;
  auto dfs = [&](auto&& self, Vertex x, unsigned len) -> bool {
    for (Vertex y = 0; y < adj.size(); ++y) {
      if (!adj[x][y]) continue;
      if (y == a) {
        if (len + 1 >= 2 && len + 1 <= k - 1) return true;
        continue;
      }
      if (used[y] || len + 1 >= k - 1) continue;
      used[y] = true;
      if (self(self, y, len + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return dfs(dfs, b, 0);
}

}  // namespace

CycleCatalog enumerate_all_cycles(const UndirectedGraph& g, unsigned k) {
  if (g.order() > kMaxUndirectedOrder) {
    throw std::length_error("oracle cycle catalog limited to " +
                            std::to_string(kMaxUndirectedOrder) + " vertices");
  }
  const auto adj = adjacency(g);
  const std::size_t n = g.order();
  CycleCatalog catalog{false, n, {}};
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  // From each start s, walk only through vertices larger than s; a path that
  // can step back to s is a cycle with minimum s. Keeping path[1] < last
  // discards the mirrored traversal.
  auto dfs = [&](auto&& self, Vertex s) -> void {
    Vertex x = path.back();
    if (path.size() >= 3 && adj[x][s] && path[1] < x) catalog.cycles.push_back(path);
    if (path.size() >= k) return;
    for (Vertex y = s + 1; y < n; ++y) {
      if (!adj[x][y] || used[y]) continue;
      used[y] = true;
      path.push_back(y);
      self(self, s);
      path.pop_back();
      used[y] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    used[s] = true;
    dfs(dfs, s);
    used[s] = false;
  }
  return catalog;
}

CycleCatalog enumerate_all_cycles(const DirectedGraph& d, unsigned k) {
  if (d.order() > kMaxDirectedOrder) {
    throw std::length_error("oracle cycle catalog limited to " +
                            std::to_string(kMaxDirectedOrder) + " vertices");
  }
  const auto adj = adjacency(d);
  const std::size_t n = d.order();
  CycleCatalog catalog{true, n, {}};
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, Vertex s) -> void {
    Vertex x = path.back();
    if (path.size() >= 2 && adj[x][s]) catalog.cycles.push_back(path);
    if (path.size() >= k) return;
    for (Vertex y = s + 1; y < n; ++y) {
      if (!adj[x][y] || used[y]) continue;
      used[y] = true;
      path.push_back(y);
      self(self, s);
      path.pop_back();
      used[y] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    used[s] = true;
    dfs(dfs, s);
    used[s] = false;
  }
  return catalog;
}

VertexPartition chain_vertex_classes(const CycleCatalog& catalog) {
  auto comp = cycle_component_labels(catalog.cycles);
  const auto n = static_cast<std::uint32_t>(catalog.vertex_count);
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t v = 0; v < n; ++v) labels[v] = v;  // uncovered: own class
  for (std::size_t c = 0; c < catalog.cycles.size(); ++c) {
    for (Vertex v : catalog.cycles[c]) labels[v] = n + comp[c];
  }
  return VertexPartition::from_labels(labels);
}

EdgePartition chain_edge_classes(const CycleCatalog& catalog, const UndirectedGraph& g) {
  auto links = cycle_links(catalog);
  auto comp = cycle_component_labels(links);
  const auto m = static_cast<std::uint32_t>(g.size());
  std::vector<std::uint32_t> labels(m);
  for (std::uint32_t e = 0; e < m; ++e) labels[e] = e;
  for (std::size_t c = 0; c < links.size(); ++c) {
    for (auto [a, b] : links[c]) labels[*g.find_edge(a, b)] = m + comp[c];
  }
  return EdgePartition::from_labels(labels);
}

ArcPartition chain_arc_classes(const CycleCatalog& catalog, const DirectedGraph& d) {
  auto links = cycle_links(catalog);
  auto comp = cycle_component_labels(links);
  const auto m = static_cast<std::uint32_t>(d.size());
  std::vector<std::uint32_t> labels(m);
  for (std::uint32_t a = 0; a < m; ++a) labels[a] = a;
  for (std::size_t c = 0; c < links.size(); ++c) {
    for (auto [x, y] : links[c]) labels[*d.find_arc(x, y)] = m + comp[c];
  }
  return ArcPartition::from_labels(labels);
}

std::vector<std::vector<bool>> chain_edge_vertex_relation(const CycleCatalog& catalog) {
  auto links = cycle_links(catalog);
  auto comp = cycle_component_labels(links);
  const std::size_t n = catalog.vertex_count;
  std::map<std::uint32_t, std::set<Vertex>> covered;
  for (std::size_t c = 0; c < catalog.cycles.size(); ++c) {
    covered[comp[c]].insert(catalog.cycles[c].begin(), catalog.cycles[c].end());
  }
  Matrix rel(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) rel[v][v] = true;
  for (auto& [id, vs] : covered) {
    for (Vertex a : vs) {
      for (Vertex b : vs) rel[a][b] = true;
    }
  }
  return rel;
}

std::vector<std::vector<bool>> bruteforce_sk_relation(const DirectedGraph& d, unsigned k) {
  if (d.size() > kMaxSkArcs) {
    throw std::length_error("brute-force Sk limited to " + std::to_string(kMaxSkArcs) + " arcs");
  }
  const std::size_t n = d.order();
  Matrix rel(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) rel[v][v] = true;
  const auto arcs = d.arcs();
  const std::uint32_t subsets = 1u << arcs.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    Matrix dir(n, std::vector<bool>(n, false));
    Matrix und(n, std::vector<bool>(n, false));
    std::set<Vertex> vs;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      dir[arcs[i].tail][arcs[i].head] = true;
      und[arcs[i].tail][arcs[i].head] = und[arcs[i].head][arcs[i].tail] = true;
      vs.insert(arcs[i].tail);
      vs.insert(arcs[i].head);
    }
    std::vector<Vertex> vertices(vs.begin(), vs.end());
    if (!strongly_connected(vertices, dir)) continue;
    bool kgonal = true;
    for (Vertex a : vertices) {
      for (Vertex b : vertices) {
        // A pair of opposite arcs is itself a directed 2-gone.
        if (a < b && und[a][b] && !(dir[a][b] && dir[b][a]) &&
            !edge_on_short_cycle(und, a, b, k)) {
          kgonal = false;
        }
      }
    }
    if (!kgonal) continue;
    for (Vertex a : vertices) {
      for (Vertex b : vertices) rel[a][b] = true;
    }
  }
  return rel;
}

bool bruteforce_sk(const DirectedGraph& d, unsigned k, Vertex u, Vertex v) {
  if (u == v) return true;
  return bruteforce_sk_relation(d, k)[u][v];
}

std::vector<std::vector<bool>> transitive_closure(const DirectedGraph& d) {
  auto r = adjacency(d);
  const std::size_t n = d.order();
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!r[u][w]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (r[w][v]) r[u][v] = true;
      }
    }
  }
  return r;
}

VertexPartition bfs_components(const UndirectedGraph& g) {
  const auto adj = adjacency(g);
  std::vector<std::vector<std::size_t>> lists(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (adj[u][v]) lists[u].push_back(v);
    }
  }
  auto labels = bfs_labels(lists);
  return VertexPartition::from_labels(labels);
}

std::uint64_t count_triangles(const UndirectedGraph& g) {
  std::uint64_t total = 0;
  for (auto t : triangles_at_vertices(g)) total += t;
  return total / 3;
}

std::vector<std::uint64_t> triangles_at_vertices(const UndirectedGraph& g) {
  const auto adj = adjacency(g);
  const std::size_t n = g.order();
  std::vector<std::uint64_t> t(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (adj[a][c] && adj[b][c]) {
          ++t[a];
          ++t[b];
          ++t[c];
        }
      }
    }
  }
  return t;
}

bool on_common_cycle(const UndirectedGraph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  auto catalog = enumerate_all_cycles(g, static_cast<unsigned>(g.order()));
  for (const auto& c : catalog.cycles) {
    bool has_u = std::find(c.begin(), c.end(), u) != c.end();
    bool has_v = std::find(c.begin(), c.end(), v) != c.end();
    if (has_u && has_v) return true;
  }
  return false;
}

}  // namespace cyclecon::oracle
