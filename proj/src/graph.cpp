#include "cyclecon/graph.hpp"

#include <algorithm>
#include <string>

#include "cyclecon/errors.hpp"
#include "cyclecon/union_find.hpp"

namespace cyclecon {

namespace {

void check_endpoints(std::size_t n, const VertexPair& p) {
  if (p.first >= n || p.second >= n) {
    throw GraphError("endpoint out of range: (" + std::to_string(p.first) + ", " +
                     std::to_string(p.second) + ") with n = " + std::to_string(n));
  }
}

// Sorts, removes loops and duplicates (or throws in strict mode).
std::vector<VertexPair> normalize(std::size_t n, std::span<const VertexPair> pairs, bool undirected,
                                  BuildOptions options, BuildReport* report) {
  std::vector<VertexPair> out;
  out.reserve(pairs.size());
  BuildReport local;
  for (auto p : pairs) {
    check_endpoints(n, p);
    if (p.first == p.second) {
      if (options.strict) throw GraphError("loop at vertex " + std::to_string(p.first));
      ++local.dropped_loops;
      continue;
    }
    if (undirected && p.first > p.second) std::swap(p.first, p.second);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  auto last = std::unique(out.begin(), out.end());
  auto dups = static_cast<std::size_t>(out.end() - last);
  if (dups && options.strict) {
    throw GraphError("duplicate edge (" + std::to_string(last->first) + ", " +
                     std::to_string(last->second) + ")");
  }
  local.dropped_duplicates = dups;
  out.erase(last, out.end());
  if (report) *report = local;
  return out;
}

}  // namespace

std::size_t UndirectedGraph::max_degree() const {
  std::size_t d = 0;
  for (Vertex u = 0; u < order(); ++u) d = std::max(d, degree(u));
  return d;
}

std::optional<EdgeId> UndirectedGraph::find_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::optional<ArcId> DirectedGraph::find_arc(Vertex tail, Vertex head) const {
  if (tail >= order() || head >= order()) return std::nullopt;
  auto nb = out_neighbors(tail);
  auto it = std::lower_bound(nb.begin(), nb.end(), head);
  if (it == nb.end() || *it != head) return std::nullopt;
  return first_out_arc(tail) + static_cast<ArcId>(it - nb.begin());
}

UndirectedGraph build_undirected(std::size_t n, std::span<const VertexPair> pairs,
                                 BuildOptions options, BuildReport* report) {
  auto sorted = normalize(n, pairs, /*undirected=*/true, options, report);
  UndirectedGraph g;
  g.edges_.reserve(sorted.size());
  std::vector<std::uint32_t> deg(n, 0);
  for (auto [u, v] : sorted) {
    g.edges_.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
  g.targets_.resize(2 * sorted.size());
  g.edge_ids_.resize(2 * sorted.size());
  std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Pass over edges in (u,v) order: lower endpoints are written first, so each
  // neighbour list comes out sorted without an extra sort.
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.targets_[cursor[v]] = u;
    g.edge_ids_[cursor[v]++] = e;
  }
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.targets_[cursor[u]] = v;
    g.edge_ids_[cursor[u]++] = e;
  }
  return g;
}

DirectedGraph build_directed(std::size_t n, std::span<const VertexPair> arcs, BuildOptions options,
                             BuildReport* report) {
  auto sorted = normalize(n, arcs, /*undirected=*/false, options, report);
  DirectedGraph d;
  d.arcs_.reserve(sorted.size());
  d.out_offsets_.assign(n + 1, 0);
  d.in_offsets_.assign(n + 1, 0);
  for (auto [u, v] : sorted) {
    d.arcs_.push_back({u, v});
    ++d.out_offsets_[u + 1];
    ++d.in_offsets_[v + 1];
  }
  for (std::size_t u = 0; u < n; ++u) {
    d.out_offsets_[u + 1] += d.out_offsets_[u];
    d.in_offsets_[u + 1] += d.in_offsets_[u];
  }
  d.out_targets_.resize(sorted.size());
  d.in_sources_.resize(sorted.size());
  d.in_arc_ids_.resize(sorted.size());
  std::vector<std::uint32_t> in_cursor(d.in_offsets_.begin(), d.in_offsets_.end() - 1);
  for (ArcId a = 0; a < d.arcs_.size(); ++a) {
    auto [u, v] = d.arcs_[a];
    d.out_targets_[a] = v;
    d.in_sources_[in_cursor[v]] = u;
    d.in_arc_ids_[in_cursor[v]++] = a;
  }
  return d;
}

DirectedGraph expand_mixed(std::size_t n, std::span<const VertexPair> edges,
                           std::span<const VertexPair> arcs, BuildOptions options,
                           BuildReport* report) {
  std::vector<VertexPair> all(arcs.begin(), arcs.end());
  for (auto [u, v] : edges) {
    check_endpoints(n, {u, v});
    all.emplace_back(u, v);
    all.emplace_back(v, u);
  }
  // An edge plus a declared arc along it is not a duplicate of the input.
  BuildOptions relaxed = options;
  relaxed.strict = false;
  if (options.strict) {
    for (auto [u, v] : all) {
      if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    }
  }
  return build_directed(n, all, relaxed, report);
}

UndirectedGraph underlying_graph(const DirectedGraph& d) {
  std::vector<VertexPair> pairs;
  pairs.reserve(d.size());
  for (auto a : d.arcs()) pairs.emplace_back(a.tail, a.head);
  return build_undirected(d.order(), pairs);
}

UndirectedGraph edge_subgraph(const UndirectedGraph& g, std::span<const EdgeId> keep) {
  std::vector<VertexPair> pairs;
  pairs.reserve(keep.size());
  for (auto e : keep) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  return build_undirected(g.order(), pairs);
}

DirectedGraph arc_subgraph(const DirectedGraph& d, std::span<const ArcId> keep) {
  std::vector<VertexPair> pairs;
  pairs.reserve(keep.size());
  for (auto a : keep) pairs.emplace_back(d.arc(a).tail, d.arc(a).head);
  return build_directed(d.order(), pairs);
}

DirectedGraph remove_arcs(const DirectedGraph& d, std::span<const ArcId> arcs) {
  std::vector<bool> drop(d.size(), false);
  for (auto a : arcs) drop[a] = true;
  std::vector<ArcId> keep;
  for (ArcId a = 0; a < d.size(); ++a) {
    if (!drop[a]) keep.push_back(a);
  }
  return arc_subgraph(d, keep);
}

std::vector<Vertex> neighbor_intersection(const UndirectedGraph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

VertexPartition connected_components(const UndirectedGraph& g) {
  DisjointSets sets(g.order());
  for (auto e : g.edges()) sets.unite(e.u, e.v);
  auto labels = sets.labels();
  return VertexPartition::from_labels(labels);
}

VertexPartition strong_components(const DirectedGraph& d) {
  const std::size_t n = d.order();
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> index(n, kNone), low(n, 0), comp(n, kNone);
  std::vector<Vertex> stack;
  std::vector<bool> on_stack(n, false);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0, comp_count = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& f = call.back();
      auto out = d.out_neighbors(f.v);
      if (f.next < out.size()) {
        Vertex w = out[f.next++];
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
        } while (w != v);
        ++comp_count;
      }
    }
  }
  return VertexPartition::from_labels(comp);
}

std::vector<Vertex> reachable_set(const DirectedGraph& d, Vertex u) {
  std::vector<bool> seen(d.order(), false);
  std::vector<Vertex> queue{u};
  seen[u] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto w : d.out_neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

BiconnectedBlocks::BiconnectedBlocks(const UndirectedGraph& g)
    : block_of_edge_(g.size(), 0), blocks_of_vertex_(g.order()) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> disc(n, kNone), low(n, 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    Vertex v;
    EdgeId via;  // edge used to enter v, kNone for a root
    std::size_t next;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;

  auto close_block = [&](EdgeId until) {
    auto id = static_cast<std::uint32_t>(block_edge_count_.size());
    std::size_t count = 0;
    EdgeId e;
    do {
      e = edge_stack.back();
      edge_stack.pop_back();
      block_of_edge_[e] = id;
      ++count;
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        auto& list = blocks_of_vertex_[x];
        if (list.empty() || list.back() != id) list.push_back(id);
      }
    } while (e != until);
    block_edge_count_.push_back(count);
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    disc[root] = low[root] = counter++;
    call.push_back({root, kNone, 0});
    while (!call.empty()) {
      auto& f = call.back();
      auto nb = g.neighbors(f.v);
      auto ids = g.incident_edges(f.v);
      if (f.next < nb.size()) {
        std::size_t i = f.next++;
        Vertex w = nb[i];
        EdgeId e = ids[i];
        if (e == f.via) continue;
        if (disc[w] == kNone) {
          edge_stack.push_back(e);
          disc[w] = low[w] = counter++;
          call.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      call.pop_back();
      if (call.empty()) break;
      Vertex parent = call.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) close_block(done.via);
    }
  }
  for (auto& list : blocks_of_vertex_) std::sort(list.begin(), list.end());
}

bool BiconnectedBlocks::cocyclic(Vertex u, Vertex v) const {
  if (u == v) return true;
  auto a = blocks_of_vertex_[u];
  auto b = blocks_of_vertex_[v];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (block_edge_count_[a[i]] >= 2) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

bool cocyclic(const UndirectedGraph& g, Vertex u, Vertex v) {
  return BiconnectedBlocks(g).cocyclic(u, v);
}

}  // namespace cyclecon
