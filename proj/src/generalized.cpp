#include "cyclecon/generalized.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "cyclecon/errors.hpp"
#include "cyclecon/kgonal.hpp"
#include "cyclecon/union_find.hpp"

namespace cyclecon {

namespace {

void enumerate_cliques(const UndirectedGraph& g, unsigned low, unsigned high, Budget& budget,
                       std::vector<FamilyMember>& out) {
  std::vector<Vertex> clique;
  // Extends `clique` by candidates that are larger than its last vertex and
  // adjacent to all of it, so each clique is produced once in increasing order.
  auto extend = [&](auto&& self, std::span<const Vertex> candidates) -> void {
    if (clique.size() >= low) {
      budget.charge();
      FamilyMember m;
      m.vertices = clique;
      m.complete = true;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          m.edges.push_back(*g.find_edge(clique[i], clique[j]));
        }
      }
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
    }
    if (clique.size() >= high) return;
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Vertex c = candidates[i];
      next.clear();
      auto nc = g.neighbors(c);
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                            candidates.end(), nc.begin(), nc.end(), std::back_inserter(next));
      if (clique.size() + 1 + next.size() < low) continue;
      clique.push_back(c);
      self(self, std::span<const Vertex>(next));
      clique.pop_back();
    }
  };
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  extend(extend, std::span<const Vertex>(all));
}

bool has_clique(const std::vector<Vertex>& vertices, const std::vector<VertexPair>& edges,
                unsigned r) {
  // Tiny search on the common part of two members; members are short cycles
  // or cliques, so this set has at most a dozen vertices.
  auto adjacent = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), VertexPair{a, b});
  };
  std::vector<Vertex> chosen;
  auto grow = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == r) return true;
    for (std::size_t i = from; i < vertices.size(); ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(),
                            [&](Vertex c) { return adjacent(c, vertices[i]); });
      if (!ok) continue;
      chosen.push_back(vertices[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return grow(grow, 0);
}

bool overlaps(const UndirectedGraph& g, const FamilyMember& a, const FamilyMember& b,
              const OverlapSpec& o) {
  auto common_vertices = [&] {
    return sorted_intersection_size(a.vertices, b.vertices);
  };
  auto common_edge = [&] { return sorted_intersection_size(a.edges, b.edges) > 0; };
  switch (o.kind) {
    case OverlapSpec::Kind::shared_vertices:
      return common_vertices() >= std::max(o.size, 1u);
    case OverlapSpec::Kind::shared_edge:
      return common_edge();
    case OverlapSpec::Kind::shared_clique:
      if (o.size <= 1) return common_vertices() >= 1;
      if (o.size == 2) return common_edge();
      if (a.complete && b.complete) return common_vertices() >= o.size;
      {
        std::vector<Vertex> vs;
        std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                              b.vertices.end(), std::back_inserter(vs));
        std::vector<EdgeId> es;
        std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                              std::back_inserter(es));
        std::vector<VertexPair> pairs;
        for (EdgeId e : es) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
        std::sort(pairs.begin(), pairs.end());
        return has_clique(vs, pairs, o.size);
      }
  }
  return false;
}

}  // namespace

std::vector<FamilyMember> enumerate_family(const UndirectedGraph& g, const FamilySpec& spec,
                                           const EnumerationLimits& limits) {
  std::vector<FamilyMember> out;
  if (spec.kind == FamilySpec::Kind::cycles_up_to) {
    if (spec.low > 3) {
      throw std::invalid_argument("cycle families always start at length 3");
    }
    for_each_kgone(g, spec.high, limits, [&](std::span<const Vertex> vs, std::span<const EdgeId> es) {
      FamilyMember m;
      m.vertices.assign(vs.begin(), vs.end());
      m.edges.assign(es.begin(), es.end());
      std::sort(m.vertices.begin(), m.vertices.end());
      std::sort(m.edges.begin(), m.edges.end());
      m.complete = vs.size() == 3;
      out.push_back(std::move(m));
    });
    return out;
  }
  if (spec.low < 1 || spec.low > spec.high) {
    throw std::invalid_argument("clique size range must satisfy 1 <= low <= high");
  }
  if (spec.high > limits.max_clique_size && !limits.allow_long) {
    throw BudgetExceeded("clique size " + std::to_string(spec.high) + " exceeds the cap of " +
                             std::to_string(limits.max_clique_size),
                         0);
  }
  Budget budget(limits, "clique enumeration");
  enumerate_cliques(g, spec.low, spec.high, budget, out);
  return out;
}

ChainClasses::ChainClasses(std::size_t n, std::vector<std::vector<Vertex>> classes)
    : classes_(std::move(classes)), classes_at_(n) {
  for (auto& c : classes_) std::sort(c.begin(), c.end());
  std::sort(classes_.begin(), classes_.end());
  for (std::uint32_t i = 0; i < classes_.size(); ++i) {
    for (Vertex v : classes_[i]) classes_at_[v].push_back(i);
  }
}

bool ChainClasses::related(Vertex u, Vertex v) const {
  if (u == v) return true;
  return sorted_intersection_size(classes_at_[u], classes_at_[v]) > 0;
}

bool ChainClasses::is_partition() const {
  return std::all_of(classes_at_.begin(), classes_at_.end(),
                     [](const auto& list) { return list.size() <= 1; });
}

VertexPartition ChainClasses::to_partition() const {
  if (!is_partition()) throw std::logic_error("chain classes overlap; not a vertex partition");
  const auto n = static_cast<std::uint32_t>(classes_at_.size());
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    labels[v] = classes_at_[v].empty() ? v : n + classes_at_[v].front();
  }
  return VertexPartition::from_labels(labels);
}

ChainClasses hh0_components(const UndirectedGraph& g, const FamilySpec& family,
                            const OverlapSpec& overlap, const EnumerationLimits& limits) {
  auto members = enumerate_family(g, family, limits);
  DisjointSets sets(members.size());

  const bool by_vertex = (overlap.kind == OverlapSpec::Kind::shared_vertices && overlap.size <= 1) ||
                         (overlap.kind == OverlapSpec::Kind::shared_clique && overlap.size <= 1);
  const bool by_edge = overlap.kind == OverlapSpec::Kind::shared_edge ||
                       (overlap.kind == OverlapSpec::Kind::shared_clique && overlap.size == 2);

  if (by_vertex || by_edge) {
    // Every pair of members meeting at one vertex (edge) satisfies the
    // overlap, so chaining the members at each index slot suffices.
    std::vector<std::int64_t> first(by_vertex ? g.order() : g.size(), -1);
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      const auto& keys = by_vertex ? members[i].vertices : members[i].edges;
      for (auto key : keys) {
        if (first[key] < 0) first[key] = i;
        else sets.unite(static_cast<std::uint32_t>(first[key]), i);
      }
    }
  } else {
    std::vector<std::vector<std::uint32_t>> at_vertex(g.order());
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      for (Vertex v : members[i].vertices) at_vertex[v].push_back(i);
    }
    std::vector<std::uint32_t> stamp(members.size(), 0xffffffffu);
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      for (Vertex v : members[i].vertices) {
        for (auto j : at_vertex[v]) {
          if (j <= i || stamp[j] == i) continue;
          stamp[j] = i;
          if (!sets.same(i, j) && overlaps(g, members[i], members[j], overlap)) sets.unite(i, j);
        }
      }
    }
  }

  std::map<std::uint32_t, std::vector<Vertex>> by_root;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    auto& cover = by_root[sets.find(i)];
    cover.insert(cover.end(), members[i].vertices.begin(), members[i].vertices.end());
  }
  std::vector<std::vector<Vertex>> classes;
  classes.reserve(by_root.size());
  for (auto& [root, cover] : by_root) {
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    classes.push_back(std::move(cover));
  }
  return ChainClasses(g.order(), std::move(classes));
}

ChainClasses kr_clique_components(const UndirectedGraph& g, unsigned k, unsigned r,
                                  const EnumerationLimits& limits) {
  if (r < 1 || r >= k) throw std::invalid_argument("(k, r)-clique connectivity needs 1 <= r < k");
  return hh0_components(g, FamilySpec::cliques(std::max(r + 1, 3u), k),
                        OverlapSpec::shared_clique(r), limits);
}

}  // namespace cyclecon
