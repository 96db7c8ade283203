#include "cyclecon/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace cyclecon::generators {

UndirectedGraph random_undirected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return build_undirected(n, pairs);
}

DirectedGraph random_directed(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return build_directed(n, pairs);
}

UndirectedGraph random_undirected_m(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m > n * (n - 1) / 2) throw std::invalid_argument("too many edges for n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::set<VertexPair> chosen;
  while (chosen.size() < m) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.emplace(u, v);
  }
  std::vector<VertexPair> pairs(chosen.begin(), chosen.end());
  return build_undirected(n, pairs);
}

UndirectedGraph complete_graph(std::size_t r) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < r; ++u) {
    for (Vertex v = u + 1; v < r; ++v) pairs.emplace_back(u, v);
  }
  return build_undirected(r, pairs);
}

UndirectedGraph cycle_graph(std::size_t s) {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < s; ++i) pairs.emplace_back(i, static_cast<Vertex>((i + 1) % s));
  return build_undirected(s, pairs);
}

UndirectedGraph path_graph(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return build_undirected(n, pairs);
}

DirectedGraph directed_cycle(std::size_t s) {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < s; ++i) pairs.emplace_back(i, static_cast<Vertex>((i + 1) % s));
  return build_directed(s, pairs);
}

DirectedGraph complete_digraph(std::size_t r) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < r; ++u) {
    for (Vertex v = 0; v < r; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return build_directed(r, pairs);
}

DirectedGraph wheel_c6_center() {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < 6; ++i) {
    pairs.emplace_back(i, (i + 1) % 6);
    pairs.emplace_back(i, 6);
  }
  return build_directed(7, pairs);
}

}  // namespace cyclecon::generators
