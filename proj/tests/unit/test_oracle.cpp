#include <doctest.h>

#include <stdexcept>

#include "cyclecon/generators.hpp"
#include "cyclecon/kgonal.hpp"
#include "cyclecon/oracle.hpp"
#include "support.hpp"

using namespace cyclecon;
using namespace cyclecon::testing;

TEST_CASE("oracle cycle catalogs") {
  CHECK(oracle::enumerate_all_cycles(generators::complete_graph(4), 4).cycles.size() == 7);
  CHECK(oracle::enumerate_all_cycles(generators::cycle_graph(5), 5).cycles.size() == 1);
  auto both = oracle::enumerate_all_cycles(generators::complete_digraph(3), 3);
  std::size_t twos = 0, threes = 0;
  for (const auto& c : both.cycles) (c.size() == 2 ? twos : threes)++;
  CHECK(twos == 3);
  CHECK(threes == 2);

  CHECK_THROWS_AS(oracle::enumerate_all_cycles(generators::path_graph(61), 3), std::length_error);
  CHECK_THROWS_AS(oracle::enumerate_all_cycles(generators::directed_cycle(31), 3), std::length_error);
}

TEST_CASE("oracle chain connectivity") {
  auto b = bowtie();
  auto cat = oracle::enumerate_all_cycles(b, 3);
  CHECK(oracle::chain_vertex_classes(cat).count() == 1);
  CHECK(oracle::chain_edge_classes(cat, b).count() == 2);
  auto d = diamond();
  CHECK(oracle::chain_edge_classes(oracle::enumerate_all_cycles(d, 3), d).count() == 1);
}

TEST_CASE("oracle Sk") {
  CHECK(oracle::bruteforce_sk(generators::directed_cycle(3), 3, 0, 1));
  auto dag = dg(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) CHECK(oracle::bruteforce_sk(dag, 3, u, v) == (u == v));
  }
  CHECK_THROWS_AS(oracle::bruteforce_sk(generators::complete_digraph(5), 3, 0, 1),
                  std::length_error);
}

TEST_CASE("catalog weight totals reconcile") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = generators::random_undirected(15, 0.3, seed);
    for (unsigned k = 3; k <= 5; ++k) {
      std::uint64_t total = 0;
      for (const auto& c : oracle::enumerate_all_cycles(g, k).cycles) total += c.size();
      CHECK(kgonal_network(g, k).total_weight() == total);
    }
  }
}
