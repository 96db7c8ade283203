#include <doctest.h>

#include "cyclecon/errors.hpp"
#include "cyclecon/generators.hpp"
#include "cyclecon/kgonal.hpp"
#include "cyclecon/oracle.hpp"
#include "cyclecon/triangular.hpp"
#include "support.hpp"

using namespace cyclecon;
using namespace cyclecon::testing;

TEST_CASE("cycles_through_edge") {
  auto tri = generators::complete_graph(3);
  CHECK(cycles_through_edge(tri, 0, 3).size() == 1);

  auto c5 = generators::cycle_graph(5);
  CHECK(cycles_through_edge(c5, 0, 4).empty());
  CHECK(cycles_through_edge(c5, 0, 5).size() == 1);

  auto k5 = generators::complete_graph(5);
  auto cycles = cycles_through_edge(k5, 0, 4);
  CHECK(cycles.size() == 9);
  std::size_t triangles = 0;
  for (const auto& c : cycles) triangles += c.length() == 3;
  CHECK(triangles == 3);
}

TEST_CASE("canonical cycle form") {
  std::vector<Vertex> order{4, 2, 0, 3};
  auto c = CycleSubgraph::canonical(order);
  CHECK(c.vertices == std::vector<Vertex>{0, 2, 4, 3});
  std::vector<Vertex> reversed{3, 0, 2, 4};
  CHECK(CycleSubgraph::canonical(reversed) == c);
}

TEST_CASE("for_each_kgone visits every cycle once") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = generators::random_undirected(14, 0.3, seed);
    for (unsigned k = 3; k <= 6; ++k) {
      std::vector<CycleSubgraph> seen;
      for_each_kgone(g, k, EnumerationLimits{}, [&](auto vs, auto es) {
        REQUIRE(vs.size() == es.size());
        for (std::size_t i = 0; i < vs.size(); ++i) {
          CHECK(g.find_edge(vs[i], vs[(i + 1) % vs.size()]) == es[i]);
        }
        seen.push_back(CycleSubgraph::canonical(vs));
      });
      std::sort(seen.begin(), seen.end());
      auto catalog = oracle::enumerate_all_cycles(g, k);
      std::vector<CycleSubgraph> expected;
      for (const auto& c : catalog.cycles) expected.push_back({c});
      std::sort(expected.begin(), expected.end());
      CHECK(seen == expected);
    }
  }
}

TEST_CASE("kgonal_network") {
  auto k4 = generators::complete_graph(4);
  CHECK(kgonal_network(k4, 3) == triangular_network(k4));

  auto c6 = generators::cycle_graph(6);
  CHECK(kgonal_network(c6, 5).empty());
  auto full = kgonal_network(c6, 6);
  CHECK(full.member_count() == 6);
  CHECK(full.total_weight() == 6);
}

TEST_CASE("kk_components and lk_edge_classes") {
  auto v = two_c4_sharing_vertex();
  CHECK(kk_components(v, 4).count() == 1);
  CHECK(kk_components(v, 3).count() == 7);
  CHECK(lk_edge_classes(v, 4).count() == 2);
  CHECK(lk_edge_classes(v, 4).class_sizes() == std::vector<std::size_t>{4, 4});

  auto e = two_c4_sharing_edge();
  CHECK(lk_edge_classes(e, 4).count() == 1);

  auto b = bowtie();
  CHECK(kk_components(b, 3) == k3_components(b));
  CHECK(lk_edge_classes(b, 3) == l3_edge_classes(b));
}

TEST_CASE("Bk relation") {
  auto b = bowtie();
  CHECK_FALSE(bk_related(b, 3, 0, 4));
  CHECK(kk_components(b, 3).same(0, 4));
  auto tri = generators::complete_graph(3);
  CHECK(bk_related(tri, 3, 0, 1));
  CHECK(bk_related(tri, 3, 1, 2));
  auto path = generators::path_graph(4);
  CHECK_FALSE(bk_related(path, 3, 0, 1));
  CHECK(bk_related(path, 3, 2, 2));
}

TEST_CASE("Everett decomposition") {
  auto g = ug(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
  auto dec = everett_decomposition(g, 3);
  CHECK(dec.components == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
  CHECK(dec.bridges == std::vector<std::vector<Vertex>>{{5, 6}});
  CHECK(dec.to_partition(7).count() == 2);

  auto forest = ug(6, {{0, 1}, {1, 2}, {3, 4}});
  auto fd = everett_decomposition(forest, 3);
  CHECK(fd.components.empty());
  CHECK(fd.bridges.size() == 3);

  auto two_k4 = ug(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                       {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  auto kd = everett_decomposition(two_k4, 3);
  CHECK(kd.components.size() == 2);
  CHECK(kd.bridges.empty());
}

TEST_CASE("clique_weight_lower_bound") {
  CHECK(clique_weight_lower_bound(5, 4) == 9);
  CHECK(clique_weight_lower_bound(3, 3) == 1);
  CHECK(clique_weight_lower_bound(4, 3) == 2);
  CHECK(clique_weight_lower_bound(4, 6) == 2 + 2);
  CHECK(clique_weight_lower_bound(2, 5) == 0);
}

TEST_CASE("enumeration limits") {
  auto k5 = generators::complete_graph(5);
  CHECK_THROWS_AS(kgonal_network(k5, 2), std::invalid_argument);
  CHECK_THROWS_AS(kgonal_network(k5, 9), BudgetExceeded);
  EnumerationLimits lifted;
  lifted.allow_long = true;
  CHECK(kgonal_network(k5, 9, lifted) == kgonal_network(k5, 5));

  EnumerationLimits tight;
  tight.max_items = 5;
  auto k8 = generators::complete_graph(8);
  CHECK_THROWS_AS(kgonal_network(k8, 5, tight), BudgetExceeded);
}
