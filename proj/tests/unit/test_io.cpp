#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclecon/errors.hpp"
#include "cyclecon/generators.hpp"
#include "cyclecon/io.hpp"
#include "cyclecon/triangular.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace cyclecon;
using namespace cyclecon::testing;

namespace {

io::NetworkFile parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_pajek(in);
}

}  // namespace

TEST_CASE("parse_pajek") {
  auto tri = parse("*Vertices 3\n*Edges\n1 2\n2 3\n1 3").to_undirected();
  CHECK(tri == generators::complete_graph(3));

  auto arc = parse("*Vertices 2\n*Arcs\n1 2\n");
  CHECK(arc.is_directed());
  auto d = arc.to_directed();
  CHECK(d.size() == 1);
  CHECK(d.has_arc(0, 1));

  auto mixed = parse("*vertices 3\n% comment\n*edges\n1 2\n*ARCS\n2 3\n");
  CHECK(mixed.is_mixed());
  auto md = mixed.to_directed();
  CHECK(md.size() == 3);
  CHECK(md.has_arc(1, 0));
  CHECK_THROWS_AS(mixed.to_undirected(), ParseError);

  auto labelled = parse("*Vertices 2\n1 \"x y\"\n2 \"z\"\n*Edges\n1 2 1.5\n");
  CHECK(labelled.labels == std::vector<std::string>{"x y", "z"});
  CHECK(labelled.edge_weights == std::vector<double>{1.5});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse("*Edges\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("*Vertices x\n"), ParseError);
  try {
    parse("*Vertices 2\n*Edges\n1 2\n1 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse("*Vertices 2\n*Edges\n1\n"), ParseError);
}

TEST_CASE("edge lists") {
  std::istringstream in("# a comment\n# vertices 5\n1 2\n2 3 4\n");
  auto net = io::parse_edge_list(in, false);
  CHECK(net.n == 5);
  CHECK(net.edges.size() == 2);
  CHECK(net.edge_weights == std::vector<double>{1, 4});

  std::istringstream inferred("3 1\n");
  auto d = io::parse_edge_list(inferred, true).to_directed();
  CHECK(d.order() == 3);
  CHECK(d.has_arc(2, 0));
  CHECK(io::format_for("x.txt") == io::Format::edge_list);
  CHECK(io::format_for("x.net") == io::Format::pajek);
}

TEST_CASE("writers") {
  auto b = bowtie();
  std::ostringstream clu;
  io::write_column_file(clu, io::partition_file(k3_components(b)));
  CHECK(clu.str() == "*Vertices 5\n1\n1\n1\n1\n1\n");

  auto k4 = generators::complete_graph(4);
  std::ostringstream net;
  io::write_pajek(net, io::to_network_file(k4, triangular_network(k4)));
  CHECK(net.str() == "*Vertices 4\n*Edges\n1 2 2\n1 3 2\n1 4 2\n2 3 2\n2 4 2\n3 4 2\n");

  auto path = generators::path_graph(3);
  std::ostringstream empty;
  io::write_pajek(empty, io::to_network_file(path, triangular_network(path)));
  CHECK(empty.str() == "*Vertices 3\n*Edges\n");

  CHECK(io::format_number(0.5) == "0.5");
  CHECK(io::format_number(2) == "2");
}

TEST_CASE("column files") {
  std::istringstream in("*Vertices 3\n2\n1\n2\n");
  auto file = io::parse_column_file(in);
  auto p = io::vertex_partition_from(file, 3);
  CHECK(p.same(0, 2));
  CHECK_FALSE(p.same(0, 1));
  CHECK_THROWS_AS(io::vertex_partition_from(file, 4), std::invalid_argument);

  std::istringstream short_file("*Vertices 3\n1\n1\n");
  CHECK_THROWS_AS(io::parse_column_file(short_file), ParseError);
}

TEST_CASE("golden corpus round-trips byte for byte") {
  auto files = golden_files();
  CHECK(files.size() == 10);
  for (const auto& path : files) {
    CAPTURE(path.filename().string());
    CHECK(golden_round_trip(path));
  }
}
