#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclecon/graph.hpp"
#include "cyclecon/network.hpp"
#include "cyclecon/partition.hpp"

namespace cyclecon::io {

enum class Format { pajek, edge_list };

/// A network as read from (or about to be written to) a file. Ids are
/// 0-based here and 1-based on disk; rows keep their file order.
///
/// Pajek dialect:
///   *Vertices n
///   1 "label"          (optional, one per vertex, in order)
///   *Edges             (rows "u v" or "u v w")
///   *Arcs              (rows "u v" or "u v w")
/// Keywords are case-insensitive; lines starting with '%' and blank lines are
/// skipped. Edge-list dialect: "u v [w]" per line, '#' comments, and an
/// optional "# vertices n" directive fixing the vertex count.
struct NetworkFile {
  std::size_t n = 0;
  std::vector<std::string> labels;  // empty, or one per vertex
  bool has_edges_section = false;
  bool has_arcs_section = false;
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  std::vector<double> edge_weights;  // empty, or parallel to edges
  std::vector<double> arc_weights;   // empty, or parallel to arcs

  bool is_mixed() const { return !edges.empty() && !arcs.empty(); }
  bool is_directed() const { return has_arcs_section; }

  /// Throws ParseError if arcs are present.
  UndirectedGraph to_undirected(BuildOptions options = {}, BuildReport* report = nullptr) const;
  /// Edges become pairs of opposite arcs.
  DirectedGraph to_directed(BuildOptions options = {}, BuildReport* report = nullptr) const;
};

NetworkFile parse_pajek(std::istream& in);
NetworkFile parse_edge_list(std::istream& in, bool directed);
void write_pajek(std::ostream& out, const NetworkFile& net);
void write_edge_list(std::ostream& out, const NetworkFile& net);

/// Pajek unless the extension says otherwise (.txt, .edges, .el, .tsv, .csv).
Format format_for(const std::filesystem::path& path);

/// Reads by extension; `directed` applies to edge lists only.
NetworkFile read_network(const std::filesystem::path& path, bool directed = false);
NetworkFile read_network(const std::filesystem::path& path, Format format, bool directed);
void write_network(const std::filesystem::path& path, const NetworkFile& net);

NetworkFile to_network_file(const UndirectedGraph& g);
NetworkFile to_network_file(const DirectedGraph& d);
/// Members of a weighted subnetwork with their weights as a third column.
NetworkFile to_network_file(const UndirectedGraph& g, const EdgeNetwork& net);
NetworkFile to_network_file(const DirectedGraph& d, const ArcNetwork& net);

/// `.clu`/`.vec`-style column file: a "*Vertices n", "*Edges m" or "*Arcs m"
/// header, then one value per line (class ids 1-based).
struct ColumnFile {
  enum class Kind { vertices, edges, arcs };
  Kind kind = Kind::vertices;
  std::vector<double> values;
};

ColumnFile parse_column_file(std::istream& in);
void write_column_file(std::ostream& out, const ColumnFile& file);

ColumnFile partition_file(const VertexPartition& p);
ColumnFile partition_file(const EdgePartition& p);
ColumnFile partition_file(const ArcPartition& p);
ColumnFile vector_file(const EdgeNetwork& w);
ColumnFile vector_file(const ArcNetwork& w);
ColumnFile vector_file(const std::vector<std::uint64_t>& per_vertex);

/// Throws std::invalid_argument if the file's kind or size does not match.
VertexPartition vertex_partition_from(const ColumnFile& file, std::size_t n);

void write_partition(const std::filesystem::path& path, const VertexPartition& p);
void write_partition(const std::filesystem::path& path, const EdgePartition& p);
void write_partition(const std::filesystem::path& path, const ArcPartition& p);
void write_vector(const std::filesystem::path& path, const EdgeNetwork& w);
void write_vector(const std::filesystem::path& path, const ArcNetwork& w);
ColumnFile read_column_file(const std::filesystem::path& path);

/// Shortest round-trippable decimal form ("2", "0.5").
std::string format_number(double value);

}  // namespace cyclecon::io
