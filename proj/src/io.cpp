#include "cyclecon/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "cyclecon/errors.hpp"

namespace cyclecon::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected a nonnegative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

double parse_number(std::string_view token, std::size_t line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected a number, got '" + std::string(token) + "'", line);
  }
  return value;
}

Vertex parse_endpoint(std::string_view token, std::size_t n, std::size_t line) {
  auto id = parse_count(token, line);
  if (id < 1 || id > n) {
    throw ParseError("endpoint " + std::string(token) + " out of range 1.." + std::to_string(n),
                     line);
  }
  return static_cast<Vertex>(id - 1);
}

// Reads "u v [w]" into the edge or arc list of `net`.
void parse_row(std::string_view text, std::size_t line, bool arcs, std::size_t n, NetworkFile& net,
               bool& weighted) {
  auto tokens = split(text);
  if (tokens.size() < 2 || tokens.size() > 3) throw ParseError("expected 'u v [weight]'", line);
  VertexPair p{parse_endpoint(tokens[0], n, line), parse_endpoint(tokens[1], n, line)};
  double w = tokens.size() == 3 ? parse_number(tokens[2], line) : 1.0;
  weighted = weighted || tokens.size() == 3;
  (arcs ? net.arcs : net.edges).push_back(p);
  (arcs ? net.arc_weights : net.edge_weights).push_back(w);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

UndirectedGraph NetworkFile::to_undirected(BuildOptions options, BuildReport* report) const {
  if (!arcs.empty()) {
    throw ParseError("network has arcs but an undirected graph was requested", 0);
  }
  return build_undirected(n, edges, options, report);
}

DirectedGraph NetworkFile::to_directed(BuildOptions options, BuildReport* report) const {
  return expand_mixed(n, edges, arcs, options, report);
}

NetworkFile parse_pajek(std::istream& in) {
  NetworkFile net;
  enum class Section { none, vertices, edges, arcs } section = Section::none;
  bool edge_weighted = false, arc_weighted = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty() || text.front() == '%') continue;
    if (text.front() == '*') {
      auto tokens = split(text);
      auto keyword = lower(tokens[0]);
      if (keyword == "*vertices") {
        if (section != Section::none) throw ParseError("repeated *Vertices header", line);
        if (tokens.size() < 2) throw ParseError("*Vertices needs a vertex count", line);
        net.n = parse_count(tokens[1], line);
        section = Section::vertices;
      } else if (section == Section::none) {
        throw ParseError("file must start with *Vertices", line);
      } else if (keyword == "*edges") {
        section = Section::edges;
        net.has_edges_section = true;
      } else if (keyword == "*arcs") {
        section = Section::arcs;
        net.has_arcs_section = true;
      } else {
        throw ParseError("unsupported section " + std::string(tokens[0]), line);
      }
      continue;
    }
    switch (section) {
      case Section::none:
        throw ParseError("file must start with *Vertices", line);
      case Section::vertices: {
        auto tokens = split(text);
        auto id = parse_endpoint(tokens[0], net.n, line);
        std::string label;
        auto rest = trim(text.substr(tokens[0].size()));
        if (!rest.empty() && rest.front() == '"') {
          auto close = rest.find('"', 1);
          if (close == std::string_view::npos) throw ParseError("unterminated label", line);
          label = std::string(rest.substr(1, close - 1));
        } else if (!rest.empty()) {
          label = std::string(split(rest).front());
        }
        if (net.labels.empty()) {
          net.labels.resize(net.n);
          for (std::size_t v = 0; v < net.n; ++v) net.labels[v] = std::to_string(v + 1);
        }
        net.labels[id] = std::move(label);
        break;
      }
      case Section::edges:
        parse_row(text, line, false, net.n, net, edge_weighted);
        break;
      case Section::arcs:
        parse_row(text, line, true, net.n, net, arc_weighted);
        break;
    }
  }
  if (section == Section::none) throw ParseError("missing *Vertices header", line);
  if (!edge_weighted) net.edge_weights.clear();
  if (!arc_weighted) net.arc_weights.clear();
  return net;
}

NetworkFile parse_edge_list(std::istream& in, bool directed) {
  NetworkFile net;
  (directed ? net.has_arcs_section : net.has_edges_section) = true;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  std::vector<double> weights;
  bool weighted = false;
  std::uint64_t declared = 0, largest = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      auto tokens = split(text.substr(1));
      if (tokens.size() == 2 && lower(tokens[0]) == "vertices") {
        declared = parse_count(tokens[1], line);
      }
      continue;
    }
    auto tokens = split(text);
    if (tokens.size() < 2 || tokens.size() > 3) throw ParseError("expected 'u v [weight]'", line);
    auto u = parse_count(tokens[0], line);
    auto v = parse_count(tokens[1], line);
    if (u == 0 || v == 0) throw ParseError("vertex ids are 1-based", line);
    if (declared && (u > declared || v > declared)) {
      throw ParseError("endpoint out of range 1.." + std::to_string(declared), line);
    }
    largest = std::max({largest, u, v});
    rows.emplace_back(u - 1, v - 1);
    weights.push_back(tokens.size() == 3 ? parse_number(tokens[2], line) : 1.0);
    weighted = weighted || tokens.size() == 3;
  }
  net.n = std::max(declared, largest);
  auto& list = directed ? net.arcs : net.edges;
  for (auto [u, v] : rows) list.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  if (weighted) (directed ? net.arc_weights : net.edge_weights) = std::move(weights);
  return net;
}

void write_pajek(std::ostream& out, const NetworkFile& net) {
  out << "*Vertices " << net.n << '\n';
  for (std::size_t v = 0; v < net.labels.size(); ++v) {
    out << v + 1 << " \"" << net.labels[v] << "\"\n";
  }
  auto rows = [&](const std::vector<VertexPair>& list, const std::vector<double>& w) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      out << list[i].first + 1 << ' ' << list[i].second + 1;
      if (!w.empty()) out << ' ' << format_number(w[i]);
      out << '\n';
    }
  };
  if (net.has_edges_section || !net.edges.empty()) {
    out << "*Edges\n";
    rows(net.edges, net.edge_weights);
  }
  if (net.has_arcs_section || !net.arcs.empty()) {
    out << "*Arcs\n";
    rows(net.arcs, net.arc_weights);
  }
}

void write_edge_list(std::ostream& out, const NetworkFile& net) {
  if (!net.edges.empty() && !net.arcs.empty()) {
    throw std::invalid_argument("edge lists cannot hold mixed networks");
  }
  out << "# vertices " << net.n << '\n';
  const auto& list = net.arcs.empty() ? net.edges : net.arcs;
  const auto& w = net.arcs.empty() ? net.edge_weights : net.arc_weights;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out << list[i].first + 1 << ' ' << list[i].second + 1;
    if (!w.empty()) out << ' ' << format_number(w[i]);
    out << '\n';
  }
}

Format format_for(const std::filesystem::path& path) {
  auto ext = lower(path.extension().string());
  if (ext == ".txt" || ext == ".edges" || ext == ".el" || ext == ".tsv" || ext == ".csv") {
    return Format::edge_list;
  }
  return Format::pajek;
}

NetworkFile read_network(const std::filesystem::path& path, bool directed) {
  return read_network(path, format_for(path), directed);
}

NetworkFile read_network(const std::filesystem::path& path, Format format, bool directed) {
  auto in = open_in(path);
  return format == Format::pajek ? parse_pajek(in) : parse_edge_list(in, directed);
}

void write_network(const std::filesystem::path& path, const NetworkFile& net) {
  auto out = open_out(path);
  if (format_for(path) == Format::pajek) write_pajek(out, net);
  else write_edge_list(out, net);
}

NetworkFile to_network_file(const UndirectedGraph& g) {
  NetworkFile net;
  net.n = g.order();
  net.has_edges_section = true;
  for (auto e : g.edges()) net.edges.emplace_back(e.u, e.v);
  return net;
}

NetworkFile to_network_file(const DirectedGraph& d) {
  NetworkFile net;
  net.n = d.order();
  net.has_arcs_section = true;
  for (auto a : d.arcs()) net.arcs.emplace_back(a.tail, a.head);
  return net;
}

NetworkFile to_network_file(const UndirectedGraph& g, const EdgeNetwork& w) {
  NetworkFile net;
  net.n = g.order();
  net.has_edges_section = true;
  for (EdgeId e : w.members()) {
    net.edges.emplace_back(g.edge(e).u, g.edge(e).v);
    net.edge_weights.push_back(static_cast<double>(w.weight(e)));
  }
  return net;
}

NetworkFile to_network_file(const DirectedGraph& d, const ArcNetwork& w) {
  NetworkFile net;
  net.n = d.order();
  net.has_arcs_section = true;
  for (ArcId a : w.members()) {
    net.arcs.emplace_back(d.arc(a).tail, d.arc(a).head);
    net.arc_weights.push_back(static_cast<double>(w.weight(a)));
  }
  return net;
}

ColumnFile parse_column_file(std::istream& in) {
  ColumnFile file;
  std::string raw;
  std::size_t line = 0;
  std::optional<std::uint64_t> declared;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty() || text.front() == '%') continue;
    if (!declared) {
      auto tokens = split(text);
      auto keyword = lower(tokens[0]);
      if (tokens.size() != 2) throw ParseError("expected '*Vertices n' style header", line);
      if (keyword == "*vertices") file.kind = ColumnFile::Kind::vertices;
      else if (keyword == "*edges") file.kind = ColumnFile::Kind::edges;
      else if (keyword == "*arcs") file.kind = ColumnFile::Kind::arcs;
      else throw ParseError("expected '*Vertices n' style header", line);
      declared = parse_count(tokens[1], line);
      continue;
    }
    file.values.push_back(parse_number(text, line));
  }
  if (!declared) throw ParseError("missing header", line);
  if (file.values.size() != *declared) {
    throw ParseError("header declares " + std::to_string(*declared) + " values, found " +
                         std::to_string(file.values.size()),
                     line);
  }
  return file;
}

void write_column_file(std::ostream& out, const ColumnFile& file) {
  switch (file.kind) {
    case ColumnFile::Kind::vertices: out << "*Vertices "; break;
    case ColumnFile::Kind::edges: out << "*Edges "; break;
    case ColumnFile::Kind::arcs: out << "*Arcs "; break;
  }
  out << file.values.size() << '\n';
  for (double v : file.values) out << format_number(v) << '\n';
}

namespace {

template <class Tag>
ColumnFile partition_column(const Partition<Tag>& p, ColumnFile::Kind kind) {
  ColumnFile f{kind, {}};
  f.values.reserve(p.size());
  for (auto c : p.labels()) f.values.push_back(static_cast<double>(c) + 1);
  return f;
}

template <class Tag>
ColumnFile weight_column(const WeightedSubnetwork<Tag>& w, ColumnFile::Kind kind) {
  ColumnFile f{kind, {}};
  for (auto x : w.weights()) f.values.push_back(static_cast<double>(x));
  return f;
}

template <class T>
void write_to(const std::filesystem::path& path, const T& column) {
  auto out = open_out(path);
  write_column_file(out, column);
}

}  // namespace

ColumnFile partition_file(const VertexPartition& p) { return partition_column(p, ColumnFile::Kind::vertices); }
ColumnFile partition_file(const EdgePartition& p) { return partition_column(p, ColumnFile::Kind::edges); }
ColumnFile partition_file(const ArcPartition& p) { return partition_column(p, ColumnFile::Kind::arcs); }
ColumnFile vector_file(const EdgeNetwork& w) { return weight_column(w, ColumnFile::Kind::edges); }
ColumnFile vector_file(const ArcNetwork& w) { return weight_column(w, ColumnFile::Kind::arcs); }

ColumnFile vector_file(const std::vector<std::uint64_t>& per_vertex) {
  ColumnFile f{ColumnFile::Kind::vertices, {}};
  for (auto x : per_vertex) f.values.push_back(static_cast<double>(x));
  return f;
}

VertexPartition vertex_partition_from(const ColumnFile& file, std::size_t n) {
  if (file.kind != ColumnFile::Kind::vertices || file.values.size() != n) {
    throw std::invalid_argument("not a vertex partition of " + std::to_string(n) + " vertices");
  }
  std::vector<std::uint32_t> labels;
  for (double v : file.values) {
    if (v < 1 || v != static_cast<double>(static_cast<std::uint32_t>(v))) {
      throw std::invalid_argument("class ids must be positive integers");
    }
    labels.push_back(static_cast<std::uint32_t>(v));
  }
  return VertexPartition::from_labels(labels);
}

void write_partition(const std::filesystem::path& path, const VertexPartition& p) { write_to(path, partition_file(p)); }
void write_partition(const std::filesystem::path& path, const EdgePartition& p) { write_to(path, partition_file(p)); }
void write_partition(const std::filesystem::path& path, const ArcPartition& p) { write_to(path, partition_file(p)); }
void write_vector(const std::filesystem::path& path, const EdgeNetwork& w) { write_to(path, vector_file(w)); }
void write_vector(const std::filesystem::path& path, const ArcNetwork& w) { write_to(path, vector_file(w)); }

ColumnFile read_column_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_column_file(in);
}

}  // namespace cyclecon::io
