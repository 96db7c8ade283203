#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cyclecon/directed.hpp"
#include "cyclecon/errors.hpp"
#include "cyclecon/generators.hpp"
#include "cyclecon/io.hpp"
#include "cyclecon/kgonal.hpp"
#include "cyclecon/oracle.hpp"
#include "cyclecon/triangular.hpp"

namespace cyclecon::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

/// Raised for failures that map to a specific exit code.
struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

struct CommonOptions {
  std::string input;
  std::string format = "auto";
  bool directed_edge_list = false;
  std::uint64_t budget = 0;
  bool strict = false;
  bool allow_long = false;

  EnumerationLimits limits() const {
    auto l = EnumerationLimits::from_environment();
    if (budget) l.max_items = budget;
    l.allow_long = allow_long;
    return l;
  }
};

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_input = true) {
  auto* in = cmd->add_option("--input,-i", o.input, "Network file (Pajek .net or edge list)");
  if (needs_input) in->required();
  cmd->add_option("--format", o.format, "pajek, edges or auto (by extension)")
      ->check(CLI::IsMember({"auto", "pajek", "edges"}));
  cmd->add_flag("--directed", o.directed_edge_list, "Treat edge-list rows as arcs");
  cmd->add_option("--max-cycle-budget", o.budget, "Abort enumerations after this many items");
  cmd->add_flag("--strict", o.strict, "Reject loops and duplicate edges instead of dropping them");
  cmd->add_flag("--allow-long-cycles", o.allow_long, "Lift the cycle-length cap");
}

io::NetworkFile load(const CommonOptions& o) {
  io::Format format = o.format == "auto"    ? io::format_for(o.input)
                      : o.format == "pajek" ? io::Format::pajek
                                            : io::Format::edge_list;
  return io::read_network(o.input, format, o.directed_edge_list);
}

UndirectedGraph load_undirected(const CommonOptions& o, std::ostream& err) {
  BuildReport report;
  auto g = load(o).to_undirected({o.strict}, &report);
  if (report.dropped_loops || report.dropped_duplicates) {
    err << "warning: dropped " << report.dropped_loops << " loops and " << report.dropped_duplicates
        << " duplicate edges\n";
  }
  return g;
}

DirectedGraph load_directed(const CommonOptions& o, std::ostream& err) {
  BuildReport report;
  auto d = load(o).to_directed({o.strict}, &report);
  if (report.dropped_loops || report.dropped_duplicates) {
    err << "warning: dropped " << report.dropped_loops << " loops and " << report.dropped_duplicates
        << " duplicate arcs\n";
  }
  return d;
}

template <class Tag>
json partition_report(const std::string& relation, unsigned k, std::size_t n, std::size_t m,
                      const Partition<Tag>& p, double ms) {
  return json{{"relation", relation}, {"k", k},
              {"n", n},               {"m", m},
              {"classes", p.count()}, {"class_sizes", p.class_sizes()},
              {"trivial_count", p.trivial_count()}, {"runtime_ms", ms}};
}

std::vector<Vertex> parse_vertex_list(const std::string& text, std::size_t n) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw ExitError(kUsage, "bad vertex id '" + item + "'");
    }
    if (pos != item.size() || id < 1 || id > n) {
      throw ExitError(kUsage, "vertex id '" + item + "' out of range 1.." + std::to_string(n));
    }
    out.push_back(static_cast<Vertex>(id - 1));
  }
  return out;
}

// --- components -------------------------------------------------------------

struct ComponentsOptions {
  CommonOptions common;
  std::string relation;
  unsigned k = 3;
  std::string output;
  std::string report;
};

int run_components(const ComponentsOptions& o, std::ostream& out, std::ostream& err) {
  const auto limits = o.common.limits();
  const auto& r = o.relation;
  auto start = Clock::now();
  json report;
  auto finish = [&](const auto& partition, std::size_t n, std::size_t m, unsigned k) {
    report = partition_report(r, k, n, m, partition, elapsed_ms(start));
    if (!o.output.empty()) io::write_partition(o.output, partition);
  };
  if (r == "k3" || r == "kk" || r == "lk") {
    auto g = load_undirected(o.common, err);
    start = Clock::now();
    if (r == "k3") finish(k3_components(g), g.order(), g.size(), 3);
    else if (r == "kk") finish(kk_components(g, o.k, limits), g.order(), g.size(), o.k);
    else finish(lk_edge_classes(g, o.k, limits), g.order(), g.size(), o.k);
  } else {
    auto d = load_directed(o.common, err);
    start = Clock::now();
    if (r == "ck") finish(ck_components(d, o.k, limits), d.order(), d.size(), o.k);
    else if (r == "dk") finish(dk_arc_classes(d, o.k, limits), d.order(), d.size(), o.k);
    else if (r == "sk") finish(sk_components(d, o.k, limits), d.order(), d.size(), o.k);
    else finish(mutual_tk_classes(d, o.k, limits), d.order(), d.size(), o.k);
  }
  if (o.report == "json") out << report.dump() << '\n';
  return kOk;
}

// --- network ----------------------------------------------------------------

struct NetworkOptions {
  CommonOptions common;
  std::string kind;
  unsigned k = 3;
  std::string output;
  std::string vector_output;
  std::string report;
};

int run_network(const NetworkOptions& o, std::ostream& out, std::ostream& err) {
  const auto limits = o.common.limits();
  auto start = Clock::now();
  io::NetworkFile file;
  std::optional<io::ColumnFile> column;
  std::size_t n = 0, m = 0, members = 0;
  std::uint64_t total = 0;
  auto keep = [&](const auto& graph, const auto& net) {
    file = io::to_network_file(graph, net);
    column = io::vector_file(net);
    n = graph.order();
    m = graph.size();
    members = net.member_count();
    total = net.total_weight();
  };
  if (o.kind == "triangular" || o.kind == "kgonal") {
    auto g = load_undirected(o.common, err);
    start = Clock::now();
    keep(g, o.kind == "triangular" ? triangular_network(g) : kgonal_network(g, o.k, limits));
  } else {
    auto d = load_directed(o.common, err);
    start = Clock::now();
    if (o.kind == "feedback") {
      keep(d, feedback_network(d, o.k, limits));
    } else if (o.kind == "transitive" || o.kind == "support") {
      auto nets = transitive_support_networks(d, o.k, limits);
      keep(d, o.kind == "transitive" ? nets.transitive : nets.support);
    } else {
      auto nets = directed_triangle_networks(d);
      const auto& chosen = o.kind == "cyc" ? nets.cyc : o.kind == "tra" ? nets.tra
                           : o.kind == "in" ? nets.inp : nets.out;
      keep(d, chosen);
    }
  }
  const double ms = elapsed_ms(start);
  if (!o.output.empty()) io::write_network(o.output, file);
  else if (o.report != "json") io::write_pajek(out, file);
  if (!o.vector_output.empty()) {
    std::ofstream v(o.vector_output, std::ios::binary);
    if (!v) throw std::runtime_error("cannot write " + o.vector_output);
    io::write_column_file(v, *column);
  }
  if (o.report == "json") {
    out << json{{"kind", o.kind}, {"k", o.k},       {"n", n},
                {"m", m},         {"members", members}, {"total_weight", total},
                {"runtime_ms", ms}}
               .dump()
        << '\n';
  }
  return kOk;
}

// --- decompose --------------------------------------------------------------

struct DecomposeOptions {
  CommonOptions common;
  unsigned k = 3;
  std::string output;
};

int run_decompose(const DecomposeOptions& o, std::ostream& out, std::ostream& err) {
  auto g = load_undirected(o.common, err);
  auto start = Clock::now();
  auto dec = everett_decomposition(g, o.k, o.common.limits());
  const double ms = elapsed_ms(start);
  if (!o.output.empty()) io::write_partition(o.output, dec.to_partition(g.order()));
  auto sizes = [](const auto& lists) {
    std::vector<std::size_t> s;
    for (const auto& l : lists) s.push_back(l.size());
    return s;
  };
  out << json{{"k", o.k},
              {"n", g.order()},
              {"m", g.size()},
              {"components", dec.components.size()},
              {"component_sizes", sizes(dec.components)},
              {"bridges", dec.bridges.size()},
              {"bridge_sizes", sizes(dec.bridges)},
              {"runtime_ms", ms}}
             .dump()
      << '\n';
  return kOk;
}

// --- transitivity -----------------------------------------------------------

struct TransitivityOptions {
  CommonOptions common;
  unsigned k = 3;
  bool list = false;
  std::string remove_path;
  std::string remove_arcs;
  bool verify = false;
  std::string output;
};

std::vector<ArcId> parse_arc_list(const std::string& text, const DirectedGraph& d) {
  std::vector<ArcId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ExitError(kUsage, "arcs are written tail:head");
    auto ends = parse_vertex_list(item.substr(0, colon) + "," + item.substr(colon + 1), d.order());
    auto a = d.find_arc(ends[0], ends[1]);
    if (!a) throw ExitError(kUsage, "'" + item + "' is not an arc");
    out.push_back(*a);
  }
  return out;
}

int run_transitivity(const TransitivityOptions& o, std::ostream& out, std::ostream& err) {
  auto d = load_directed(o.common, err);
  if (o.list) {
    for (ArcId a : k_transitive_arcs(d, o.k, o.common.limits())) {
      out << d.arc(a).tail + 1 << ' ' << d.arc(a).head + 1 << '\n';
    }
  }
  if (o.remove_path.empty() && o.remove_arcs.empty()) return kOk;
  DirectedGraph reduced;
  if (!o.remove_path.empty()) {
    auto path = parse_vertex_list(o.remove_path, d.order());
    try {
      reduced = remove_transitive_path(d, path);
    } catch (const GraphError& e) {
      throw ExitError(kUsage, std::string("path rejected: ") + e.what());
    }
  } else {
    // Unguarded removal, for demonstrating what the path condition protects.
    reduced = remove_arcs(d, parse_arc_list(o.remove_arcs, d));
  }
  if (!o.output.empty()) io::write_network(o.output, io::to_network_file(reduced));
  if (o.verify) {
    for (Vertex v = 0; v < d.order(); ++v) {
      if (reachable_set(d, v) != reachable_set(reduced, v)) {
        err << "reachability changed from vertex " << v + 1 << '\n';
        return kVerificationFailed;
      }
    }
    out << "reachability preserved\n";
  }
  return kOk;
}

// --- oracle-check -----------------------------------------------------------

struct OracleOptions {
  CommonOptions common;
  std::string relation;
  unsigned k = 3;
  std::size_t random_n = 0;
  double density = 0.1;
  std::uint64_t seed = 1;
  bool inject_fault = false;
};

// Merges the first two classes (or splits the first) so the comparison must fail.
template <class Tag>
Partition<Tag> perturb(const Partition<Tag>& p) {
  std::vector<std::uint32_t> labels(p.labels().begin(), p.labels().end());
  if (p.count() > 1) {
    for (auto& l : labels) l = l == 1 ? 0 : l;
  } else if (labels.size() > 1) {
    labels[0] = 1;
  }
  return Partition<Tag>::from_labels(labels);
}

int run_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  const auto& r = o.relation;
  const bool directed = r == "ck" || r == "dk" || r == "sk";
  const unsigned k = (r == "k3" || r == "l3") ? 3 : o.k;
  const auto limits = o.common.limits();
  if (o.common.input.empty() && o.random_n == 0) {
    throw ExitError(kUsage, "oracle-check needs --input or --random N");
  }
  bool agree = true;
  std::size_t n = 0, m = 0;
  auto produce = [&](auto partition) { return o.inject_fault ? perturb(partition) : partition; };
  try {
    if (!directed) {
      auto g = o.common.input.empty() ? generators::random_undirected(o.random_n, o.density, o.seed)
                                      : load_undirected(o.common, err);
      n = g.order();
      m = g.size();
      auto catalog = oracle::enumerate_all_cycles(g, k);
      if (r == "k3") agree = produce(k3_components(g)) == oracle::chain_vertex_classes(catalog);
      else if (r == "kk") agree = produce(kk_components(g, k, limits)) == oracle::chain_vertex_classes(catalog);
      else if (r == "l3") agree = produce(l3_edge_classes(g)) == oracle::chain_edge_classes(catalog, g);
      else agree = produce(lk_edge_classes(g, k, limits)) == oracle::chain_edge_classes(catalog, g);
    } else {
      auto d = o.common.input.empty() ? generators::random_directed(o.random_n, o.density, o.seed)
                                      : load_directed(o.common, err);
      n = d.order();
      m = d.size();
      if (r == "sk") {
        auto expected = oracle::bruteforce_sk_relation(d, k);
        auto got = produce(sk_components(d, k, limits));
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = 0; v < n; ++v) agree = agree && (got.same(u, v) == expected[u][v]);
        }
      } else {
        auto catalog = oracle::enumerate_all_cycles(d, k);
        if (r == "ck") agree = produce(ck_components(d, k, limits)) == oracle::chain_vertex_classes(catalog);
        else agree = produce(dk_arc_classes(d, k, limits)) == oracle::chain_arc_classes(catalog, d);
      }
    }
  } catch (const std::length_error& e) {
    throw ExitError(kUsage, e.what());
  }
  out << json{{"relation", r}, {"k", k}, {"n", n}, {"m", m}, {"agree", agree}}.dump() << '\n';
  if (!agree) {
    err << "oracle mismatch for relation " << r << '\n';
    return kOracleMismatch;
  }
  return kOk;
}

// --- bench ------------------------------------------------------------------

struct BenchOptions {
  std::string family = "random";
  std::size_t n = 10000;
  std::size_t m = 50000;
  unsigned repeat = 5;
  std::uint64_t seed = 1;
  std::string output;
};

int run_bench(const BenchOptions& o, std::ostream& out) {
  if (o.n < 2 || o.m > o.n * (o.n - 1) / 2) throw ExitError(kUsage, "m too large for n");
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.output);
  }
  std::ostream& csv = o.output.empty() ? out : file;
  csv << "n,m,max_degree,repeat,triangular_network_ms,k3_components_ms\n";
  for (unsigned rep = 0; rep < o.repeat; ++rep) {
    auto g = generators::random_undirected_m(o.n, o.m, o.seed + rep);
    auto t0 = Clock::now();
    auto net = triangular_network(g);
    double tri_ms = elapsed_ms(t0);
    t0 = Clock::now();
    auto k3 = k3_components(g);
    double k3_ms = elapsed_ms(t0);
    csv << g.order() << ',' << g.size() << ',' << g.max_degree() << ',' << rep << ',' << tri_ms
        << ',' << k3_ms << '\n';
    (void)net;
    (void)k3;
  }
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short-cycle connectivity: equivalence classes, weighted networks, decompositions",
               "cyclecon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cyclecon 0.1.0");

  ComponentsOptions comp;
  auto* c = app.add_subcommand("components", "Equivalence classes of a short-cycle relation");
  add_common(c, comp.common);
  c->add_option("--relation", comp.relation, "k3|kk|lk|ck|dk|sk|tk-mutual")
      ->required()
      ->check(CLI::IsMember({"k3", "kk", "lk", "ck", "dk", "sk", "tk-mutual"}));
  c->add_option("--k", comp.k, "Maximum cycle length")->capture_default_str();
  c->add_option("--output,-o", comp.output, "Partition file (.clu style)");
  c->add_option("--report", comp.report, "Print a report to stdout")->check(CLI::IsMember({"json"}));

  NetworkOptions net;
  auto* nw = app.add_subcommand("network", "Weighted subnetwork of short-cycle counts");
  add_common(nw, net.common);
  nw->add_option("--kind", net.kind,
                 "triangular|kgonal|cyc|tra|in|out|feedback|transitive|support")
      ->required()
      ->check(CLI::IsMember({"triangular", "kgonal", "cyc", "tra", "in", "out", "feedback",
                             "transitive", "support"}));
  nw->add_option("--k", net.k, "Maximum cycle length")->capture_default_str();
  nw->add_option("--output,-o", net.output, "Weighted network file");
  nw->add_option("--vector", net.vector_output, "Full weight vector (.vec style)");
  nw->add_option("--report", net.report, "Print a report to stdout")->check(CLI::IsMember({"json"}));

  DecomposeOptions dec;
  auto* dc = app.add_subcommand("decompose", "Everett's k-decomposition");
  add_common(dc, dec.common);
  dc->add_option("--k", dec.k, "Maximum cycle length")->capture_default_str();
  dc->add_option("--output,-o", dec.output, "Partition: components first, then bridges");

  TransitivityOptions tr;
  auto* tc = app.add_subcommand("transitivity", "k-transitive arcs and transitive path removal");
  add_common(tc, tr.common);
  tc->add_option("--k", tr.k, "Maximum semicycle length")->capture_default_str();
  tc->add_flag("--list-transitive-arcs", tr.list, "Print k-transitive arcs (1-based)");
  auto* rp = tc->add_option("--remove-path", tr.remove_path,
                            "Comma-separated vertices of a transitive path to delete");
  tc->add_option("--remove-arcs", tr.remove_arcs, "Unguarded removal of tail:head,... arcs")
      ->excludes(rp);
  tc->add_flag("--verify-reachability", tr.verify, "Exit 1 if any reachable set changes");
  tc->add_option("--output,-o", tr.output, "Network after removal");

  OracleOptions orc;
  auto* oc = app.add_subcommand("oracle-check", "Compare production relations with brute force");
  add_common(oc, orc.common, /*needs_input=*/false);
  oc->add_option("--relation", orc.relation, "k3|kk|l3|lk|ck|dk|sk")
      ->required()
      ->check(CLI::IsMember({"k3", "kk", "l3", "lk", "ck", "dk", "sk"}));
  oc->add_option("--k", orc.k, "Maximum cycle length")->capture_default_str();
  oc->add_option("--random", orc.random_n, "Use a random graph with this many vertices");
  oc->add_option("--density", orc.density, "Edge probability of the random graph")
      ->capture_default_str();
  oc->add_option("--seed", orc.seed, "Random seed")->capture_default_str();
  oc->add_flag("--inject-fault", orc.inject_fault,
               "Perturb the production result first (self-test of the comparison)");

  BenchOptions bench;
  CommonOptions bench_common;
  auto* bc = app.add_subcommand("bench", "Timing CSV for triangular_network and k3_components");
  add_common(bc, bench_common, /*needs_input=*/false);
  bc->add_option("--family", bench.family, "Graph family")->check(CLI::IsMember({"random"}));
  bc->add_option("--n", bench.n, "Vertices")->capture_default_str();
  bc->add_option("--m", bench.m, "Edges")->capture_default_str();
  bc->add_option("--repeat", bench.repeat, "Repetitions")->capture_default_str();
  bc->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
  bc->add_option("--output,-o", bench.output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "cyclecon 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*c) return run_components(comp, out, err);
    if (*nw) return run_network(net, out, err);
    if (*dc) return run_decompose(dec, out, err);
    if (*tc) return run_transitivity(tr, out, err);
    if (*oc) return run_oracle(orc, out, err);
    if (*bc) return run_bench(bench, out);
  } catch (const ExitError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cyclecon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cyclecon::cli
