#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cyclecon/directed.hpp"
#include "cyclecon/errors.hpp"
#include "cyclecon/generalized.hpp"
#include "cyclecon/io.hpp"
#include "cyclecon/kgonal.hpp"
#include "cyclecon/oracle.hpp"
#include "cyclecon/triangular.hpp"

namespace py = pybind11;
using namespace cyclecon;

namespace {

// Partitions cross the boundary as plain label lists (class ids 0-based).
template <class Tag>
std::vector<std::uint32_t> labels(const Partition<Tag>& p) {
  return {p.labels().begin(), p.labels().end()};
}

template <class Tag>
std::vector<std::uint64_t> weights(const WeightedSubnetwork<Tag>& w) {
  return {w.weights().begin(), w.weights().end()};
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const UndirectedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> arc_pairs(const DirectedGraph& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto a : d.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Short-cycle connectivity relations and weighted cycle networks";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GraphError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ConsistencyError& e) {
      PyErr_SetString(PyExc_AssertionError, e.what());
    }
  });

  py::class_<UndirectedGraph>(m, "UndirectedGraph")
      .def(py::init([](std::size_t n, const std::vector<VertexPair>& pairs, bool strict) {
             return build_undirected(n, pairs, {strict});
           }),
           py::arg("n"), py::arg("edges") = std::vector<VertexPair>{}, py::arg("strict") = false)
      .def_property_readonly("order", &UndirectedGraph::order)
      .def_property_readonly("size", &UndirectedGraph::size)
      .def("edges", &edge_pairs, "Edges (u, v) with u < v, indexed by edge id.")
      .def("neighbors", [](const UndirectedGraph& g, Vertex u) {
        auto nb = g.neighbors(u);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("find_edge", &UndirectedGraph::find_edge)
      .def("__eq__", [](const UndirectedGraph& a, const UndirectedGraph& b) { return a == b; })
      .def("__repr__", [](const UndirectedGraph& g) {
        return "UndirectedGraph(order=" + std::to_string(g.order()) +
               ", size=" + std::to_string(g.size()) + ")";
      });

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def(py::init([](std::size_t n, const std::vector<VertexPair>& arcs, bool strict) {
             return build_directed(n, arcs, {strict});
           }),
           py::arg("n"), py::arg("arcs") = std::vector<VertexPair>{}, py::arg("strict") = false)
      .def_property_readonly("order", &DirectedGraph::order)
      .def_property_readonly("size", &DirectedGraph::size)
      .def("arcs", &arc_pairs, "Arcs (tail, head), indexed by arc id.")
      .def("find_arc", &DirectedGraph::find_arc)
      .def("underlying", &underlying_graph)
      .def("__eq__", [](const DirectedGraph& a, const DirectedGraph& b) { return a == b; })
      .def("__repr__", [](const DirectedGraph& d) {
        return "DirectedGraph(order=" + std::to_string(d.order()) +
               ", size=" + std::to_string(d.size()) + ")";
      });

  m.def(
      "read_network",
      [](const std::filesystem::path& path, bool directed) -> py::object {
        auto net = io::read_network(path, directed);
        if (directed || net.is_directed()) return py::cast(net.to_directed());
        return py::cast(net.to_undirected());
      },
      py::arg("path"), py::arg("directed") = false,
      "Pajek or edge-list file; a file with arcs always yields a DirectedGraph.");

  // Undirected.
  m.def("k3_components", [](const UndirectedGraph& g) { return labels(k3_components(g)); });
  m.def("l3_edge_classes", [](const UndirectedGraph& g) { return labels(l3_edge_classes(g)); });
  m.def("triangular_network", [](const UndirectedGraph& g) { return weights(triangular_network(g)); });
  m.def("triangle_count_per_vertex",
        [](const UndirectedGraph& g) { return triangle_count_per_vertex(g); });
  m.def("kgonal_network",
        [](const UndirectedGraph& g, unsigned k) { return weights(kgonal_network(g, k)); });
  m.def("kk_components",
        [](const UndirectedGraph& g, unsigned k) { return labels(kk_components(g, k)); });
  m.def("lk_edge_classes",
        [](const UndirectedGraph& g, unsigned k) { return labels(lk_edge_classes(g, k)); });
  m.def("bk_related", [](const UndirectedGraph& g, unsigned k, Vertex u, Vertex v) {
    return bk_related(g, k, u, v);
  });
  m.def(
      "everett_decomposition",
      [](const UndirectedGraph& g, unsigned k) {
        auto d = everett_decomposition(g, k);
        return std::make_pair(d.components, d.bridges);
      },
      "Returns (components, bridges) as lists of vertex lists.");
  m.def("clique_weight_lower_bound", &clique_weight_lower_bound);

  // Generalized.
  m.def(
      "hh0_components",
      [](const UndirectedGraph& g, const std::string& family, unsigned low, unsigned high,
         const std::string& overlap, unsigned size) {
        if (family != "cycles" && family != "cliques") throw py::value_error("family: cycles|cliques");
        FamilySpec f = family == "cycles" ? FamilySpec::cycles_up_to(high)
                                          : FamilySpec::cliques(low, high);
        OverlapSpec o;
        if (overlap == "vertices") o = OverlapSpec::shared_vertices(size);
        else if (overlap == "edge") o = OverlapSpec::shared_edge();
        else if (overlap == "clique") o = OverlapSpec::shared_clique(size);
        else throw py::value_error("overlap: vertices|edge|clique");
        return hh0_components(g, f, o).classes();
      },
      py::arg("g"), py::arg("family"), py::arg("low"), py::arg("high"), py::arg("overlap"),
      py::arg("size") = 1, "Chain classes as (possibly overlapping) vertex lists.");
  m.def("kr_clique_components", [](const UndirectedGraph& g, unsigned k, unsigned r) {
    return kr_clique_components(g, k, r).classes();
  });

  // Directed.
  m.def("reachable_set", &reachable_set);
  m.def("strong_components", [](const DirectedGraph& d) { return labels(strong_components(d)); });
  m.def("directed_triangle_networks", [](const DirectedGraph& d) {
    auto n = directed_triangle_networks(d);
    py::dict out;
    out["cyc"] = weights(n.cyc);
    out["tra"] = weights(n.tra);
    out["in"] = weights(n.inp);
    out["out"] = weights(n.out);
    return out;
  });
  m.def("feedback_network",
        [](const DirectedGraph& d, unsigned k) { return weights(feedback_network(d, k)); });
  m.def("transitive_support_networks", [](const DirectedGraph& d, unsigned k) {
    auto n = transitive_support_networks(d, k);
    return std::make_pair(weights(n.transitive), weights(n.support));
  });
  m.def("ck_components",
        [](const DirectedGraph& d, unsigned k) { return labels(ck_components(d, k)); });
  m.def("dk_arc_classes",
        [](const DirectedGraph& d, unsigned k) { return labels(dk_arc_classes(d, k)); });
  m.def("sk_components",
        [](const DirectedGraph& d, unsigned k) { return labels(sk_components(d, k)); });
  m.def("k_long_arcs", [](const DirectedGraph& d, unsigned k) { return k_long_arcs(d, k); });
  m.def(
      "cyclic_reduction",
      [](const DirectedGraph& d, unsigned k) {
        auto r = cyclic_reduction(d, k);
        return py::make_tuple(labels(r.classes), r.arcs, r.is_acyclic());
      },
      "Returns (class labels, reduction arcs, acyclic).");
  m.def("k_transitive_arcs", [](const DirectedGraph& d, unsigned k) { return k_transitive_arcs(d, k); });
  m.def("tk_reachability",
        [](const DirectedGraph& d, unsigned k, Vertex u) { return tk_reachability(d, k, u); });
  m.def("mutual_tk_classes",
        [](const DirectedGraph& d, unsigned k) { return labels(mutual_tk_classes(d, k)); });
  m.def("remove_transitive_path", [](const DirectedGraph& d, const std::vector<Vertex>& path) {
    return remove_transitive_path(d, path);
  });

  auto o = m.def_submodule("oracle", "Brute-force references for small graphs");
  o.def("kk_components", [](const UndirectedGraph& g, unsigned k) {
    return labels(oracle::chain_vertex_classes(oracle::enumerate_all_cycles(g, k)));
  });
  o.def("lk_edge_classes", [](const UndirectedGraph& g, unsigned k) {
    return labels(oracle::chain_edge_classes(oracle::enumerate_all_cycles(g, k), g));
  });
  o.def("ck_components", [](const DirectedGraph& d, unsigned k) {
    return labels(oracle::chain_vertex_classes(oracle::enumerate_all_cycles(d, k)));
  });
  o.def("sk_relation", &oracle::bruteforce_sk_relation);
  o.def("cycle_count", [](const UndirectedGraph& g, unsigned k) {
    return oracle::enumerate_all_cycles(g, k).cycles.size();
  });
}
