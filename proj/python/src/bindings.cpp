// Python bindings. Structured reports cross the boundary as JSON text and are
// decoded into dicts by the package __init__.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trifree/bounds.hpp"
#include "trifree/constructions.hpp"
#include "trifree/explorer.hpp"
#include "trifree/graph.hpp"
#include "trifree/json.hpp"
#include "trifree/spectral.hpp"
#include "trifree/srg.hpp"

namespace py = pybind11;
using namespace trifree;

namespace {

srg::Tier parse_tier(const std::string& tier) {
  if (tier == "basic") return srg::Tier::basic;
  if (tier == "extended") return srg::Tier::extended;
  throw std::invalid_argument("tier must be 'basic' or 'extended'");
}

}  // namespace

PYBIND11_MODULE(_trifree, m) {
  m.doc() = "Spectral bounds for triangle-free graphs and strongly regular graph tables.";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); })
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("triangle_count", &triangle_count);
  m.def("is_triangle_free", &is_triangle_free);
  m.def("is_bipartite", &is_bipartite);
  m.def("blow_up", [](const Graph& g, int t) { return blow_up(g, t); });

  m.def("named_graph", [](const std::string& name) { return constructions::named_graph(name); });
  m.def("named_graph_names", [] {
    std::vector<std::string> out;
    for (const auto& e : constructions::named_graphs()) out.push_back(e.name);
    return out;
  });
  m.def("random_triangle_free", [](int n, std::uint64_t seed, bool bipartite) {
    return constructions::random_triangle_free(
        n, seed, bipartite ? constructions::RandomModel::bipartite : constructions::RandomModel::process);
  }, py::arg("n"), py::arg("seed"), py::arg("bipartite") = false);

  m.def("eigenvalues", [](const Graph& g) { return spectral::spectrum(g).values; });
  m.def("signless_laplacian_min", [](const Graph& g) { return spectral::signless_laplacian_min(g); });
  m.def("_trace_report", [](const Graph& g) {
    return nlohmann::json(spectral::trace_identity_report(g, spectral::spectrum(g))).dump();
  });

  m.def("_theorem1_check", [](const Graph& g) { return nlohmann::json(bounds::theorem1_check(g)).dump(); });
  m.def("hoffman_delsarte", [](const Graph& g) { return bounds::hoffman_delsarte(g); });
  m.def("_independence_number", [](const Graph& g, std::int64_t budget) {
    return nlohmann::json(bounds::independence_number(g, budget)).dump();
  }, py::arg("g"), py::arg("budget") = static_cast<std::int64_t>(bounds::kDefaultIndependenceBudget));
  m.def("f_alpha", &bounds::f_alpha);
  m.def("_f_max", [] { return nlohmann::json(bounds::f_max()).dump(); });

  m.def("srg_recognize", [](const Graph& g) -> py::object {
    const auto rec = srg::srg_recognize(g);
    if (!rec.params) return py::none();
    return py::make_tuple(rec.params->n, rec.params->k, rec.params->a, rec.params->b);
  });
  m.def("_feasibility", [](std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b, const std::string& tier) {
    return nlohmann::json(srg::feasibility({n, k, a, b}, parse_tier(tier))).dump();
  });
  m.def("_theorem2_chain", [](std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b) {
    return nlohmann::json(srg::theorem2_chain({n, k, a, b})).dump();
  });
  m.def("_enumerate_feasible", [](std::int64_t n_max, const std::string& tier, int workers) {
    std::vector<srg::TableRow> rows;
    {
      py::gil_scoped_release release;
      rows = srg::enumerate_feasible(n_max, parse_tier(tier), workers);
    }
    return nlohmann::json(rows).dump();
  });

  m.def("_scan_all", [](int n, int workers) {
    explorer::ScanReport r;
    {
      py::gil_scoped_release release;
      r = explorer::scan_all(n, {workers, false});
    }
    return nlohmann::json(r).dump();
  });
  m.def("_random_search", [](int n, std::int64_t iterations, std::uint64_t seed) {
    explorer::ScanReport r;
    {
      py::gil_scoped_release release;
      r = explorer::random_search(n, iterations, seed);
    }
    return nlohmann::json(r).dump();
  });
}
