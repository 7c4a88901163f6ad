#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planerig/bernstein.hpp"
#include "planerig/canonical.hpp"
#include "planerig/errors.hpp"
#include "planerig/graph6.hpp"
#include "planerig/hconn.hpp"
#include "planerig/laman.hpp"
#include "planerig/matroidlab.hpp"
#include "planerig/suites.hpp"

namespace py = pybind11;
using namespace planerig;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.push_back(make_edge(a, b));
  return Graph(n, std::move(es));
}

py::dict verdict_dict(const GraphVerdict& v) {
  py::dict d;
  d["independent"] = v.independent;
  d["method"] = to_string(v.method);
  d["rank"] = v.rank;
  d["witness"] = v.witness ? py::cast(emit_graph6(*v.witness)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_planerig, m) {
  m.doc() = "Plane rigidity and hyperconnectivity matroids on small graphs.";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("order"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("__len__", &Graph::size)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + emit_graph6(g) + ")"; });

  m.def("complete", &graphs::complete);
  m.def("complete_bipartite", &graphs::complete_bipartite);
  m.def("cycle", &graphs::cycle);
  m.def("petersen", &graphs::petersen);
  m.def("triangular_prism", &graphs::triangular_prism);
  m.def("canonical_graph6", &canonical_graph6);
  m.def("are_isomorphic", &are_isomorphic);

  m.def("r_independent", &r_independent);
  m.def("r_rank", &r_rank);
  m.def("laman_count_ok", &laman_count_ok);

  m.def(
      "h_independent",
      [](const Graph& g, std::int64_t c, int trials, std::uint64_t seed, std::size_t cap) {
        return verdict_dict(h_independent(g, c, {trials, seed, cap}));
      },
      py::arg("graph"), py::arg("characteristic") = 0, py::arg("trials") = 2, py::arg("seed") = 1,
      py::arg("symbolic_cap") = kDefaultSymbolicCap);
  m.def("h_rank_symbolic", &h_rank_symbolic, py::arg("graph"), py::arg("characteristic") = 0,
        py::arg("cap") = kDefaultSymbolicCap);
  m.def(
      "wedge_independent",
      [](const Graph& g, int r, std::int64_t c, int trials, std::uint64_t seed) {
        return verdict_dict(wedge_independent(g, r, c, {trials, seed, kDefaultSymbolicCap}));
      },
      py::arg("graph"), py::arg("dimension"), py::arg("characteristic") = 0, py::arg("trials") = 2,
      py::arg("seed") = 1);

  m.def("find_bernstein_orientation", [](const Graph& g) -> std::optional<std::string> {
    auto d = find_bernstein_orientation(g);
    if (!d) return std::nullopt;
    return d->to_string();
  });
  m.def("is_bernstein", [](const std::string& arcs, int order) { return is_bernstein(parse_orientation(arcs, order)); },
        py::arg("arcs"), py::arg("order"));
  m.def("ufp_configuration", [](const Graph& g, const std::string& arcs) {
    return ufp_configuration(g, parse_orientation(arcs, g.order())).to_string();
  });
  m.def("verify_ufp", [](const std::string& conf, int order) {
    const auto r = verify_ufp(parse_configuration(conf, order));
    py::dict d;
    d["forests"] = r.forests;
    d["out_degree"] = r.out_degree;
    d["bernstein"] = r.bernstein;
    d["recoverable"] = r.recoverable_checked ? py::cast(r.recoverable) : py::none();
    d["passed"] = r.passed();
    return d;
  });

  m.def("generate_connected_cubic", &generate_connected_cubic);
  m.def("check_duality", [](int n, std::int64_t p) {
    const auto r = check_duality(n, p);
    py::dict d;
    d["passed"] = r.passed();
    d["subsets"] = r.subsets;
    d["h_bases"] = r.h_bases;
    d["w_bases"] = r.w_bases;
    return d;
  });
  m.def(
      "run_suite",
      [](const std::string& name, int nmax, std::uint64_t seed, int jobs) {
        SuiteOptions o;
        o.nmax = nmax;
        o.seed = seed;
        o.jobs = jobs;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, o);
        }
        py::dict d;
        d["claim"] = r.claim;
        d["status"] = r.passed() ? "pass" : "fail";
        d["instances"] = r.instances;
        py::list failures;
        for (const auto& f : r.failures) failures.append(py::make_tuple(f.instance, f.witness, f.note));
        d["failures"] = failures;
        d["notes"] = r.notes;
        return d;
      },
      py::arg("name"), py::arg("nmax") = 0, py::arg("seed") = 1, py::arg("jobs") = 1);
}
