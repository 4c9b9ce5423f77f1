#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twodd/ac6.hpp"
#include "twodd/factors.hpp"
#include "twodd/generate.hpp"
#include "twodd/graph.hpp"
#include "twodd/io.hpp"
#include "twodd/quotient.hpp"
#include "twodd/split.hpp"

namespace py = pybind11;
using namespace twodd;

namespace {

py::dict summary_dict(const TwoDigraph& g) {
  py::dict d;
  d["vertices"] = g.vertex_count();
  d["arcs"] = g.arc_count();
  d["acs"] = g.ac_count();
  d["entry"] = g.entry_count();
  d["exit"] = g.exit_count();
  d["saturated"] = g.saturated_count();
  d["connected"] = is_connected(g);
  d["strongly_connected"] = is_strongly_connected(g);
  py::list acs;
  for (const AlternatingCycle& ac : g.acs()) {
    py::dict a;
    a["arcs"] = ac.arcs;
    a["half_length"] = ac.half_length();
    a["odd"] = ac.odd();
    a["clean"] = ac.clean();
    acs.append(a);
  }
  d["ac_detail"] = acs;
  return d;
}

}  // namespace

PYBIND11_MODULE(twodd, m) {
  m.doc() = "alternating-cycle analysis of 2-regular digraphs";

  py::register_exception<Error>(m, "TwoddError");

  py::class_<TwoDigraph>(m, "TwoDigraph")
      .def_property_readonly("vertex_count", &TwoDigraph::vertex_count)
      .def_property_readonly("arc_count", &TwoDigraph::arc_count)
      .def_property_readonly("ac_count", &TwoDigraph::ac_count)
      .def_property_readonly("is_saturated", &TwoDigraph::saturated)
      .def("summary", &summary_dict)
      .def("serialize", [](const TwoDigraph& g) { return serialize(g); })
      .def("__eq__", [](const TwoDigraph& a, const TwoDigraph& b) { return a == b; })
      .def("__repr__", [](const TwoDigraph& g) {
        return "<TwoDigraph |V|=" + std::to_string(g.vertex_count()) +
               " |A|=" + std::to_string(g.arc_count()) +
               " |C|=" + std::to_string(g.ac_count()) + ">";
      });

  m.def("parse", &parse, py::arg("text"), "parse an arc-list string into a TwoDigraph");
  m.def("load", &load_file, py::arg("path"));
  m.def(
      "build",
      [](const std::vector<std::tuple<int, int, int>>& arcs) {
        std::vector<Arc> as;
        for (auto [id, t, h] : arcs) as.push_back({id, t, h});
        return TwoDigraph::build(std::move(as));
      },
      py::arg("arcs"), "build from (id, tail, head) triples");

  m.def(
      "index_of", [](const TwoDigraph& g, int cap) { return index_of(g, cap); }, py::arg("g"),
      py::arg("cap") = kDefaultAcCap);
  m.def(
      "is_hamiltonian",
      [](const TwoDigraph& g, int cap) { return is_hamiltonian_bruteforce(g, cap).hamiltonian; },
      py::arg("g"), py::arg("cap") = kDefaultAcCap, "brute-force oracle");
  m.def(
      "is_closed", [](const TwoDigraph& g, int cap) { return is_closed(g, cap); }, py::arg("g"),
      py::arg("cap") = kDefaultAcCap);
  m.def(
      "parity_class",
      [](const TwoDigraph& g, bool exhaustive) {
        return std::string(to_string(parity_class(g, exhaustive)));
      },
      py::arg("g"), py::arg("exhaustive") = false);

  m.def(
      "certify",
      [](const TwoDigraph& g) {
        Certificate cert = certify(g);
        py::dict d;
        d["verdict"] = std::string(to_string(cert.verdict));
        d["method"] = cert.method ? py::cast(std::string(to_string(*cert.method)))
                                  : py::cast(nullptr);
        d["verified"] = verify_certificate(g, cert);
        d["json"] = certificate_json(cert).dump();
        return d;
      },
      py::arg("g"), "run the certification pipeline; returns verdict, method and witness JSON");

  m.def(
      "classify_ac6",
      [](const TwoDigraph& g, int ac_index) {
        Ac6Class c = ac_index < 0 ? classify_ac6(g) : classify_ac6(g, ac_index);
        py::dict d;
        d["name"] = std::string(to_string(c.name));
        d["vertices"] = c.vertices;
        d["loops"] = c.loops;
        d["exit_entry"] = c.exit_entry;
        d["open_factors"] = c.open_factors;
        d["open_routes"] = c.open_routes;
        d["closed"] = c.closed;
        return d;
      },
      py::arg("g"), py::arg("ac_index") = -1);

  m.def(
      "enumerate_family",
      [](int k, int m_acs, bool saturated, long long budget) {
        FamilySpec spec;
        spec.k = k;
        spec.m = m_acs;
        spec.saturated = saturated;
        return enumerate_family_vec(spec, {budget});
      },
      py::arg("k"), py::arg("m"), py::arg("saturated") = false,
      py::arg("budget") = 10'000'000LL);

  m.def("random_2dd", &random_2dd, py::arg("m"), py::arg("k"), py::arg("seed"));
  m.def(
      "export_dot", [](const TwoDigraph& g) { return export_dot(g); }, py::arg("g"));

  m.attr("__version__") = "0.1.0";
}
