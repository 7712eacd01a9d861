#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "indegraph/audit.hpp"
#include "indegraph/closed_forms.hpp"
#include "indegraph/errors.hpp"
#include "indegraph/export.hpp"
#include "indegraph/oracle_graph.hpp"
#include "indegraph/paper_claims.hpp"
#include "indegraph/zn_core.hpp"

namespace py = pybind11;
using namespace indegraph;

namespace {

py::object length_to_py(const ExtendedLength& l) {
  if (l.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(l.value());
}

py::dict invariants_to_dict(const InvariantSet& inv) {
  py::dict d;
  d["n"] = inv.n;
  d["edge_count"] = inv.edge_count;
  py::list runs;
  for (const auto& r : inv.degree_sequence) runs.append(py::make_tuple(r.degree, r.count));
  d["degree_sequence"] = runs;
  d["connected"] = inv.connected;
  d["girth"] = length_to_py(inv.girth);
  d["diameter"] = length_to_py(inv.diameter);
  d["bipartite"] = inv.bipartite;
  d["complete"] = inv.complete;
  d["clique_number"] = inv.clique_number;
  d["chromatic_number"] = inv.chromatic_number;
  d["hamiltonian"] = inv.hamiltonian;
  d["partite_count"] = inv.partite_count;
  return d;
}

ReportFormat report_format(const std::string& s) {
  if (s == "md" || s == "markdown") return ReportFormat::kMarkdown;
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown report format: " + s);
}

AuditConfig make_config(std::uint64_t build_limit, std::uint64_t exact_limit,
                        std::uint64_t hamiltonian_limit) {
  AuditConfig c;
  c.limits = {build_limit, exact_limit, hamiltonian_limit};
  return c;
}

}  // namespace

PYBIND11_MODULE(_indegraph, m) {
  m.doc() = "Independent graph of Z_n: number theory, oracle, closed forms and audits";

  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<NotApplicable>(m, "NotApplicable");

  const OracleLimits defaults;

  m.def("euler_phi", py::overload_cast<std::uint64_t>(&euler_phi), py::arg("n"));
  m.def("divisors", py::overload_cast<std::uint64_t>(&divisors), py::arg("n"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def(
      "element_order", [](Residue a, std::uint64_t n) { return element_order(a, Modulus(n)); },
      py::arg("a"), py::arg("n"));
  m.def(
      "special_sets",
      [](std::uint64_t n) {
        const auto s = special_sets(Modulus(n));
        py::dict d;
        d["units"] = s.units;
        d["involutions"] = s.involutions;
        d["neither"] = s.neither;
        d["overlap"] = s.overlap;
        return d;
      },
      py::arg("n"));
  m.def(
      "order_decomposition",
      [](std::uint64_t n) { return OrderDecomposition(Modulus(n)).classes(); }, py::arg("n"));

  py::class_<IndependentGraph>(m, "IndependentGraph")
      .def_static(
          "build",
          [](std::uint64_t n, std::uint64_t limit) {
            return IndependentGraph::build(Modulus(n), limit);
          },
          py::arg("n"), py::arg("build_limit") = defaults.build_limit)
      .def_property_readonly("n", [](const IndependentGraph& g) { return g.modulus().value(); })
      .def("adjacent", &IndependentGraph::adjacent, py::arg("a"), py::arg("b"))
      .def("degree", [](const IndependentGraph& g, Residue a) { return degree(g, a); })
      .def("edge_count", [](const IndependentGraph& g) { return edge_count(g); })
      .def("is_connected", [](const IndependentGraph& g) { return is_connected(g); })
      .def("girth", [](const IndependentGraph& g) { return length_to_py(girth(g)); })
      .def("diameter", [](const IndependentGraph& g) { return length_to_py(diameter(g)); })
      .def("is_bipartite", [](const IndependentGraph& g) { return is_bipartite(g); })
      .def(
          "clique_number",
          [](const IndependentGraph& g, std::uint64_t limit) { return clique_number(g, limit); },
          py::arg("limit") = defaults.exact_search_limit)
      .def(
          "chromatic_number",
          [](const IndependentGraph& g, std::uint64_t limit) {
            return chromatic_number(g, limit);
          },
          py::arg("limit") = defaults.exact_search_limit)
      .def(
          "find_hamiltonian_cycle",
          [](const IndependentGraph& g, std::uint64_t limit) {
            return find_hamiltonian_cycle(g, limit);
          },
          py::arg("limit") = defaults.hamiltonian_limit)
      .def("verify_complete_multipartite",
           [](const IndependentGraph& g) {
             return verify_complete_multipartite(g, order_decomposition(g.modulus()));
           })
      .def(
          "invariants",
          [](const IndependentGraph& g, std::uint64_t exact, std::uint64_t ham) {
            OracleLimits limits;
            limits.exact_search_limit = exact;
            limits.hamiltonian_limit = ham;
            return invariants_to_dict(oracle_invariants(g, limits));
          },
          py::arg("exact_search_limit") = defaults.exact_search_limit,
          py::arg("hamiltonian_limit") = defaults.hamiltonian_limit)
      .def(
          "export",
          [](const IndependentGraph& g, const std::string& format, bool label_orders) {
            return export_graph(g, parse_graph_format(format), label_orders);
          },
          py::arg("format") = "dot", py::arg("label_orders") = false);

  m.def(
      "cf_part_sizes", [](std::uint64_t n) { return cf_part_sizes(Modulus(n)).sizes; },
      py::arg("n"));
  m.def(
      "cf_degree", [](Residue a, std::uint64_t n) { return cf_degree(a, Modulus(n)); },
      py::arg("a"), py::arg("n"));
  m.def(
      "cf_edge_count", [](std::uint64_t n) { return cf_edge_count(Modulus(n)); }, py::arg("n"));
  m.def(
      "cf_girth", [](std::uint64_t n) { return length_to_py(cf_girth(Modulus(n))); },
      py::arg("n"));
  m.def(
      "cf_diameter", [](std::uint64_t n) { return length_to_py(cf_diameter(Modulus(n))); },
      py::arg("n"));
  m.def(
      "cf_clique_chromatic", [](std::uint64_t n) { return cf_clique_chromatic(Modulus(n)); },
      py::arg("n"));
  m.def(
      "cf_is_hamiltonian", [](std::uint64_t n) { return cf_is_hamiltonian(Modulus(n)); },
      py::arg("n"));
  m.def(
      "cf_is_bipartite", [](std::uint64_t n) { return cf_is_bipartite(Modulus(n)); },
      py::arg("n"));
  m.def(
      "cf_is_complete", [](std::uint64_t n) { return cf_is_complete(Modulus(n)); },
      py::arg("n"));
  m.def(
      "cf_invariants", [](std::uint64_t n) { return invariants_to_dict(cf_invariants(Modulus(n))); },
      py::arg("n"));

  m.def(
      "pc_edge_count", [](std::uint64_t n) { return pc_edge_count(Modulus(n)).to_string(); },
      py::arg("n"));
  m.def(
      "pc_clique", [](std::uint64_t n) { return pc_clique(Modulus(n)); }, py::arg("n"));
  m.def(
      "pc_chromatic", [](std::uint64_t n) { return pc_chromatic(Modulus(n)); }, py::arg("n"));

  m.def(
      "audit",
      [](std::uint64_t n, std::uint64_t build_limit, std::uint64_t exact_limit,
         std::uint64_t hamiltonian_limit) {
        py::list out;
        for (const auto& v :
             audit_n(Modulus(n), make_config(build_limit, exact_limit, hamiltonian_limit))) {
          py::dict d;
          d["theorem"] = std::string(to_string(v.theorem));
          d["status"] = std::string(to_string(v.status));
          d["claimed"] = v.claimed;
          d["observed"] = v.observed;
          d["witness"] = v.witness;
          d["ground_truth"] = std::string(to_string(v.ground_truth));
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("build_limit") = defaults.build_limit,
      py::arg("exact_limit") = defaults.exact_search_limit,
      py::arg("hamiltonian_limit") = defaults.hamiltonian_limit);

  m.def(
      "sweep_report",
      [](std::uint64_t lo, std::uint64_t hi, const std::string& format, unsigned jobs) {
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = sweep(lo, hi, AuditConfig{}, jobs);
        }
        return render_report(report, report_format(format));
      },
      py::arg("lo"), py::arg("hi"), py::arg("format") = "json", py::arg("jobs") = 1);
}
