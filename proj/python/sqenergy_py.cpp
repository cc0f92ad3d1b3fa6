// Copyright 2026 The sqenergy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sqenergy/coulson.hpp"
#include "sqenergy/error.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/matchpoly.hpp"
#include "sqenergy/report_io.hpp"
#include "sqenergy/spectrum.hpp"
#include "sqenergy/verify.hpp"

namespace py = pybind11;
using namespace sqenergy;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<mpz_class>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

// Summary and reports cross the boundary as JSON text; the package wraps them in dicts.
std::string summary_json(const CampaignSummary& s) { return to_json(s).dump(); }

CampaignOptions options(int workers) {
  CampaignOptions opts;
  opts.workers = workers;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Square energies of unicyclic graphs";

  // Messages read "Code: detail".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             es.reserve(edges.size());
             for (auto [u, v] : edges) es.push_back(make_edge(u, v));
             return Graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("to_graph6", &to_graph6, py::arg("graph"));
  m.def("to_edge_list", &to_edge_list, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("cycle_graph", &cycle_graph, py::arg("k"));
  m.def("random_unicyclic", &random_unicyclic, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("graph_id", &graph_id, py::arg("graph"));

  m.def(
      "classify_unicyclic",
      [](const Graph& g) {
        const UnicyclicDecomposition d = classify_unicyclic(g);
        py::dict out;
        out["k"] = d.k;
        out["residue"] = d.residue;
        out["cycle"] = d.cycle_vertices;
        out["forest"] = d.forest;
        out["forest_labels"] = d.forest_labels;
        return out;
      },
      py::arg("graph"));

  m.def(
      "matching_counts", [](const Graph& g) { return to_py(matching_counts(g).counts); },
      py::arg("graph"));
  m.def(
      "brute_force_matching_counts",
      [](const Graph& g) { return to_py(brute_force_matching_counts(g).counts); }, py::arg("graph"));
  m.def(
      "matching_poly", [](const Graph& g) { return to_py(matching_poly(g).coeffs()); },
      py::arg("graph"), "Coefficients, lowest power first.");
  m.def(
      "char_poly_unicyclic",
      [](const Graph& g) { return to_py(char_poly_unicyclic(classify_unicyclic(g)).coeffs()); },
      py::arg("graph"));
  m.def(
      "char_poly_leverrier", [](const Graph& g) { return to_py(char_poly_leverrier(g).coeffs()); },
      py::arg("graph"));

  m.def(
      "eigenvalues", [](const Graph& g) { return eigenvalues_symmetric(g).eigenvalues; },
      py::arg("graph"), "Adjacency eigenvalues in descending order.");
  m.def(
      "square_energies",
      [](const Graph& g) {
        const SquareEnergies e = square_energies(eigenvalues_symmetric(g));
        return py::make_tuple(e.s_plus, e.s_minus, e.delta);
      },
      py::arg("graph"), "(s_plus, s_minus, delta)");
  m.def(
      "theta_eigen", [](const Graph& g, double t) { return theta_eigen(eigenvalues_symmetric(g), t); },
      py::arg("graph"), py::arg("t"));
  m.def(
      "theta_closed",
      [](const Graph& g, double t) {
        return theta_closed(ThetaClosedForm::from(classify_unicyclic(g)), t);
      },
      py::arg("graph"), py::arg("t"));
  m.def(
      "delta_integral",
      [](const Graph& g, double rel_tol, double abs_tol) {
        const auto d = classify_unicyclic(g);
        if (d.k % 2 == 0) return delta_even(d.k);
        return delta_integral(ThetaClosedForm::from(d), QuadratureParams{rel_tol, abs_tol, 60});
      },
      py::arg("graph"), py::arg("rel_tol") = 1e-9, py::arg("abs_tol") = 1e-12);

  m.def(
      "analyze_json", [](const Graph& g) { return to_json(analyze(g)).dump(); }, py::arg("graph"));
  m.def(
      "sweep_cycles_json",
      [](int k_max) {
        const CycleSweep s = sweep_cycles(k_max);
        Json rows = Json::array();
        for (const auto& row : s.rows) rows.push_back(to_json(row));
        return Json{{"rows", rows}, {"summary", to_json(s.summary)}}.dump();
      },
      py::arg("k_max"));
  m.def(
      "exhaustive_campaign_json",
      [](int n_max, int n_min, int workers) {
        py::gil_scoped_release release;
        return summary_json(exhaustive_campaign(n_max, options(workers), {}, n_min));
      },
      py::arg("n_max"), py::arg("n_min") = 3, py::arg("workers") = 1);
  m.def(
      "random_campaign_json",
      [](int n_min, int n_max, const std::string& k, long trials, std::uint64_t seed, int workers) {
        RandomCampaignConfig cfg;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        if (k == "odd") {
          cfg.k_policy = {KPolicyKind::RandomOdd, 0};
        } else if (k == "any") {
          cfg.k_policy = {KPolicyKind::RandomAny, 0};
        } else {
          cfg.k_policy = {KPolicyKind::Fixed, std::stoi(k)};
        }
        cfg.trials = trials;
        cfg.seed = seed;
        py::gil_scoped_release release;
        return summary_json(random_campaign(cfg, options(workers)));
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("k") = "odd", py::arg("trials") = 100,
      py::arg("seed") = 0, py::arg("workers") = 1);
}
