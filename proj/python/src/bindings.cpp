// Copyright 2026 The qwqca Authors
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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwqca/io.hpp"
#include "qwqca/verify.hpp"

namespace py = pybind11;
using namespace qwqca;

namespace {

using Rows = std::vector<std::vector<Complex>>;
using Polygons = std::vector<std::vector<VertexId>>;

CMatrix to_matrix(const Rows& rows) {
  CMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Rows to_rows(const CMatrix& m) {
  Rows rows(m.dim(), std::vector<Complex>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
  return rows;
}

std::vector<Polygons> to_lists(const TessellationCover& cover) {
  std::vector<Polygons> out;
  for (const auto& t : cover.tessellations) out.push_back(t.polygons);
  return out;
}

TessellationCover to_cover(const std::vector<Polygons>& lists) {
  TessellationCover cover;
  for (const auto& polygons : lists) cover.tessellations.push_back(Tessellation{polygons});
  return cover;
}

py::dict report_dict(const EquivalenceReport& r) {
  py::dict d;
  d["model"] = r.model;
  d["t_max"] = r.t_max;
  d["n_states"] = r.n_states;
  d["seed"] = r.seed;
  d["tol"] = r.tol;
  d["residuals"] = r.residuals;
  d["max_residual"] = r.max_residual;
  d["passed"] = r.pass;
  return d;
}

/** Python-facing compiled automaton; amplitudes are walk-basis vectors. */
struct PyTranslation {
  Translation translation;

  std::size_t n_cells() const { return translation.automaton->n_cells; }
  std::size_t subcells_per_cell() const { return translation.automaton->subcells_per_cell; }
  std::size_t tiling_count() const { return translation.automaton->tilings.size(); }
  std::size_t encoded_dimension() const { return translation.encoder.size(); }

  CVector encode_amplitudes(const CVector& walk) const {
    if (walk.size() != translation.encoder.size()) throw std::invalid_argument("walk state dimension mismatch");
    CVector out(walk.size());
    for (std::size_t w = 0; w < walk.size(); ++w) out[translation.encoder.walk_to_subcell[w]] = walk[w];
    return out;
  }

  CVector decode_amplitudes(const CVector& subcells) const {
    if (subcells.size() != translation.encoder.size()) throw std::invalid_argument("automaton state dimension mismatch");
    CVector out(subcells.size());
    for (std::size_t s = 0; s < subcells.size(); ++s) out[translation.encoder.subcell_to_walk[s]] = subcells[s];
    return out;
  }

  CVector evolve(const CVector& subcells, std::size_t steps) const {
    SingleExcitationState s{translation.automaton, subcells, 0};
    return qca_evolve_single(s, steps).amplitudes;
  }

  Rows tile_unitary(std::size_t k) const { return to_rows(translation.automaton->tilings.at(k).unitary); }
  std::vector<Tile> tiles(std::size_t k) const { return translation.automaton->tilings.at(k).tiles; }
  std::string to_json() const { return translation_to_json(translation).dump(); }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coined and staggered quantum walks and their partitioned quantum cellular automaton compilations.";

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("degree", &Graph::degree)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("arc_count", &Graph::arc_count)
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             const auto n = g.neighbors(v);
             return std::vector<VertexId>(n.begin(), n.end());
           })
      .def("arc_index", &Graph::arc_index, py::arg("tail"), py::arg("head"))
      .def("arc",
           [](const Graph& g, std::size_t index) {
             const Arc a = g.arc(index);
             return py::make_tuple(a.tail, a.head);
           })
      .def("edges", &Graph::edges);

  m.def("build_cycle", [](std::size_t n) { return std::make_shared<Graph>(build_cycle(n)); }, py::arg("n"));
  m.def("build_torus", [](std::size_t rows, std::size_t cols) { return std::make_shared<Graph>(build_torus(rows, cols)); },
        py::arg("rows"), py::arg("cols"));
  m.def("graph_from_edges",
        [](std::size_t n, const std::vector<Edge>& edges) { return std::make_shared<Graph>(Graph::from_edges(n, edges)); },
        py::arg("n_vertices"), py::arg("edges"));

  m.def("cycle_cover", [](std::size_t n) { return to_lists(cycle_cover(n)); }, py::arg("n"));
  m.def("torus_cover", [](std::size_t r, std::size_t c) { return to_lists(torus_cover(r, c)); }, py::arg("rows"),
        py::arg("cols"));
  m.def(
      "cover_violations",
      [](const std::shared_ptr<Graph>& g, const std::vector<Polygons>& cover) {
        const auto report = validate_cover(*g, to_cover(cover));
        std::vector<std::string> out = report.tessellations.violations;
        for (const auto& [a, b] : report.uncovered_edges)
          out.push_back("uncovered edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        return out;
      },
      py::arg("graph"), py::arg("cover"));

  m.def("is_unitary", [](const Rows& rows, double tol) { return is_unitary(to_matrix(rows), tol); }, py::arg("matrix"),
        py::arg("tol") = kIdentityTol);
  m.def("exp_reflection", [](const Rows& h, double theta) { return to_rows(exp_reflection(to_matrix(h), theta)); },
        py::arg("h"), py::arg("theta"));
  m.def("exp_series", [](const Rows& h, double theta) { return to_rows(exp_series(to_matrix(h), theta)); }, py::arg("h"),
        py::arg("theta"));
  m.def("balanced_coin", [] { return to_rows(balanced_coin()); });
  m.def("grover_coin", [](std::size_t d) { return to_rows(grover_coin(d)); }, py::arg("degree"));

  py::class_<PyTranslation>(m, "Automaton")
      .def_property_readonly("n_cells", &PyTranslation::n_cells)
      .def_property_readonly("subcells_per_cell", &PyTranslation::subcells_per_cell)
      .def_property_readonly("tiling_count", &PyTranslation::tiling_count)
      .def_property_readonly("encoded_dimension", &PyTranslation::encoded_dimension)
      .def("encode", &PyTranslation::encode_amplitudes, py::arg("walk_amplitudes"))
      .def("decode", &PyTranslation::decode_amplitudes, py::arg("subcell_amplitudes"))
      .def("evolve", &PyTranslation::evolve, py::arg("subcell_amplitudes"), py::arg("steps"))
      .def("tile_unitary", &PyTranslation::tile_unitary, py::arg("tiling"))
      .def("tiles", &PyTranslation::tiles, py::arg("tiling"))
      .def("to_json", &PyTranslation::to_json);

  py::class_<CoinedWalk>(m, "CoinedWalk")
      .def(py::init([](std::shared_ptr<Graph> g, const Rows& coin, std::optional<std::vector<std::size_t>> permutation) {
             auto perm = permutation ? PermutationSpec::uniform(*permutation) : PermutationSpec::identity(g->degree());
             auto spec = CoinSpec::uniform(to_matrix(coin));
             spec.validate(*g);
             perm.validate(*g);
             const VertexId head = g->neighbors(0).front();
             std::shared_ptr<const Graph> cg = g;
             return CoinedWalk{cg, std::move(spec), std::move(perm), CoinedState::localized(cg, 0, head)};
           }),
           py::arg("graph"), py::arg("coin"), py::arg("permutation") = std::nullopt)
      .def("localized",
           [](const CoinedWalk& w, VertexId tail, VertexId head) {
             return CoinedState::localized(w.graph, tail, head).amplitudes;
           },
           py::arg("tail"), py::arg("head"))
      .def("evolve",
           [](const CoinedWalk& w, const CVector& amplitudes, std::size_t steps) {
             return cqw_evolve(CoinedState::from_amplitudes(w.graph, amplitudes), w.coin, w.permutation, steps).amplitudes;
           },
           py::arg("amplitudes"), py::arg("steps"))
      .def("vertex_distribution",
           [](const CoinedWalk& w, const CVector& amplitudes) {
             return vertex_distribution(CoinedState::from_amplitudes(w.graph, amplitudes));
           },
           py::arg("amplitudes"))
      .def("to_automaton", [](const CoinedWalk& w) { return PyTranslation{translate(WalkSpec{w})}; });

  py::class_<StaggeredWalk>(m, "StaggeredWalk")
      .def(py::init([](std::shared_ptr<Graph> g, const std::vector<Polygons>& cover,
                       const std::vector<double>& angles, std::optional<std::vector<CVector>> coefficients) {
             SqwhSpec spec;
             spec.cover = to_cover(cover);
             spec.coefficients = coefficients ? *coefficients : balanced_coefficients(spec.cover);
             spec.angles = angles;
             spec.validate(*g);
             std::shared_ptr<const Graph> cg = g;
             return StaggeredWalk{cg, std::move(spec), StaggeredState::localized(cg, 0)};
           }),
           py::arg("graph"), py::arg("cover"), py::arg("angles"), py::arg("coefficients") = std::nullopt)
      .def("localized", [](const StaggeredWalk& w, VertexId v) { return StaggeredState::localized(w.graph, v).amplitudes; },
           py::arg("vertex"))
      .def("evolve",
           [](const StaggeredWalk& w, const CVector& amplitudes, std::size_t steps) {
             return sqwh_evolve(StaggeredState::from_amplitudes(w.graph, amplitudes), w.spec, steps).amplitudes;
           },
           py::arg("amplitudes"), py::arg("steps"))
      .def("vertex_distribution",
           [](const StaggeredWalk& w, const CVector& amplitudes) {
             return vertex_distribution(StaggeredState::from_amplitudes(w.graph, amplitudes));
           },
           py::arg("amplitudes"))
      .def("hamiltonian",
           [](const StaggeredWalk& w, std::size_t k) {
             return to_rows(tess_hamiltonian(*w.graph, w.spec.cover.tessellations.at(k), w.spec.coefficients.at(k)));
           },
           py::arg("tessellation"))
      .def("to_automaton", [](const StaggeredWalk& w) { return PyTranslation{translate(WalkSpec{w})}; });

  m.def(
      "equivalence_run",
      [](py::object walk, std::size_t t_max, std::size_t n_states, std::uint64_t seed, double tol) {
        EquivalenceOptions options;
        options.t_max = t_max;
        options.n_states = n_states;
        options.seed = seed;
        options.tol = tol;
        if (py::isinstance<CoinedWalk>(walk)) return report_dict(equivalence_run(walk.cast<CoinedWalk>(), options));
        return report_dict(equivalence_run(walk.cast<StaggeredWalk>(), options));
      },
      py::arg("walk"), py::arg("t_max") = 25, py::arg("n_states") = 20, py::arg("seed") = 0,
      py::arg("tol") = kEquivalenceTol);

  m.def("sigma_series", &sigma_series, py::arg("distributions"), py::arg("start"));


#ifdef QWQCA_VERSION
  m.attr("__version__") = QWQCA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
