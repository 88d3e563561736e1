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

#include "qwqca/io.hpp"

#include <cmath>
#include <fstream>

namespace qwqca {

using nlohmann::json;

namespace {

constexpr const char* kAutomatonFormat = "qwqca.automaton/1";

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path + "." + key, "missing required field");
  return *it;
}

std::size_t as_size(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ConfigError(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

double as_double(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array");
  return j;
}

CVector vector_from_json(const json& j, const std::string& field) {
  CVector out;
  for (std::size_t i = 0; i < as_array(j, field).size(); ++i)
    out.push_back(complex_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> sizes_from_json(const json& j, const std::string& field) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < as_array(j, field).size(); ++i)
    out.push_back(as_size(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

struct ParsedGraph {
  std::shared_ptr<const Graph> graph;
  std::string kind;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

ParsedGraph parse_graph(const json& j) {
  const std::string kind = as_string(require(j, "kind", "graph"), "graph.kind");
  const json& params = require(j, "params", "graph");
  ParsedGraph out;
  out.kind = kind;
  try {
    if (kind == "cycle") {
      out.graph = std::make_shared<const Graph>(build_cycle(as_size(require(params, "n", "graph.params"), "graph.params.n")));
    } else if (kind == "torus") {
      out.rows = as_size(require(params, "rows", "graph.params"), "graph.params.rows");
      out.cols = as_size(require(params, "cols", "graph.params"), "graph.params.cols");
      out.graph = std::make_shared<const Graph>(build_torus(out.rows, out.cols));
    } else if (kind == "explicit") {
      if (params.contains("adjacency")) {
        std::vector<std::vector<VertexId>> adjacency;
        const json& adj = as_array(params["adjacency"], "graph.params.adjacency");
        for (std::size_t v = 0; v < adj.size(); ++v)
          adjacency.push_back(sizes_from_json(adj[v], "graph.params.adjacency[" + std::to_string(v) + "]"));
        out.graph = std::make_shared<const Graph>(Graph::from_adjacency(std::move(adjacency)));
      } else {
        const std::size_t n = as_size(require(params, "n_vertices", "graph.params"), "graph.params.n_vertices");
        const json& edges = as_array(require(params, "edges", "graph.params"), "graph.params.edges");
        std::vector<Edge> list;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          const auto pair = sizes_from_json(edges[e], "graph.params.edges[" + std::to_string(e) + "]");
          if (pair.size() != 2) throw ConfigError("graph.params.edges[" + std::to_string(e) + "]", "expected [a, b]");
          list.emplace_back(pair[0], pair[1]);
        }
        out.graph = std::make_shared<const Graph>(Graph::from_edges(n, list));
      }
    } else {
      throw ConfigError("graph.kind", "unknown graph kind '" + kind + "' (expected cycle, torus or explicit)");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("graph", e.what());
  }
  return out;
}

CMatrix parse_coin_block(const json& j, const Graph& g, const std::string& field) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "balanced") {
      if (g.degree() != 2) throw ConfigError(field, "the balanced coin needs a 2-regular graph");
      return balanced_coin();
    }
    if (name == "grover") return grover_coin(g.degree());
    if (name == "identity") return CMatrix::identity(g.degree());
    throw ConfigError(field, "unknown coin '" + name + "' (expected balanced, grover or identity)");
  }
  if (j.is_object()) {
    return two_direction_coin(complex_from_json(require(j, "q", field), field + ".q"),
                              complex_from_json(require(j, "p", field), field + ".p"));
  }
  return matrix_from_json(j, field);
}

PermutationSpec::Map parse_permutation_map(const json& j, const Graph& g, const std::string& field) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "identity") return PermutationSpec::identity(g.degree()).map(0);
    if (name == "swap") {
      if (g.degree() != 2) throw ConfigError(field, "the direction swap needs a 2-regular graph");
      return {1, 0};
    }
    throw ConfigError(field, "unknown permutation '" + name + "' (expected identity or swap)");
  }
  return sizes_from_json(j, field);
}

CoinedWalk parse_coined(const json& model, const ParsedGraph& pg) {
  const Graph& g = *pg.graph;
  CoinSpec coin = CoinSpec::uniform(CMatrix::identity(g.degree()));
  if (model.contains("coin_per_vertex")) {
    std::vector<CMatrix> blocks;
    const json& list = as_array(model["coin_per_vertex"], "model.coin_per_vertex");
    for (std::size_t v = 0; v < list.size(); ++v)
      blocks.push_back(parse_coin_block(list[v], g, "model.coin_per_vertex[" + std::to_string(v) + "]"));
    coin = CoinSpec::per_vertex(std::move(blocks));
  } else {
    coin = CoinSpec::uniform(parse_coin_block(require(model, "coin", "model"), g, "model.coin"));
  }
  try {
    coin.validate(g);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("model.coin", e.what());
  }

  PermutationSpec permutation = PermutationSpec::identity(g.degree());
  if (model.contains("permutation_per_vertex")) {
    std::vector<PermutationSpec::Map> maps;
    const json& list = as_array(model["permutation_per_vertex"], "model.permutation_per_vertex");
    for (std::size_t v = 0; v < list.size(); ++v)
      maps.push_back(parse_permutation_map(list[v], g, "model.permutation_per_vertex[" + std::to_string(v) + "]"));
    permutation = PermutationSpec::per_vertex(std::move(maps));
  } else if (model.contains("permutation")) {
    permutation = PermutationSpec::uniform(parse_permutation_map(model["permutation"], g, "model.permutation"));
  }
  try {
    permutation.validate(g);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("model.permutation", e.what());
  }
  VertexId head = g.adjacent(0, 1) ? 1 : g.neighbors(0).front();
  return CoinedWalk{pg.graph, std::move(coin), std::move(permutation), CoinedState::localized(pg.graph, 0, head)};
}

StaggeredWalk parse_staggered(const json& model, const ParsedGraph& pg) {
  const Graph& g = *pg.graph;
  SqwhSpec spec;
  const json& cover = require(model, "cover", "model");
  try {
    if (cover.is_string()) {
      const std::string name = cover.get<std::string>();
      if (name == "cycle") {
        if (pg.kind != "cycle") throw ConfigError("model.cover", "the cycle cover needs a cycle graph");
        spec.cover = cycle_cover(g.vertex_count());
      } else if (name == "torus") {
        if (pg.kind != "torus") throw ConfigError("model.cover", "the torus cover needs a torus graph");
        spec.cover = torus_cover(pg.rows, pg.cols);
      } else {
        throw ConfigError("model.cover", "unknown cover '" + name + "' (expected cycle or torus)");
      }
    } else {
      const json& list = as_array(cover, "model.cover");
      for (std::size_t k = 0; k < list.size(); ++k) {
        Tessellation t;
        const std::string tf = "model.cover[" + std::to_string(k) + "]";
        const json& polygons = as_array(list[k], tf);
        for (std::size_t p = 0; p < polygons.size(); ++p)
          t.polygons.push_back(sizes_from_json(polygons[p], tf + "[" + std::to_string(p) + "]"));
        spec.cover.tessellations.push_back(std::move(t));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("model.cover", e.what());
  }

  const json& coefficients = model.contains("coefficients") ? model["coefficients"] : json("balanced");
  if (coefficients.is_string()) {
    if (coefficients.get<std::string>() != "balanced") {
      throw ConfigError("model.coefficients", "expected \"balanced\" or one coefficient list per tessellation");
    }
    try {
      spec.coefficients = balanced_coefficients(spec.cover);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("model.cover", e.what());
    }
  } else {
    const json& list = as_array(coefficients, "model.coefficients");
    for (std::size_t k = 0; k < list.size(); ++k)
      spec.coefficients.push_back(vector_from_json(list[k], "model.coefficients[" + std::to_string(k) + "]"));
  }

  const json& angles = as_array(require(model, "angles", "model"), "model.angles");
  for (std::size_t k = 0; k < angles.size(); ++k)
    spec.angles.push_back(as_double(angles[k], "model.angles[" + std::to_string(k) + "]"));

  try {
    spec.validate(g);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("model", e.what());
  }
  return StaggeredWalk{pg.graph, std::move(spec), StaggeredState::localized(pg.graph, 0)};
}

void check_normalized(const CVector& v, const std::string& field) {
  if (!all_finite(v) || std::abs(norm(v) - 1.0) > kEquivalenceTol) throw ConfigError(field, "state is not normalized");
}

void apply_initial_state(const json& j, WalkSpec& walk) {
  const std::string kind = as_string(require(j, "kind", "initial_state"), "initial_state.kind");
  if (auto* coined = std::get_if<CoinedWalk>(&walk)) {
    const Graph& g = *coined->graph;
    if (kind == "arc") {
      const VertexId tail = as_size(require(j, "tail", "initial_state"), "initial_state.tail");
      const VertexId head = as_size(require(j, "head", "initial_state"), "initial_state.head");
      if (!g.adjacent(tail, head)) throw ConfigError("initial_state", "arc endpoints are not adjacent");
      coined->initial = CoinedState::localized(coined->graph, tail, head);
    } else if (kind == "amplitudes") {
      CVector values = vector_from_json(require(j, "values", "initial_state"), "initial_state.values");
      if (values.size() != g.arc_count()) {
        throw ConfigError("initial_state.values", "expected " + std::to_string(g.arc_count()) + " arc amplitudes");
      }
      check_normalized(values, "initial_state.values");
      coined->initial = CoinedState::from_amplitudes(coined->graph, std::move(values));
    } else {
      throw ConfigError("initial_state.kind", "coined walks accept 'arc' or 'amplitudes'");
    }
  } else {
    auto& staggered = std::get<StaggeredWalk>(walk);
    const Graph& g = *staggered.graph;
    if (kind == "vertex") {
      const VertexId v = as_size(require(j, "vertex", "initial_state"), "initial_state.vertex");
      if (v >= g.vertex_count()) throw ConfigError("initial_state.vertex", "vertex out of range");
      staggered.initial = StaggeredState::localized(staggered.graph, v);
    } else if (kind == "amplitudes") {
      CVector values = vector_from_json(require(j, "values", "initial_state"), "initial_state.values");
      if (values.size() != g.vertex_count()) {
        throw ConfigError("initial_state.values", "expected " + std::to_string(g.vertex_count()) + " vertex amplitudes");
      }
      check_normalized(values, "initial_state.values");
      staggered.initial = StaggeredState::from_amplitudes(staggered.graph, std::move(values));
    } else {
      throw ConfigError("initial_state.kind", "staggered walks accept 'vertex' or 'amplitudes'");
    }
  }
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(field, "expected a complex number as [re, im]");
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ConfigError(field, "non-finite number");
  return z;
}

json vector_to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) out.push_back(vector_to_json(m.data().subspan(r * m.dim(), m.dim())));
  return out;
}

CMatrix matrix_from_json(const json& j, const std::string& field) {
  const json& rows = as_array(j, field);
  CMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != rows.size()) throw ConfigError(rf, "matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c)
      m(r, c) = complex_from_json(rows[r][c], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

json automaton_to_json(const Automaton& a) {
  json tilings = json::array();
  for (const auto& t : a.tilings) tilings.push_back({{"tiles", t.tiles}, {"unitary", matrix_to_json(t.unitary)}});
  return {{"format", kAutomatonFormat},
          {"n_cells", a.n_cells},
          {"subcells_per_cell", a.subcells_per_cell},
          {"tilings", std::move(tilings)}};
}

Automaton automaton_from_json(const json& j, const std::string& field) {
  if (j.is_object() && j.contains("automaton") && !j.contains("tilings")) return automaton_from_json(j["automaton"], field);
  Automaton a;
  a.n_cells = as_size(require(j, "n_cells", field), field + ".n_cells");
  a.subcells_per_cell = as_size(require(j, "subcells_per_cell", field), field + ".subcells_per_cell");
  const json& tilings = as_array(require(j, "tilings", field), field + ".tilings");
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    const std::string tf = field + ".tilings[" + std::to_string(k) + "]";
    Tiling t;
    const json& tiles = as_array(require(tilings[k], "tiles", tf), tf + ".tiles");
    for (std::size_t i = 0; i < tiles.size(); ++i)
      t.tiles.push_back(sizes_from_json(tiles[i], tf + ".tiles[" + std::to_string(i) + "]"));
    t.unitary = matrix_from_json(require(tilings[k], "unitary", tf), tf + ".unitary");
    a.tilings.push_back(std::move(t));
  }
  return a;
}

json encoder_to_json(const Encoder& e) {
  return {{"kind", e.kind == WalkKind::coined ? "coined" : "staggered"},
          {"walk_basis", e.kind == WalkKind::coined ? "arc" : "vertex"},
          {"walk_to_subcell", e.walk_to_subcell}};
}

json translation_to_json(const Translation& t) {
  return {{"automaton", automaton_to_json(*t.automaton)}, {"encoder", encoder_to_json(t.encoder)}};
}

json report_to_json(const EquivalenceReport& r) {
  return {{"model", r.model},         {"t_max", r.t_max},   {"n_states", r.n_states},
          {"seed", r.seed},           {"tol", r.tol},       {"residuals", r.residuals},
          {"max_residual", r.max_residual}, {"pass", r.pass}};
}

Config parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");
  const ParsedGraph pg = parse_graph(require(doc, "graph", "config"));
  const json& model = require(doc, "model", "config");
  const std::string kind = as_string(require(model, "kind", "model"), "model.kind");

  Config config{CoinedWalk{pg.graph, CoinSpec::uniform(CMatrix::identity(pg.graph->degree())),
                           PermutationSpec::identity(pg.graph->degree()), CoinedState::localized(pg.graph, 0, pg.graph->neighbors(0).front())},
                0, nullptr};
  if (kind == "cqw") {
    config.walk = parse_coined(model, pg);
  } else if (kind == "sqwh") {
    config.walk = parse_staggered(model, pg);
  } else {
    throw ConfigError("model.kind", "unknown model '" + kind + "' (expected cqw or sqwh)");
  }

  if (doc.contains("initial_state")) apply_initial_state(doc["initial_state"], config.walk);
  if (doc.contains("seed")) {
    const json& seed = doc["seed"];
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      throw ConfigError("seed", "expected a non-negative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("automaton")) {
    config.automaton = std::make_shared<const Automaton>(automaton_from_json(doc["automaton"]));
  }
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

}  // namespace qwqca
