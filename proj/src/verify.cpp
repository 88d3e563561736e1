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

#include "qwqca/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwqca {

namespace {

template <typename... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <typename WalkState, typename StepFn, typename DecodeFn>
void accumulate_residuals(const Encoder& encoder, WalkState walk_state, StepFn step, DecodeFn decode,
                          std::vector<double>& residuals) {
  SingleExcitationState automaton_state = encode(encoder, walk_state);
  residuals[0] = std::max(residuals[0], max_abs_diff(walk_state.amplitudes, decode(automaton_state).amplitudes));
  for (std::size_t t = 1; t < residuals.size(); ++t) {
    walk_state = step(walk_state);
    automaton_state = qca_step_single(automaton_state);
    residuals[t] = std::max(residuals[t], max_abs_diff(walk_state.amplitudes, decode(automaton_state).amplitudes));
  }
}

}  // namespace

const Graph& walk_graph(const WalkSpec& walk) {
  return *std::visit([](const auto& w) { return w.graph; }, walk);
}

std::string walk_model_name(const WalkSpec& walk) {
  return std::holds_alternative<CoinedWalk>(walk) ? "cqw" : "sqwh";
}

Translation translate(const WalkSpec& walk) {
  return std::visit(overloaded{[](const CoinedWalk& w) { return cqw_to_puqca(w.graph, w.coin, w.permutation); },
                               [](const StaggeredWalk& w) { return sqwh_to_puqca(w.graph, w.spec); }},
                    walk);
}

CVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(dim);
  for (auto& x : v) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x = Complex{re, im};
  }
  const double n = norm(v);
  for (auto& x : v) x /= n;
  return v;
}

EquivalenceReport equivalence_run(const WalkSpec& walk, const EquivalenceOptions& options) {
  if (options.t_max < 1) throw std::invalid_argument("equivalence_run: t_max must be at least 1");
  Translation translation = translate(walk);
  Encoder encoder = translation.encoder;
  if (options.automaton_override) {
    if (options.automaton_override->subcell_count() != encoder.size()) {
      throw std::invalid_argument("equivalence_run: replacement automaton has " +
                                  std::to_string(options.automaton_override->subcell_count()) +
                                  " subcells, the walk needs " + std::to_string(encoder.size()));
    }
    encoder.automaton = options.automaton_override;
  }

  EquivalenceReport report;
  report.model = walk_model_name(walk);
  report.t_max = options.t_max;
  report.n_states = options.n_states;
  report.seed = options.seed;
  report.tol = options.tol;
  report.residuals.assign(options.t_max + 1, 0.0);

  std::mt19937_64 rng(options.seed);
  std::visit(overloaded{
                 [&](const CoinedWalk& w) {
                   auto step = [&w](const CoinedState& s) { return cqw_step(s, w.coin, w.permutation); };
                   auto decode = [&encoder](const SingleExcitationState& s) { return decode_coined(encoder, s); };
                   accumulate_residuals(encoder, w.initial, step, decode, report.residuals);
                   for (std::size_t k = 0; k < options.n_states; ++k) {
                     auto s = CoinedState::from_amplitudes(w.graph, random_state(w.graph->arc_count(), rng));
                     accumulate_residuals(encoder, s, step, decode, report.residuals);
                   }
                 },
                 [&](const StaggeredWalk& w) {
                   auto step = [&w](const StaggeredState& s) { return sqwh_step(s, w.spec); };
                   auto decode = [&encoder](const SingleExcitationState& s) { return decode_staggered(encoder, s); };
                   accumulate_residuals(encoder, w.initial, step, decode, report.residuals);
                   for (std::size_t k = 0; k < options.n_states; ++k) {
                     auto s = StaggeredState::from_amplitudes(w.graph, random_state(w.graph->vertex_count(), rng));
                     accumulate_residuals(encoder, s, step, decode, report.residuals);
                   }
                 }},
             walk);

  report.max_residual = *std::max_element(report.residuals.begin(), report.residuals.end());
  report.pass = report.max_residual <= options.tol;
  return report;
}

double position_sigma(std::span<const double> distribution, VertexId start) {
  const std::size_t n = distribution.size();
  if (n < 3) throw std::invalid_argument("position_sigma: need at least 3 positions");
  if (start >= n) throw std::invalid_argument("position_sigma: start vertex out of range");
  const double total = std::accumulate(distribution.begin(), distribution.end(), 0.0);
  if (std::abs(total - 1.0) > kEquivalenceTol) throw std::invalid_argument("position_sigma: distribution is not normalized");

  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t forward = (i + n - start) % n;
    // Offsets in (-n/2, n/2]; the farthest offset(s) form the antipode.
    const long offset = forward > n / 2 ? static_cast<long>(forward) - static_cast<long>(n) : static_cast<long>(forward);
    const std::size_t distance = static_cast<std::size_t>(std::labs(offset));
    if (distance >= n / 2 && distribution[i] > 0.0) {
      throw WraparoundError("position_sigma: support reaches the antipode of vertex " + std::to_string(start));
    }
    mean += distribution[i] * static_cast<double>(offset);
    second += distribution[i] * static_cast<double>(offset) * static_cast<double>(offset);
  }
  return std::sqrt(std::max(0.0, second - mean * mean));
}

std::vector<double> sigma_series(const std::vector<std::vector<double>>& distributions, VertexId start) {
  std::vector<double> out;
  out.reserve(distributions.size());
  for (const auto& d : distributions) out.push_back(position_sigma(d, start));
  return out;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need two equal-length series");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace qwqca
