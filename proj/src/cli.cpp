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

#include "qwqca/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qwqca/io.hpp"

namespace qwqca::cli {

namespace {

class NumericalGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_slice(std::ostream& csv, std::size_t t, const std::vector<double>& dist) {
  for (std::size_t v = 0; v < dist.size(); ++v) csv << t << ',' << v << ',' << format_double(dist[v]) << '\n';
}

void guard_norm(std::span<const Complex> amplitudes, std::size_t t) {
  const double drift = std::abs(norm(amplitudes) - 1.0);
  if (!(drift <= kNormDriftGuard)) {
    throw NumericalGuard("norm drift " + format_double(drift) + " at step " + std::to_string(t) +
                         " exceeds " + format_double(kNormDriftGuard));
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Encoder encoder_for(const Config& config) {
  Encoder encoder = translate(config.walk).encoder;
  if (config.automaton) {
    if (config.automaton->subcell_count() != encoder.size()) {
      throw ConfigError("automaton", "subcell count " + std::to_string(config.automaton->subcell_count()) +
                                         " does not match the walk dimension " + std::to_string(encoder.size()));
    }
    encoder.automaton = config.automaton;
  }
  return encoder;
}

/** Runs the requested engine, streaming one distribution slice per step. Returns the final-state JSON. */
nlohmann::json simulate(const Config& config, const std::string& model, std::size_t steps, std::ostream& csv) {
  nlohmann::json final_state{{"model", model}};
  if (model == "qca") {
    const Encoder encoder = encoder_for(config);
    const auto report = validate_automaton(*encoder.automaton);
    if (!report.ok()) {
      throw ConfigError("automaton", "not usable by the single-excitation backend: " + report.structural.summary() +
                                         report.single_excitation.summary());
    }
    auto distribution = [&](const SingleExcitationState& s) {
      return encoder.kind == WalkKind::coined ? vertex_distribution(decode_coined(encoder, s))
                                              : vertex_distribution(decode_staggered(encoder, s));
    };
    SingleExcitationState s = std::visit([&](const auto& w) { return encode(encoder, w.initial); }, config.walk);
    write_slice(csv, 0, distribution(s));
    for (std::size_t t = 1; t <= steps; ++t) {
      s = qca_step_single(s);
      guard_norm(s.amplitudes, t);
      write_slice(csv, t, distribution(s));
    }
    final_state["time"] = s.time;
    final_state["basis"] = "subcell";
    final_state["amplitudes"] = vector_to_json(s.amplitudes);
  } else if (const auto* w = std::get_if<CoinedWalk>(&config.walk)) {
    CoinedState s = w->initial;
    write_slice(csv, 0, vertex_distribution(s));
    for (std::size_t t = 1; t <= steps; ++t) {
      s = cqw_step(s, w->coin, w->permutation);
      guard_norm(s.amplitudes, t);
      write_slice(csv, t, vertex_distribution(s));
    }
    final_state["time"] = s.time;
    final_state["basis"] = "arc";
    final_state["amplitudes"] = vector_to_json(s.amplitudes);
  } else {
    const auto& sw = std::get<StaggeredWalk>(config.walk);
    StaggeredState s = sw.initial;
    write_slice(csv, 0, vertex_distribution(s));
    for (std::size_t t = 1; t <= steps; ++t) {
      s = sqwh_step(s, sw.spec);
      guard_norm(s.amplitudes, t);
      write_slice(csv, t, vertex_distribution(s));
    }
    final_state["time"] = s.time;
    final_state["basis"] = "vertex";
    final_state["amplitudes"] = vector_to_json(s.amplitudes);
  }
  return final_state;
}

}  // namespace

std::filesystem::path final_state_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  return p.replace_extension(".final.json");
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Config config = load_config(options.config);
    const std::string walk_model = walk_model_name(config.walk);
    const std::string model = options.model.value_or(walk_model);
    if (model != "qca" && model != walk_model) {
      throw ConfigError("model.kind", "--model " + model + " does not match the configured " + walk_model + " walk");
    }
    std::ofstream csv(options.out);
    if (!csv) throw std::runtime_error("cannot write " + options.out.string());
    csv << "t,vertex,probability\n";
    const nlohmann::json final_state = simulate(config, model, options.steps, csv);
    csv.close();
    write_json(final_state_path(options.out), final_state);
    out << "wrote " << options.out.string() << " and " << final_state_path(options.out).string() << '\n';
    return kOk;
  } catch (const NumericalGuard& e) {
    err << "numerical guard: " << e.what() << '\n';
    return kNumericalGuard;
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

int cmd_translate(const TranslateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Config config = load_config(options.config);
    const Translation translation = translate(config.walk);
    write_json(options.out, translation_to_json(translation));
    out << "wrote " << options.out.string() << ": " << translation.automaton->n_cells << " cells x "
        << translation.automaton->subcells_per_cell << " subcells, " << translation.automaton->tilings.size()
        << " tilings\n";
    return kOk;
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  EquivalenceReport report;
  try {
    const Config config = load_config(options.config);
    EquivalenceOptions eo;
    eo.t_max = options.t_max;
    eo.n_states = options.n_states;
    eo.seed = options.seed.value_or(config.seed);
    eo.tol = options.tol;
    eo.automaton_override = config.automaton;
    report = equivalence_run(config.walk, eo);
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  const std::string text = report_to_json(report).dump(2);
  out << text << '\n';
  if (options.out) {
    std::ofstream file(*options.out);
    if (!file) {
      err << "cannot write " << options.out->string() << '\n';
      return kConfigError;
    }
    file << text << '\n';
  }
  out << (report.pass ? "PASS" : "FAIL") << ": max residual " << format_double(report.max_residual) << " (tol "
      << format_double(report.tol) << ")\n";
  return report.pass ? kOk : kEquivalenceFailure;
}

int run(int argc, char** argv) {
  CLI::App app{"Quantum walks compiled to partitioned unitary quantum cellular automata"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Evolve a walk or its automaton and write distributions");
  simulate_cmd->add_option("--config", sim.config, "JSON config")->required();
  std::string model;
  simulate_cmd->add_option("--model", model, "cqw | sqwh | qca")->check(CLI::IsMember({"cqw", "sqwh", "qca"}));
  simulate_cmd->add_option("--steps", sim.steps, "number of steps")->required();
  simulate_cmd->add_option("--out", sim.out, "CSV output path")->required();

  TranslateOptions tr;
  auto* translate_cmd = app.add_subcommand("translate", "Compile the configured walk into an automaton");
  translate_cmd->add_option("--config", tr.config, "JSON config")->required();
  translate_cmd->add_option("--out", tr.out, "automaton JSON output path")->required();

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Differentially check walk against automaton");
  verify_cmd->add_option("--config", ver.config, "JSON config")->required();
  verify_cmd->add_option("--tmax", ver.t_max, "steps per trajectory")->capture_default_str();
  verify_cmd->add_option("--states", ver.n_states, "random initial states")->capture_default_str();
  std::uint64_t seed = 0;
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "PRNG seed (default: config seed)");
  verify_cmd->add_option("--tol", ver.tol, "max amplitude residual")->capture_default_str();
  std::string report_path;
  verify_cmd->add_option("--out", report_path, "report JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (simulate_cmd->parsed()) {
    if (!model.empty()) sim.model = model;
    return cmd_simulate(sim, std::cout, std::cerr);
  }
  if (translate_cmd->parsed()) return cmd_translate(tr, std::cout, std::cerr);
  if (*seed_opt) ver.seed = seed;
  if (!report_path.empty()) ver.out = report_path;
  return cmd_verify(ver, std::cout, std::cerr);
}

}  // namespace qwqca::cli
