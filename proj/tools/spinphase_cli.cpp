// Copyright 2026 The spinphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "spinphase/spinphase.hpp"

namespace sp = spinphase;

namespace {

/// Shared options for commands that consume a state.
struct StateArgs {
  std::string state = "zero";  // library name or path to a state JSON file
  double s = -1.0;
  std::size_t n = 3;     // site count for parametric library states
  double p = 0.5;        // classical mixing weight
  double beta = 1.0;     // inverse temperature for thermal states
};

void add_state_options(CLI::App* cmd, StateArgs& a) {
  cmd->add_option("--state", a.state, "library state name or state JSON file path");
  cmd->add_option("--s", a.s, "representation index in [-1, 1]")->check(CLI::Range(-1.0, 1.0));
  cmd->add_option("--n", a.n, "site count for parametric library states");
  cmd->add_option("--p", a.p, "mixing weight for the classical library state");
  cmd->add_option("--beta", a.beta, "inverse temperature for thermal library states");
}

bool looks_like_path(const std::string& s) {
  return s.find(".json") != std::string::npos || s.find('/') != std::string::npos;
}

sp::PhaseSpaceFunction resolve_state(const StateArgs& a) {
  if (looks_like_path(a.state)) {
    const sp::PhaseSpaceFunction f = sp::state_from_json(sp::load_json_file(a.state));
    return sp::change_representation(f, a.s);
  }
  return sp::state_library(a.state, a.s, {.p = a.p, .beta = a.beta, .n = a.n});
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPINPHASE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SPINPHASE_SEED must be an unsigned integer");
    }
  }
  return 0;
}

void emit_json(const sp::json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    sp::save_json_file(out, j);
  }
}

void emit_csv(const sp::PhaseSpaceFunction& f, std::size_t res, const std::string& out) {
  if (out.empty()) {
    sp::write_grid_csv(std::cout, f, res);
  } else {
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot open output file: " + out);
    sp::write_grid_csv(os, f, res);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-space representation toolkit for many-qubit states"};
  app.require_subcommand(1);

  StateArgs sa;
  std::string out, model_path, obs_string, method = "exact", moment_string;
  double t = -1.0, dt = sp::kDefaultDt, fd_step = 1e-3;
  std::size_t snapshots = 64, shots = 10000, workers = 1, grid_res = 121;
  std::uint64_t seed = default_seed();

  auto* repr = app.add_subcommand("repr", "emit the coefficient representation of a state");
  add_state_options(repr, sa);
  repr->add_option("--out", out, "output path (stdout if omitted)");

  auto* evolve = app.add_subcommand("evolve", "integrate a model and emit the trajectory");
  add_state_options(evolve, sa);
  evolve->add_option("--model", model_path, "model JSON file")->required();
  evolve->add_option("--t", t, "final time (overrides the model file)");
  evolve->add_option("--dt", dt, "integrator step");
  evolve->add_option("--snapshots", snapshots, "maximum number of stored snapshots");
  evolve->add_option("--grid-res", grid_res, "also export per-snapshot grid CSVs (N <= 2)");
  evolve->add_option("--method", method, "rk4 | exact");
  evolve->add_option("--out", out, "output path (stdout if omitted)");
  bool with_grids = false;
  evolve->add_flag("--grids", with_grids, "write snapshot grid CSVs next to --out");

  auto* grid = app.add_subcommand("grid", "sample a state onto a lat-long grid as CSV");
  add_state_options(grid, sa);
  grid->add_option("--grid-res", grid_res, "points per angular axis");
  grid->add_option("--out", out, "output path (stdout if omitted)");

  auto* expect = app.add_subcommand("expect", "estimate an observable expectation");
  add_state_options(expect, sa);
  expect->add_option("--obs", obs_string, "Pauli string observable, site 1 leftmost")->required();
  expect->add_option("--method", method, "exact | mc");
  expect->add_option("--shots", shots, "Monte Carlo sample count");
  expect->add_option("--seed", seed, "random seed (SPINPHASE_SEED fallback)");
  expect->add_option("--workers", workers, "worker partitions (deterministic)");
  expect->add_option("--out", out, "output path (stdout if omitted)");

  auto* sample = app.add_subcommand("sample", "draw computational-basis samples");
  add_state_options(sample, sa);
  sample->add_option("--shots", shots, "number of samples");
  sample->add_option("--seed", seed, "random seed (SPINPHASE_SEED fallback)");
  sample->add_option("--out", out, "output path (stdout if omitted)");

  auto* moments = app.add_subcommand("moments",
                                     "Pauli moments via the moment-generating function");
  add_state_options(moments, sa);
  moments->add_option("--string", moment_string, "Pauli string to differentiate")->required();
  moments->add_option("--step", fd_step, "finite-difference step");
  moments->add_option("--out", out, "output path (stdout if omitted)");

  auto* diagnose = app.add_subcommand("diagnose", "state diagnostics report");
  add_state_options(diagnose, sa);
  diagnose->add_option("--shots", shots, "Monte Carlo samples for the entropy estimate");
  diagnose->add_option("--seed", seed, "random seed (SPINPHASE_SEED fallback)");
  diagnose->add_option("--workers", workers, "worker partitions (deterministic)");
  diagnose->add_option("--out", out, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (repr->parsed()) {
      emit_json(sp::state_to_json(resolve_state(sa)), out);
    } else if (evolve->parsed()) {
      const sp::ModelSpec spec = sp::model_from_json(sp::load_json_file(model_path));
      const double t_final = t > 0.0 ? t : spec.t_final;
      const double step = evolve->count("--dt") ? dt : spec.dt;
      const auto method_kind = method == "exact" ? sp::EvolveMethod::exact_small
                                                 : sp::EvolveMethod::rk4;
      if (method != "exact" && method != "rk4")
        throw std::invalid_argument("evolve: --method must be rk4 or exact");
      const sp::PhaseSpaceFunction f0 = resolve_state(sa);
      const sp::Trajectory traj = sp::evolve(f0, spec.generator, t_final, step, method_kind,
                                             snapshots);
      emit_json(sp::trajectory_to_json(traj), out);
      if (with_grids) {
        if (out.empty())
          throw std::invalid_argument("evolve: --grids requires --out for file naming");
        const std::string stem =
            out.size() > 5 && out.substr(out.size() - 5) == ".json" ? out.substr(0, out.size() - 5)
                                                                    : out;
        for (std::size_t k = 0; k < traj.states.size(); ++k)
          emit_csv(traj.states[k], grid_res, stem + "_snap" + std::to_string(k) + ".csv");
      }
    } else if (grid->parsed()) {
      emit_csv(resolve_state(sa), grid_res, out);
    } else if (expect->parsed()) {
      const sp::PhaseSpaceFunction f = resolve_state(sa);
      sp::PauliPolynomial obs(f.n_qubits());
      if (obs_string.size() != f.n_qubits())
        throw std::invalid_argument("expect: observable length must match the state");
      obs.add(sp::PauliString(obs_string), 1.0);
      sp::json j{{"schema", sp::kSchemaVersion}, {"obs", obs_string}, {"s", f.s}};
      if (method == "exact") {
        j["estimate"] = sp::expectation_exact(f, obs);
        j["stderr"] = 0.0;
        j["n_samples"] = 0;
        j["seed"] = seed;
        j["method"] = "exact";
      } else if (method == "mc") {
        const auto r = sp::expectation_mc(
            f, obs, {.n_samples = shots, .seed = seed, .n_workers = workers});
        j["estimate"] = r.estimate;
        j["stderr"] = r.stderr_;
        j["n_samples"] = shots;
        j["seed"] = seed;
        j["method"] = "mc";
      } else {
        throw std::invalid_argument("expect: --method must be exact or mc");
      }
      emit_json(j, out);
    } else if (sample->parsed()) {
      const sp::PhaseSpaceFunction f = resolve_state(sa);
      sp::CounterRng rng(seed);
      std::map<std::string, std::size_t> counts;
      for (std::size_t k = 0; k < shots; ++k) {
        const auto bits = sp::sample_basis(f, rng);
        std::string key;
        for (int b : bits) key.push_back(b ? '1' : '0');
        ++counts[key];
      }
      sp::json jc = sp::json::object();
      for (const auto& [k, v] : counts) jc[k] = v;
      emit_json(sp::json{{"schema", sp::kSchemaVersion},
                         {"method", "born"},
                         {"seed", seed},
                         {"shots", shots},
                         {"counts", jc}},
                out);
    } else if (moments->parsed()) {
      const sp::PhaseSpaceFunction f = resolve_state(sa);
      const double m = sp::mgf_moment(f, sp::PauliString(moment_string), fd_step);
      emit_json(sp::json{{"schema", sp::kSchemaVersion},
                         {"string", moment_string},
                         {"s", f.s},
                         {"h", fd_step},
                         {"moment", m},
                         {"method", "mgf-fd"}},
                out);
    } else if (diagnose->parsed()) {
      const sp::PhaseSpaceFunction f = resolve_state(sa);
      sp::json j{{"schema", sp::kSchemaVersion}, {"s", f.s}, {"n_qubits", f.n_qubits()}};
      j["purity"] = sp::purity_phase(f);
      const sp::PhaseSpaceFunction fq = sp::change_representation(f, -1.0);
      const auto wr = sp::wehrl_entropy(fq, {.n_samples = shots, .seed = seed,
                                             .n_workers = workers});
      j["wehrl"] = {{"estimate", wr.estimate}, {"stderr", wr.stderr_},
                    {"method", f.n_qubits() == 1 ? "quadrature" : "mc"}, {"seed", seed}};
      if (f.n_qubits() <= 2) j["physicality_residual"] = sp::physicality_residual(f);
      if (f.n_qubits() >= 2) {
        sp::json prods = sp::json::object();
        for (std::size_t site = 0; site < f.n_qubits(); ++site)
          prods["site_" + std::to_string(site + 1) + "_vs_rest"] =
              sp::product_test(f, {site}).is_product;
        j["product"] = prods;
      }
      emit_json(j, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 3;
  } catch (const sp::json::exception& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
