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

#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinphase/dynamics.hpp"
#include "spinphase/grid.hpp"
#include "spinphase/pauli.hpp"
#include "spinphase/sw.hpp"

namespace spinphase {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"n_qubits": N, "terms": [{"string": "XZI...", "re": ..., "im": ...}]}
/// Site 1 is the leftmost character.
inline json poly_to_json(const PauliPolynomial& p) {
  json terms = json::array();
  for (const auto& [s, c] : p.terms())
    terms.push_back({{"string", s.str()}, {"re", c.real()}, {"im", c.imag()}});
  return json{{"n_qubits", p.n_qubits()}, {"terms", terms}};
}

inline PauliPolynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON must carry n_qubits and terms");
  const auto n = j.at("n_qubits").get<std::size_t>();
  PauliPolynomial p(n);
  for (const auto& t : j.at("terms")) {
    const auto s = t.at("string").get<std::string>();
    if (s.size() != n)
      throw std::invalid_argument("polynomial JSON: term string length != n_qubits");
    p.add(PauliString(s), complex(t.value("re", 0.0), t.value("im", 0.0)));
  }
  return p;
}

inline json state_to_json(const PhaseSpaceFunction& f) {
  json j = poly_to_json(f.coeffs);
  j["s"] = f.s;
  j["schema"] = kSchemaVersion;
  return j;
}

inline PhaseSpaceFunction state_from_json(const json& j) {
  const double s = j.value("s", -1.0);
  return make_state(poly_from_json(j), s);
}

/// {"hamiltonian": poly, "jumps": [poly...], "gamma": g, "kind": "...",
///  "t_final": T, "dt": h}
struct ModelSpec {
  GeneratorMatrix generator;
  double t_final;
  double dt;
};

inline ModelSpec model_from_json(const json& j) {
  const PauliPolynomial h = poly_from_json(j.at("hamiltonian"));
  std::vector<PauliPolynomial> jumps;
  if (j.contains("jumps"))
    for (const auto& jj : j.at("jumps")) jumps.push_back(poly_from_json(jj));
  const double gamma = j.value("gamma", 0.0);
  const std::string kind = j.value("kind", "unitary");
  GeneratorKind gk;
  if (kind == "unitary")
    gk = GeneratorKind::unitary;
  else if (kind == "imaginary")
    gk = GeneratorKind::imaginary;
  else if (kind == "lindblad")
    gk = GeneratorKind::lindblad;
  else
    throw std::invalid_argument("model JSON: unknown kind '" + kind + "'");
  return ModelSpec{GeneratorMatrix(h.n_qubits(), gk, h, std::move(jumps), gamma),
                   j.value("t_final", 1.0), j.value("dt", kDefaultDt)};
}

inline json trajectory_to_json(const Trajectory& traj) {
  json states = json::array();
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    json entry = poly_to_json(traj.states[k].coeffs);
    entry["t"] = traj.times[k];
    states.push_back(entry);
  }
  return json{{"schema", kSchemaVersion},
              {"s", traj.states.empty() ? -1.0 : traj.states.front().s},
              {"trajectory", states}};
}

/// CSV grid export: theta_1,phi_1,...,theta_N,phi_N,value (N = 1 or 2).
inline void write_grid_csv(std::ostream& os, const PhaseSpaceFunction& f, std::size_t res) {
  const std::size_t n = f.n_qubits();
  if (n == 0 || n > 2) throw std::invalid_argument("grid CSV export limited to N <= 2");
  os << std::setprecision(17);
  for (std::size_t q = 1; q <= n; ++q) os << "theta_" << q << ",phi_" << q << ",";
  os << "value\n";
  auto theta_of = [&](std::size_t i) { return (static_cast<double>(i) + 0.5) * kPi / res; };
  auto phi_of = [&](std::size_t j) { return (static_cast<double>(j) + 0.5) * 2.0 * kPi / res; };
  if (n == 1) {
    for (std::size_t i = 0; i < res; ++i)
      for (std::size_t j = 0; j < res; ++j)
        os << theta_of(i) << ',' << phi_of(j) << ','
           << evaluate(f, {SpherePoint{theta_of(i), phi_of(j)}}) << '\n';
  } else {
    for (std::size_t i1 = 0; i1 < res; ++i1)
      for (std::size_t j1 = 0; j1 < res; ++j1)
        for (std::size_t i2 = 0; i2 < res; ++i2)
          for (std::size_t j2 = 0; j2 < res; ++j2)
            os << theta_of(i1) << ',' << phi_of(j1) << ',' << theta_of(i2) << ',' << phi_of(j2)
               << ','
               << evaluate(f, {SpherePoint{theta_of(i1), phi_of(j1)},
                               SpherePoint{theta_of(i2), phi_of(j2)}})
               << '\n';
  }
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace spinphase
