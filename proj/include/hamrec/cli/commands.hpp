// Copyright 2026 The hamrec Authors
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

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hamrec/cli/io.hpp"
#include "hamrec/protocols/builders.hpp"
#include "hamrec/protocols/statistics.hpp"
#include "hamrec/qsp/synthesis.hpp"
#include "hamrec/tester/certificates.hpp"
#include "hamrec/tester/sweep.hpp"

namespace hamrec::cli {

struct RunConfig {
  std::string subcommand;
  int k = 1;
  std::string protocol = "binary";
  std::string axis = "x";
  double theta = std::numbers::pi / 2;
  double theta_min = 0;
  double theta_max = std::numbers::pi;
  int grid = 101;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  std::string out;
  /// csv or json; empty picks the subcommand default
  std::string format;

  void validate() const {
    if (k < 1) throw DomainError("k must be at least 1");
    if (grid < 2) throw DomainError("grid needs at least 2 points");
    if (shots < 1) throw DomainError("shots must be at least 1");
    if (!format.empty() && format != "csv" && format != "json")
      throw DomainError("format must be csv or json");
    protocols::protocol_kind_from_string(protocol);
  }

  std::string format_or(const std::string &d) const { return format.empty() ? d : format; }
};

/// Overlays keys of a JSON config; keys listed in `explicit_keys` are kept.
inline void apply_config(RunConfig &c, const json &j,
                         const std::vector<std::string> &explicit_keys = {}) {
  auto set = [&](const char *key, auto &field) {
    if (!j.contains(key)) return;
    for (const auto &e : explicit_keys)
      if (e == key) return;
    try {
      j.at(key).get_to(field);
    } catch (const json::exception &e) {
      throw DomainError(std::string("config key '") + key + "': " + e.what());
    }
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char *known[] = {"k", "protocol", "axis", "theta", "theta_min",
                                  "theta_max", "grid", "shots", "seed", "out",
                                  "format", "subcommand"};
    bool ok = false;
    for (const char *key : known) ok = ok || it.key() == key;
    if (!ok) throw DomainError("config: unknown key '" + it.key() + "'");
  }
  set("k", c.k);
  set("protocol", c.protocol);
  set("axis", c.axis);
  set("theta", c.theta);
  set("theta_min", c.theta_min);
  set("theta_max", c.theta_max);
  set("grid", c.grid);
  set("shots", c.shots);
  set("seed", c.seed);
  set("out", c.out);
  set("format", c.format);
}

struct CommandResult {
  std::string artifact;
  bool verified = false;
  std::string diagnostic;
};

inline protocols::ProtocolCircuit circuit_for(const RunConfig &c) {
  return protocols::protocol_kind_from_string(c.protocol) == protocols::ProtocolKind::Ternary
             ? protocols::build_ternary_circuit(c.k)
             : protocols::build_binary_circuit(c.k);
}

inline std::vector<double> grid_points(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

/// Phase file for the binary protocol; re-simulated against the closed form.
inline CommandResult cmd_synthesize(const RunConfig &c) {
  const qsp::PhaseSequence seq =
      c.k % 2 ? qsp::odd_phase_sequence(c.k) : qsp::even_phase_sequence(c.k);
  const json j = to_json(seq);
  const auto circuit = protocols::binary_circuit_from_phases(phases_from_json(j));
  double worst = 0;
  for (double t : grid_points(0, std::numbers::pi, 201)) {
    auto s = protocols::success_probabilities(circuit, t);
    for (size_t h = 0; h < s.size(); ++h)
      worst = std::max(worst, std::abs(s[h] - protocols::closed_form_success(
                                                  protocols::ProtocolKind::Binary, c.k,
                                                  circuit.hypotheses[h].label, t)));
  }
  CommandResult r{j.dump(2) + "\n", worst <= 1e-8, ""};
  if (!r.verified) r.diagnostic = "synthesize: roundtrip error " + fmt12(worst);
  return r;
}

/// Success per hypothesis on a theta grid.
inline CommandResult cmd_sweep(const RunConfig &c) {
  const auto kind = protocols::protocol_kind_from_string(c.protocol);
  const auto circuit = circuit_for(c);
  std::vector<std::string> header{"theta"};
  for (const auto &h : circuit.hypotheses) header.push_back("success_" + h.label);
  CsvWriter csv(header);
  json rows = json::array();
  double worst = 0;
  for (double t : grid_points(c.theta_min, c.theta_max, c.grid)) {
    auto s = protocols::success_probabilities(circuit, t);
    std::vector<std::string> cells{fmt12(t)};
    json row{{"theta", number(t)}};
    for (size_t h = 0; h < s.size(); ++h) {
      const std::string &label = circuit.hypotheses[h].label;
      cells.push_back(fmt12(s[h]));
      row["success_" + label] = number(s[h]);
      worst = std::max(worst, std::abs(s[h] - protocols::closed_form_success(kind, c.k, label, t)));
      if (s[h] < -1e-12 || s[h] > 1 + 1e-12) worst = std::max(worst, 1.0);
    }
    csv.row(cells);
    rows.push_back(row);
  }
  CommandResult r;
  r.artifact = c.format_or("csv") == "csv" ? csv.str() : rows.dump(2) + "\n";
  r.verified = worst <= 1e-9;
  if (!r.verified) r.diagnostic = "sweep: deviation from closed form " + fmt12(worst);
  return r;
}

/// Shot counts and guess frequencies for one hidden axis and angle.
inline CommandResult cmd_simulate(const RunConfig &c) {
  const auto circuit = circuit_for(c);
  const BlochHamiltonian h = BlochHamiltonian::parse(c.axis);
  const auto rec = protocols::sample_shots(circuit, h, c.theta, c.shots, c.seed);
  const auto exact = protocols::guess_distribution(circuit, h, c.theta);
  json counts = json::object(), guesses = json::object(), freq = json::object(),
       probs = json::object();
  std::uint64_t total = 0;
  for (const auto &[k, n] : rec.outcomes) {
    counts[k] = n;
    total += n;
  }
  for (const auto &[k, n] : rec.guesses) {
    guesses[k] = n;
    freq[k] = number(double(n) / double(c.shots));
    probs[k] = number(exact.count(k) ? exact.at(k) : 0.0);
  }
  json j{{"k", c.k},
         {"protocol", c.protocol},
         {"axis", numbers({h.axis().x(), h.axis().y(), h.axis().z()})},
         {"theta", number(c.theta)},
         {"shots", c.shots},
         {"seed", c.seed},
         {"counts", counts},
         {"guesses", guesses},
         {"guess_frequencies", freq},
         {"guess_probabilities", probs}};
  CommandResult r{j.dump(2) + "\n", total == c.shots, ""};
  if (!r.verified) r.diagnostic = "simulate: shot counts do not sum to shots";
  return r;
}

/// Dual certificate report for the binary or ternary hypothesis set.
inline CommandResult cmd_certify(const RunConfig &c) {
  const auto kind = protocols::protocol_kind_from_string(c.protocol);
  const tester::DualCertificate cert = kind == protocols::ProtocolKind::Ternary
                                           ? tester::ternary_certificate_report(c.k)
                                           : tester::binary_certificate_report(c.k);
  const Rational achieved = protocols::average_success(kind, c.k);
  json j = to_json(cert);
  j["protocol"] = c.protocol;
  j["achieved"] = achieved.str();
  const bool tight = cert.lambda == achieved;
  const bool pass = cert.pass && tight;
  j["status"] = pass ? "PASS" : "FAIL";
  CommandResult r{j.dump(2) + "\n", pass, ""};
  if (!pass) {
    try {
      tester::detail::require(cert);
      r.diagnostic = "certify: lambda " + cert.lambda.str() + " differs from achieved " +
                     achieved.str();
    } catch (const CertificateError &e) {
      r.diagnostic = std::string("certify: ") + e.what();
    }
  }
  return r;
}

/// Optimal SEQ value, fixed protocol value and guessing baseline over alpha.
inline CommandResult cmd_sdp_sweep(const RunConfig &c) {
  const auto rows =
      tester::general_axis_sweep(c.k, grid_points(0, std::numbers::pi / 2, c.grid));
  CsvWriter csv({"alpha", "n0x", "n0y", "n0z", "optimal", "fixed", "guess", "status"});
  json arr = json::array();
  bool ok = true;
  std::string diag;
  for (const auto &row : rows) {
    bool good = row.ok && row.optimal >= row.fixed - 1e-6 && row.fixed >= 0.5 - 1e-6;
    if (!good && diag.empty())
      diag = "sdp-sweep: row alpha = " + fmt12(row.alpha) +
             (row.ok ? " violates ordering" : " failed: " + row.error);
    ok = ok && good;
    std::string status = row.ok ? "ok" : "error";
    csv.row({fmt12(row.alpha), fmt12(row.n0.x()), fmt12(row.n0.y()), fmt12(row.n0.z()),
             row.ok ? fmt12(row.optimal) : "", row.ok ? fmt12(row.fixed) : "", fmt12(0.5),
             status});
    arr.push_back(to_json(row));
  }
  CommandResult r;
  r.artifact = c.format_or("csv") == "csv" ? csv.str() : arr.dump(2) + "\n";
  r.verified = ok;
  r.diagnostic = diag;
  return r;
}

inline CommandResult dispatch(const RunConfig &c) {
  c.validate();
  if (c.subcommand == "synthesize") return cmd_synthesize(c);
  if (c.subcommand == "sweep") return cmd_sweep(c);
  if (c.subcommand == "simulate") return cmd_simulate(c);
  if (c.subcommand == "certify") return cmd_certify(c);
  if (c.subcommand == "sdp-sweep") return cmd_sdp_sweep(c);
  throw DomainError("unknown subcommand '" + c.subcommand + "'");
}

/// Runs a subcommand, writes the artifact and returns the exit code.
inline int run(const RunConfig &c, std::ostream &out, std::ostream &err) {
  CommandResult r;
  try {
    r = dispatch(c);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (c.out.empty()) {
    out << r.artifact;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    f << r.artifact;
    if (!f) {
      err << "error: cannot write " << c.out << "\n";
      return 1;
    }
  }
  if (!r.verified) {
    err << r.diagnostic << "\n";
    return 2;
  }
  return 0;
}

}  // namespace hamrec::cli
