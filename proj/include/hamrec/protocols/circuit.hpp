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

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hamrec/core/bloch.hpp"
#include "hamrec/core/state_vector.hpp"
#include "hamrec/qsp/phase_sequence.hpp"

namespace hamrec::protocols {

struct Gate {
  std::string name;
  std::vector<int> targets;
  std::vector<double> angles;
  ComplexMatrix matrix;
};

/// Placeholder for one use of the hidden evolution.
struct Slot {
  int target = 0;
};

using CircuitOp = std::variant<Gate, Slot>;

struct Hypothesis {
  std::string label;
  BlochHamiltonian hamiltonian;
};

struct ProtocolCircuit {
  int qubit_count = 1;
  std::vector<CircuitOp> ops;
  std::vector<int> measured;
  /// measured bit string -> hypothesis label
  std::map<std::string, std::string> decision;
  std::vector<Hypothesis> hypotheses;

  int slot_count() const {
    int k = 0;
    for (const auto &op : ops) k += std::holds_alternative<Slot>(op);
    return k;
  }
};

namespace gates {

inline Gate h(int q) {
  ComplexMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return {"h", {q}, {}, m / std::sqrt(2.0)};
}
inline Gate rx(int q, double phi) { return {"rx", {q}, {phi}, qsp::rx(phi)}; }
inline Gate rz(int q, double phi) { return {"rz", {q}, {phi}, qsp::rz(phi)}; }
inline Gate cx(int c, int t) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = pauli_x();
  return {"cx", {c, t}, {}, m};
}
inline Gate cswap(int c, int a, int b) {
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  m(5, 5) = m(6, 6) = 0;
  m(5, 6) = m(6, 5) = 1;
  return {"cswap", {c, a, b}, {}, m};
}
inline Gate ccx(int c1, int c2, int t) {
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  m.block(6, 6, 2, 2) = pauli_x();
  return {"ccx", {c1, c2, t}, {}, m};
}
inline Gate unitary(int q, const std::string &name, const ComplexMatrix &m,
                    std::vector<double> angles = {}) {
  return {name, {q}, std::move(angles), m};
}

}  // namespace gates

/// Runs the circuit with slot j replaced by slot_ops[j] (any 2x2 operator).
inline StateVector run_with_slots(const ProtocolCircuit &c,
                                  const std::vector<ComplexMatrix> &slot_ops) {
  StateVector s(c.qubit_count);
  size_t j = 0;
  for (const auto &op : c.ops) {
    if (const auto *g = std::get_if<Gate>(&op)) {
      apply_operator(s, g->matrix, g->targets);
    } else {
      if (j >= slot_ops.size()) throw DomainError("run_with_slots: too few slot ops");
      apply_operator(s, slot_ops[j++], {std::get<Slot>(op).target});
    }
  }
  return s;
}

inline StateVector simulate(const ProtocolCircuit &c, const ComplexMatrix &u) {
  if (!is_unitary(u)) throw DomainError("simulate: hidden evolution not unitary");
  return run_with_slots(c, std::vector<ComplexMatrix>(c.slot_count(), u));
}

/// Probability of each measured bit string.
inline std::map<std::string, double> outcome_distribution(
    const ProtocolCircuit &c, const BlochHamiltonian &h, double theta) {
  StateVector s = simulate(c, rotation_gate(h, theta));
  std::map<std::string, double> out;
  for (const auto &[bits, label] : c.decision) out[bits] = 0;
  const int n = c.qubit_count;
  for (Eigen::Index b = 0; b < s.amplitudes.size(); ++b) {
    std::string key;
    for (int q : c.measured) key += ((b >> (n - 1 - q)) & 1) ? '1' : '0';
    out[key] += s.probability(b);
  }
  return out;
}

/// Probability of each guessed label.
inline std::map<std::string, double> guess_distribution(
    const ProtocolCircuit &c, const BlochHamiltonian &h, double theta) {
  std::map<std::string, double> out;
  for (const auto &hyp : c.hypotheses) out[hyp.label] = 0;
  for (const auto &[bits, p] : outcome_distribution(c, h, theta)) {
    auto it = c.decision.find(bits);
    if (it == c.decision.end()) throw DomainError("decision map incomplete");
    out[it->second] += p;
  }
  return out;
}

/// Success probability per hypothesis at one theta, in hypothesis order.
inline std::vector<double> success_probabilities(const ProtocolCircuit &c,
                                                 double theta) {
  std::vector<double> out;
  for (const auto &hyp : c.hypotheses)
    out.push_back(guess_distribution(c, hyp.hamiltonian, theta)[hyp.label]);
  return out;
}

struct ShotRecord {
  std::map<std::string, std::uint64_t> outcomes;
  std::map<std::string, std::uint64_t> guesses;
};

/// Draws shots from the exact outcome distribution with a seeded mt19937_64.
inline ShotRecord sample_shots(const ProtocolCircuit &c,
                               const BlochHamiltonian &h, double theta,
                               std::uint64_t shots, std::uint64_t seed) {
  auto dist = outcome_distribution(c, h, theta);
  std::vector<std::string> keys;
  std::vector<double> cdf;
  double acc = 0;
  for (const auto &[k, p] : dist) {
    keys.push_back(k);
    acc += p;
    cdf.push_back(acc);
  }
  std::mt19937_64 rng(seed);
  ShotRecord rec;
  for (const auto &k : keys) rec.outcomes[k] = 0;
  for (const auto &hyp : c.hypotheses) rec.guesses[hyp.label] = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    size_t j = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    if (j >= keys.size()) j = keys.size() - 1;
    ++rec.outcomes[keys[j]];
  }
  for (const auto &[k, n] : rec.outcomes) rec.guesses[c.decision.at(k)] += n;
  return rec;
}

}  // namespace hamrec::protocols
