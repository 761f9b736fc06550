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

#include <numbers>

#include "hamrec/protocols/circuit.hpp"
#include "hamrec/qsp/synthesis.hpp"

namespace hamrec::protocols {

/// Phases used by the binary protocol for k uses.
inline qsp::PhaseSequence binary_phases(int k) {
  if (k < 1) throw DomainError("binary protocol: k must be positive");
  return k % 2 ? qsp::odd_phase_sequence(k) : qsp::even_phase_sequence(k);
}

/// Single-qubit {X, Z} recognizer: outcome 0 guesses Z, outcome 1 guesses X.
inline ProtocolCircuit binary_circuit_from_phases(const qsp::PhaseSequence &seq) {
  seq.validate();
  ProtocolCircuit c;
  c.qubit_count = 1;
  const auto &ph = seq.phases;
  if (seq.convention == qsp::PhaseConvention::ZPhases) {
    // e^{iZ psi} = R_z(-2 psi); the rightmost factor acts first
    c.ops.push_back(gates::rz(0, -2 * ph[seq.k]));
    for (int j = seq.k - 1; j >= 0; --j) {
      c.ops.push_back(Slot{0});
      c.ops.push_back(gates::rz(0, -2 * ph[j]));
    }
  } else {
    const int n = seq.k / 2;
    c.ops.push_back(gates::rx(0, -ph[0]));
    for (int j = 1; j <= n; ++j) {
      c.ops.push_back(Slot{0});
      c.ops.push_back(gates::rx(0, -ph[j]));
    }
    c.ops.push_back(gates::rz(0, std::numbers::pi));
    for (int j = n; j >= 1; --j) {
      c.ops.push_back(gates::rx(0, ph[j]));
      c.ops.push_back(Slot{0});
    }
    c.ops.push_back(gates::rx(0, ph[0]));
  }
  c.measured = {0};
  c.decision = {{"0", "Z"}, {"1", "X"}};
  c.hypotheses = {{"X", BlochHamiltonian::x()}, {"Z", BlochHamiltonian::z()}};
  return c;
}

inline ProtocolCircuit build_binary_circuit(int k) {
  return binary_circuit_from_phases(binary_phases(k));
}

/// Phases for the y-register of the ternary protocol: the x-sequence read
/// backwards with the outer phases shifted by +-pi/2.
inline std::vector<double> ternary_y_phases(const std::vector<double> &x) {
  std::vector<double> y(x.rbegin(), x.rend());
  y.front() += std::numbers::pi / 2;
  y.back() -= std::numbers::pi / 2;
  return y;
}

/// The final single-qubit gate on the y-register.
inline ComplexMatrix ternary_u_gate(double phi_x, double phi_y) {
  ComplexMatrix m(2, 2);
  m << std::polar(1.0, phi_y / 2), std::polar(1.0, -phi_x / 2),
      std::polar(1.0, phi_x / 2), -std::polar(1.0, -phi_y / 2);
  return m / std::sqrt(2.0);
}

/// Three-qubit {X, Y, Z} recognizer for odd k.
inline ProtocolCircuit build_ternary_circuit(int k) {
  if (k < 1 || k % 2 == 0)
    throw DomainError("build_ternary_circuit: k must be odd");
  const std::vector<double> px = qsp::odd_phase_sequence(k).phases;
  const std::vector<double> py = ternary_y_phases(px);
  double phi_x = 0, phi_y = 0;
  for (int j = 0; j <= k; ++j) {
    phi_x += -2 * px[j];
    phi_y += -2 * py[j];
  }
  ProtocolCircuit c;
  c.qubit_count = 3;
  c.ops.push_back(gates::h(0));
  c.ops.push_back(gates::cx(0, 1));
  c.ops.push_back(gates::cx(0, 2));
  auto phase_layer = [&](int j) {
    c.ops.push_back(gates::rz(1, -2 * px[j]));
    c.ops.push_back(gates::rz(2, -2 * py[j]));
  };
  phase_layer(k);
  for (int j = k - 1; j >= 0; --j) {
    c.ops.push_back(gates::cswap(0, 1, 2));
    c.ops.push_back(Slot{2});
    c.ops.push_back(gates::cswap(0, 1, 2));
    phase_layer(j);
  }
  c.ops.push_back(gates::cswap(0, 1, 2));
  c.ops.push_back(gates::cx(0, 2));
  c.ops.push_back(gates::h(0));
  c.ops.push_back(
      gates::unitary(1, "u", ternary_u_gate(phi_x, phi_y), {phi_x, phi_y}));
  c.ops.push_back(gates::ccx(1, 2, 0));
  c.measured = {0, 2};
  c.decision = {{"00", "Z"}, {"10", "Z"}, {"01", "Y"}, {"11", "X"}};
  c.hypotheses = {{"X", BlochHamiltonian::x()},
                  {"Y", BlochHamiltonian::y()},
                  {"Z", BlochHamiltonian::z()}};
  return c;
}

/// Binary recognizer for orthogonal axes n0 (guess "H0") and n1 ("H1"),
/// obtained by conjugating every slot of the {X, Z} circuit.
inline ProtocolCircuit general_axis_binary(const BlochHamiltonian &h0,
                                           const BlochHamiltonian &h1, int k) {
  const ComplexMatrix f = frame_unitary(h0, h1);
  ProtocolCircuit base = build_binary_circuit(k);
  ProtocolCircuit c;
  c.qubit_count = 1;
  const bool trivial = phase_aligned_distance(f, pauli_i()) < 1e-14;
  for (const auto &op : base.ops) {
    if (std::holds_alternative<Slot>(op) && !trivial) {
      c.ops.push_back(gates::unitary(0, "frame_dag", f.adjoint()));
      c.ops.push_back(op);
      c.ops.push_back(gates::unitary(0, "frame", f));
    } else {
      c.ops.push_back(op);
    }
  }
  c.measured = {0};
  c.decision = {{"0", "H1"}, {"1", "H0"}};
  c.hypotheses = {{"H0", h0}, {"H1", h1}};
  return c;
}

}  // namespace hamrec::protocols
