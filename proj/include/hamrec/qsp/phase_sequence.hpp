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
#include <string>
#include <vector>

#include "hamrec/core/bloch.hpp"

namespace hamrec::qsp {

enum class PhaseConvention {
  /// e^{iZ phi_0} prod_j U e^{iZ phi_j}, k+1 phases.
  ZPhases,
  /// Reflected x-rotation sequence for even k, k/2+1 phases.
  XPhasesReflected,
};

inline std::string to_string(PhaseConvention c) {
  return c == PhaseConvention::ZPhases ? "z-phases" : "x-phases-reflected";
}

inline PhaseConvention phase_convention_from_string(const std::string &s) {
  if (s == "z-phases") return PhaseConvention::ZPhases;
  if (s == "x-phases-reflected") return PhaseConvention::XPhasesReflected;
  throw DomainError("unknown phase convention '" + s + "'");
}

struct PhaseSequence {
  int k = 0;
  PhaseConvention convention = PhaseConvention::ZPhases;
  std::vector<double> phases;

  void validate() const {
    if (k < 1) throw DomainError("PhaseSequence: k must be positive");
    size_t want = convention == PhaseConvention::ZPhases
                      ? static_cast<size_t>(k) + 1
                      : static_cast<size_t>(k) / 2 + 1;
    if (convention == PhaseConvention::XPhasesReflected && k % 2 != 0)
      throw DomainError("PhaseSequence: reflected sequence needs even k");
    if (phases.size() != want)
      throw DomainError("PhaseSequence: expected " + std::to_string(want) +
                        " phases, got " + std::to_string(phases.size()));
  }
};

inline ComplexMatrix z_phase(double phi) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, phi);
  m(1, 1) = std::polar(1.0, -phi);
  return m;
}

/// R_x(phi) = exp(-i X phi / 2).
inline ComplexMatrix rx(double phi) {
  return std::cos(phi / 2) * pauli_i() - I_UNIT * std::sin(phi / 2) * pauli_x();
}

/// R_z(phi) = exp(-i Z phi / 2).
inline ComplexMatrix rz(double phi) {
  return std::cos(phi / 2) * pauli_i() - I_UNIT * std::sin(phi / 2) * pauli_z();
}

/// Matrix of the sequence with every slot filled by exp(-i theta n.sigma).
inline ComplexMatrix evaluate_qsp(const PhaseSequence &seq, double theta,
                                  const BlochHamiltonian &signal) {
  seq.validate();
  const ComplexMatrix u = rotation_gate(signal, theta);
  const auto &ph = seq.phases;
  if (seq.convention == PhaseConvention::ZPhases) {
    ComplexMatrix m = z_phase(ph[0]);
    for (int j = 1; j <= seq.k; ++j) m = m * u * z_phase(ph[j]);
    return m;
  }
  const int n = seq.k / 2;
  ComplexMatrix m = rx(ph[0]);
  for (int j = 1; j <= n; ++j) m = m * u * rx(ph[j]);
  m = m * rz(std::numbers::pi) * rx(-ph[n]);
  for (int j = n - 1; j >= 0; --j) m = m * u * rx(-ph[j]);
  return m;
}

}  // namespace hamrec::qsp
