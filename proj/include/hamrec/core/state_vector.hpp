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

#include <vector>

#include "hamrec/core/linalg.hpp"

namespace hamrec {

/// Pure state of n qubits; qubit 0 is the most significant bit.
struct StateVector {
  int qubit_count = 0;
  ComplexVector amplitudes;

  explicit StateVector(int n) : qubit_count(n) {
    if (n < 1 || n > 20) throw DomainError("StateVector: bad qubit count");
    amplitudes = ComplexVector::Zero(Eigen::Index(1) << n);
    amplitudes(0) = 1.0;
  }

  double probability(Eigen::Index basis) const {
    return std::norm(amplitudes(basis));
  }
};

/// Applies an arbitrary 2^t x 2^t operator; targets[0] is the operator's most
/// significant qubit. No unitarity check.
inline void apply_operator(StateVector &s, const ComplexMatrix &g,
                           const std::vector<int> &targets) {
  const int n = s.qubit_count;
  const int t = static_cast<int>(targets.size());
  if (t == 0 || g.rows() != (Eigen::Index(1) << t) || g.cols() != g.rows())
    throw DomainError("apply_gate: dimension mismatch");
  Eigen::Index mask = 0;
  std::vector<Eigen::Index> bit(t);
  for (int i = 0; i < t; ++i) {
    if (targets[i] < 0 || targets[i] >= n)
      throw DomainError("apply_gate: target out of range");
    bit[i] = Eigen::Index(1) << (n - 1 - targets[i]);
    if (mask & bit[i]) throw DomainError("apply_gate: repeated target");
    mask |= bit[i];
  }
  const Eigen::Index gd = g.rows();
  std::vector<Eigen::Index> offset(gd, 0);
  for (Eigen::Index a = 0; a < gd; ++a)
    for (int i = 0; i < t; ++i)
      if (a & (Eigen::Index(1) << (t - 1 - i))) offset[a] |= bit[i];
  ComplexVector buf(gd), out(gd);
  const Eigen::Index dim = s.amplitudes.size();
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (Eigen::Index a = 0; a < gd; ++a) buf(a) = s.amplitudes(base | offset[a]);
    out.noalias() = g * buf;
    for (Eigen::Index a = 0; a < gd; ++a) s.amplitudes(base | offset[a]) = out(a);
  }
}

/// Applies a unitary gate and returns the new state.
inline StateVector apply_gate(StateVector s, const ComplexMatrix &g,
                              const std::vector<int> &targets) {
  if (!is_unitary(g, 1e-10)) throw DomainError("apply_gate: gate not unitary");
  apply_operator(s, g, targets);
  return s;
}

}  // namespace hamrec
