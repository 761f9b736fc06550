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

#include <bit>
#include <numbers>
#include <vector>

#include "hamrec/core/bloch.hpp"

namespace hamrec::tester {

/// Qubit index of the input / output of slot l (1-based) in the interleaved
/// ordering I_1 O_1 I_2 O_2 ...
inline int input_qubit(int l) { return 2 * (l - 1); }
inline int output_qubit(int l) { return 2 * (l - 1) + 1; }

inline constexpr int MAX_OPERATOR_SLOTS = 6;

/// Theta-average of |U><<U|^{(x)k} for U = exp(-i theta n.sigma).
struct PerformanceOperator {
  int k = 0;
  BlochHamiltonian axis = BlochHamiltonian::z();
  ComplexMatrix matrix;
  /// bit strings j (slot 1 most significant) grouped by Hamming weight
  std::vector<std::vector<unsigned>> weight_classes;
};

namespace detail {

inline Eigen::Index doubled_index(unsigned j, int k) {
  Eigen::Index idx = 0;
  for (int l = 0; l < k; ++l)
    if ((j >> (k - 1 - l)) & 1u) idx |= Eigen::Index(3) << (2 * (k - 1 - l));
  return idx;
}

}  // namespace detail

inline PerformanceOperator performance_operator(const BlochHamiltonian &h,
                                                int k) {
  if (k < 1) throw DomainError("performance_operator: k must be positive");
  if (k > MAX_OPERATOR_SLOTS)
    throw ResourceError("performance_operator: k > 6 exceeds dense limit");
  PerformanceOperator op;
  op.k = k;
  op.axis = h;
  op.weight_classes.assign(k + 1, {});
  for (unsigned j = 0; j < (1u << k); ++j)
    op.weight_classes[std::popcount(j)].push_back(j);
  const Eigen::Index dim = Eigen::Index(1) << (2 * k);
  op.matrix = ComplexMatrix::Zero(dim, dim);
  for (const auto &cls : op.weight_classes)
    for (unsigned a : cls)
      for (unsigned b : cls)
        op.matrix(detail::doubled_index(a, k), detail::doubled_index(b, k)) = 1.0;
  const ComplexMatrix v = z_to_axis_unitary(h);
  if (phase_aligned_distance(v, pauli_i()) > 1e-15) {
    const ComplexMatrix g = kron(ComplexMatrix(v.conjugate()), v);
    for (int l = 1; l <= k; ++l)
      conjugate_local(op.matrix, g, input_qubit(l), 2 * k);
  }
  return op;
}

/// Same operator by the trapezoid rule over one period.
inline ComplexMatrix performance_operator_quadrature(const BlochHamiltonian &h,
                                                     int k, int points = 128) {
  if (k < 1 || k > MAX_OPERATOR_SLOTS)
    throw DomainError("performance_operator_quadrature: bad k");
  const Eigen::Index dim = Eigen::Index(1) << (2 * k);
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < points; ++i) {
    ComplexVector c = choi_vec(rotation_gate(h, std::numbers::pi * i / points));
    ComplexVector v = c;
    for (int l = 1; l < k; ++l) v = kron(v, c);
    acc.noalias() += v * v.adjoint();
  }
  return acc / double(points);
}

}  // namespace hamrec::tester
