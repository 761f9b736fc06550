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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "hamrec/core/errors.hpp"

namespace hamrec {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx I_UNIT{0.0, 1.0};

inline ComplexMatrix pauli_i() { return ComplexMatrix::Identity(2, 2); }
inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -I_UNIT, I_UNIT, 0;
  return m;
}
inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Kronecker product; the left factor holds the more significant index.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline double max_abs(const ComplexMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix &m, double tol = 1e-10) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline bool is_unitary(const ComplexMatrix &m, double tol = 1e-10) {
  return m.rows() == m.cols() &&
         max_abs(m * m.adjoint() -
                 ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

/// Smallest eigenvalue of a Hermitian matrix.
inline double hermitian_min_eig(const ComplexMatrix &m) {
  if (!is_hermitian(m, 1e-10 * std::max(1.0, max_abs(m))))
    throw DomainError("hermitian_min_eig: matrix is not Hermitian");
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("hermitian_min_eig: eigensolver failed");
  return es.eigenvalues().minCoeff();
}

struct EigenRange {
  double min = 0;
  double max = 0;
  double spectral_norm() const { return std::max(std::abs(min), std::abs(max)); }
};

/// Extreme eigenvalues of a Hermitian matrix.
inline EigenRange hermitian_eig_range(const ComplexMatrix &m) {
  if (!is_hermitian(m, 1e-10 * std::max(1.0, max_abs(m))))
    throw DomainError("hermitian_eig_range: matrix is not Hermitian");
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("hermitian_eig_range: eigensolver failed");
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

/// PSD test with slack 1e-9 max(1, ||M||_2).
inline bool is_psd(const EigenRange &r, double rel = 1e-9) {
  return r.min >= -rel * std::max(1.0, r.spectral_norm());
}

struct EigenPair {
  double value;
  ComplexVector vector;
  double residual;
};

/// Smallest eigenpair with its residual norm |M v - lambda v|.
inline EigenPair hermitian_min_eigpair(const ComplexMatrix &m) {
  if (!is_hermitian(m, 1e-10 * std::max(1.0, max_abs(m))))
    throw DomainError("hermitian_min_eigpair: matrix is not Hermitian");
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw NumericError("hermitian_min_eigpair: eigensolver failed");
  EigenPair p{es.eigenvalues()(0), es.eigenvectors().col(0), 0.0};
  p.residual = (m * p.vector - p.value * p.vector).norm();
  return p;
}

/// max-norm distance between a and b after removing the best global phase.
inline double phase_aligned_distance(const ComplexMatrix &a,
                                     const ComplexMatrix &b) {
  cplx overlap = (b.adjoint() * a).trace();
  cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return max_abs(a - phase * b);
}

/// Replaces m by G m G^dagger where G acts on qubits [first, first+t) of an
/// n-qubit register, qubit 0 being the most significant bit.
inline void conjugate_local(ComplexMatrix &m, const ComplexMatrix &g,
                            int first, int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  const int t = static_cast<int>(std::lround(std::log2(g.rows())));
  const Eigen::Index gd = g.rows();
  const int shift = n - first - t;
  const Eigen::Index low = Eigen::Index(1) << shift;
  ComplexMatrix gc = g.conjugate();
  ComplexVector buf(gd), out(gd);
  // rows
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index hi = 0; hi < (dim >> (shift + t)); ++hi) {
      for (Eigen::Index lo = 0; lo < low; ++lo) {
        Eigen::Index base = (hi << (shift + t)) | lo;
        for (Eigen::Index a = 0; a < gd; ++a) buf(a) = m(base | (a << shift), c);
        out.noalias() = g * buf;
        for (Eigen::Index a = 0; a < gd; ++a) m(base | (a << shift), c) = out(a);
      }
    }
  }
  // columns
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index hi = 0; hi < (dim >> (shift + t)); ++hi) {
      for (Eigen::Index lo = 0; lo < low; ++lo) {
        Eigen::Index base = (hi << (shift + t)) | lo;
        for (Eigen::Index a = 0; a < gd; ++a) buf(a) = m(r, base | (a << shift));
        out.noalias() = gc * buf;
        for (Eigen::Index a = 0; a < gd; ++a) m(r, base | (a << shift)) = out(a);
      }
    }
  }
}

/// Choi vector sum_j |j> (x) U|j>, input index first.
inline ComplexVector choi_vec(const ComplexMatrix &u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw DomainError("choi_vec: expected a 2x2 matrix");
  ComplexVector v(4);
  for (int j = 0; j < 2; ++j)
    for (int o = 0; o < 2; ++o) v(2 * j + o) = u(o, j);
  return v;
}

}  // namespace hamrec
