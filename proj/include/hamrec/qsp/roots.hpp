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

#include <Eigen/Eigenvalues>
#include <vector>

#include "hamrec/core/errors.hpp"
#include "hamrec/qsp/chebyshev.hpp"

namespace hamrec::qsp {

/// Roots of sum_j c_j x^j from the companion matrix, Newton-polished.
inline std::vector<cplx> polynomial_roots(const std::vector<cplx> &c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && c[d] == cplx(0)) --d;
  if (d < 1) return {};
  ComplexMatrix comp = ComplexMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<ComplexMatrix> es(comp, false);
  if (es.info() != Eigen::Success)
    throw NumericError("polynomial_roots: eigensolver failed");
  std::vector<cplx> roots(es.eigenvalues().data(),
                          es.eigenvalues().data() + d);
  for (auto &r : roots) {
    for (int it = 0; it < 3; ++it) {
      cplx v = 0, dv = 0;
      for (int j = d; j >= 0; --j) {
        dv = dv * r + v;
        v = v * r + c[j];
      }
      if (std::abs(dv) == 0) break;
      cplx step = v / dv;
      if (!(std::abs(step) < 1e-6 * std::max(1.0, std::abs(r)))) break;
      r -= step;
    }
  }
  return roots;
}

/// Roots of a Chebyshev series from the colleague matrix, Newton-polished.
inline std::vector<CplxL> chebyshev_roots(const ChebyshevSeries &s) {
  using MatL = Eigen::Matrix<CplxL, Eigen::Dynamic, Eigen::Dynamic>;
  int d = s.degree();
  while (d > 0 && s.coeffs[d] == CplxL(0)) --d;
  if (d < 1) return {};
  const auto &c = s.coeffs;
  MatL col = MatL::Zero(d, d);
  if (d == 1) {
    col(0, 0) = -c[0] / c[1];
  } else {
    col(0, 1) = 1.0;
    for (int i = 1; i < d - 1; ++i) {
      col(i, i - 1) = 0.5;
      col(i, i + 1) = 0.5;
    }
    col(d - 1, d - 2) += Real(0.5);
    for (int j = 0; j < d; ++j) col(d - 1, j) -= c[j] / (Real(2) * c[d]);
  }
  Eigen::ComplexEigenSolver<MatL> es(col, false);
  if (es.info() != Eigen::Success)
    throw NumericError("chebyshev_roots: eigensolver failed");
  std::vector<CplxL> roots(es.eigenvalues().data(),
                           es.eigenvalues().data() + d);
  ChebyshevSeries trunc{std::vector<CplxL>(c.begin(), c.begin() + d + 1)};
  for (auto &r : roots) {
    for (int it = 0; it < 3; ++it) {
      auto [v, dv] = trunc.value_and_derivative(r);
      if (std::abs(dv) == Real(0)) break;
      CplxL step = v / dv;
      if (!(std::abs(step) < Real(1e-6) * std::max(Real(1), std::abs(r)))) break;
      r -= step;
    }
  }
  return roots;
}

}  // namespace hamrec::qsp
