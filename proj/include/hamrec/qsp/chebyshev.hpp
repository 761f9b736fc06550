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

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hamrec/core/linalg.hpp"

namespace hamrec::qsp {

using Real = long double;
using CplxL = std::complex<Real>;

/// sum_l c_l T_l(a), stored in extended precision.
struct ChebyshevSeries {
  std::vector<CplxL> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Clenshaw recurrence.
  CplxL eval(CplxL a) const {
    CplxL b1 = 0, b2 = 0;
    for (int l = degree(); l >= 1; --l) {
      CplxL b0 = Real(2) * a * b1 - b2 + coeffs[l];
      b2 = b1;
      b1 = b0;
    }
    return coeffs.empty() ? CplxL(0) : a * b1 - b2 + coeffs[0];
  }

  cplx operator()(cplx a) const {
    CplxL v = eval(CplxL(a.real(), a.imag()));
    return cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }

  /// Value and derivative at a.
  std::pair<CplxL, CplxL> value_and_derivative(CplxL a) const {
    CplxL t0 = 1, t1 = a, d0 = 0, d1 = 1;
    CplxL v = coeffs.empty() ? CplxL(0) : coeffs[0], dv = 0;
    if (degree() >= 1) {
      v += coeffs[1] * t1;
      dv += coeffs[1] * d1;
    }
    for (int l = 2; l <= degree(); ++l) {
      CplxL t2 = Real(2) * a * t1 - t0;
      CplxL d2 = Real(2) * t1 + Real(2) * a * d1 - d0;
      v += coeffs[l] * t2;
      dv += coeffs[l] * d2;
      t0 = t1;
      t1 = t2;
      d0 = d1;
      d1 = d2;
    }
    return {v, dv};
  }

  /// Interpolant of degree n-1 through first-kind Chebyshev points.
  static ChebyshevSeries interpolate(const std::function<CplxL(Real)> &f,
                                     int n) {
    const Real pi = std::numbers::pi_v<Real>;
    std::vector<CplxL> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = f(std::cos(pi * (j + Real(0.5)) / n));
    ChebyshevSeries s;
    s.coeffs.assign(n, 0.0);
    for (int m = 0; m < n; ++m) {
      CplxL acc = 0;
      for (int j = 0; j < n; ++j)
        acc += vals[j] * std::cos(pi * m * (j + Real(0.5)) / n);
      s.coeffs[m] = acc * (m == 0 ? Real(1) / n : Real(2) / n);
    }
    return s;
  }
};

/// Target polynomial P(a) for the QSP synthesis; real coefficients.
using ChebyshevTarget = ChebyshevSeries;

/// (2/(k+1)) sum over odd l <= k of T_l.
inline ChebyshevTarget odd_target(int k) {
  if (k < 1 || k % 2 == 0) throw DomainError("odd_target: k must be odd");
  ChebyshevTarget p;
  p.coeffs.assign(k + 1, 0.0);
  for (int l = 1; l <= k; l += 2) p.coeffs[l] = Real(2) / (k + 1);
  return p;
}

}  // namespace hamrec::qsp
