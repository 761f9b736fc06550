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
#include <vector>

#include "hamrec/core/linalg.hpp"

namespace hamrec::qsp {

/// sum_{j=min_power}^{max_power} c_j z^j.
struct LaurentPoly {
  int min_power = 0;
  std::vector<cplx> coeffs;

  int max_power() const {
    return min_power + static_cast<int>(coeffs.size()) - 1;
  }

  cplx coeff(int j) const {
    int idx = j - min_power;
    return (idx < 0 || idx >= static_cast<int>(coeffs.size())) ? cplx(0)
                                                                : coeffs[idx];
  }

  cplx operator()(cplx z) const {
    cplx acc = 0;
    for (int j = max_power(); j >= min_power; --j) acc = acc * z + coeff(j);
    return acc * std::pow(z, min_power);
  }

  /// Drops leading and trailing coefficients with |c| <= tol.
  LaurentPoly trimmed(double tol = 0.0) const {
    LaurentPoly p = *this;
    while (!p.coeffs.empty() && std::abs(p.coeffs.back()) <= tol)
      p.coeffs.pop_back();
    while (!p.coeffs.empty() && std::abs(p.coeffs.front()) <= tol) {
      p.coeffs.erase(p.coeffs.begin());
      ++p.min_power;
    }
    if (p.coeffs.empty()) p = LaurentPoly{0, {0.0}};
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly r{a.min_power + b.min_power,
                  std::vector<cplx>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      for (size_t j = 0; j < b.coeffs.size(); ++j)
        r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
    int lo = std::min(a.min_power, b.min_power);
    int hi = std::max(a.max_power(), b.max_power());
    LaurentPoly r{lo, std::vector<cplx>(hi - lo + 1, 0)};
    for (int j = lo; j <= hi; ++j) r.coeffs[j - lo] = a.coeff(j) + b.coeff(j);
    return r;
  }

  friend LaurentPoly operator*(cplx s, const LaurentPoly &a) {
    LaurentPoly r = a;
    for (auto &c : r.coeffs) c *= s;
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
    return a + (-1.0) * b;
  }

  /// p(1/z).
  LaurentPoly reflected() const {
    LaurentPoly r{-max_power(), coeffs};
    std::reverse(r.coeffs.begin(), r.coeffs.end());
    return r;
  }

  /// z^s p(z).
  LaurentPoly shifted(int s) const { return LaurentPoly{min_power + s, coeffs}; }

  double max_coeff() const {
    double m = 0;
    for (auto c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }
};

}  // namespace hamrec::qsp
