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
#include <array>
#include <numbers>
#include <vector>

#include "hamrec/core/errors.hpp"
#include "hamrec/qsp/chebyshev.hpp"
#include "hamrec/qsp/laurent.hpp"
#include "hamrec/qsp/phase_sequence.hpp"
#include "hamrec/qsp/roots.hpp"

namespace hamrec::qsp {

using Mat2 = Eigen::Matrix2cd;

/// Partner Q of parity (k-1) mod 2 with P^2 + (1-a^2)|Q|^2 = 1 on [-1, 1].
/// Among the admissible Q, the roots of Q(sqrt b) are taken in the upper
/// half plane and the leading factor is positive.
inline ChebyshevSeries complete_partner(const ChebyshevTarget &p) {
  const int k = p.degree();
  if (k < 1) throw DomainError("complete_partner: degree must be positive");
  for (int l = 0; l <= k; ++l) {
    if (std::abs(p.coeffs[l].imag()) > Real(1e-14))
      throw DomainError("complete_partner: coefficients must be real");
    if ((l - k) % 2 != 0 && std::abs(p.coeffs[l]) > Real(1e-14))
      throw DomainError("complete_partner: P must have parity k mod 2");
  }
  if (std::abs(p.coeffs[k]) == Real(0))
    throw DomainError("complete_partner: leading coefficient vanishes");
  const Real pi = std::numbers::pi_v<Real>;
  auto preal = [&](Real a) { return p.eval(a).real(); };
  for (int i = 0; i <= 1000; ++i)
    if (std::abs(preal(std::cos(pi * i / 1000))) > 1 + 1e-10)
      throw DomainError("complete_partner: |P| exceeds 1 on [-1, 1]");
  if (std::abs(1 - preal(1) * preal(1)) > 1e-9)
    throw SynthesisError("complete_partner: 1-P^2 not divisible by 1-a^2");
  const int q = (k - 1) % 2;
  if (q == 1 && std::abs(1 - preal(0) * preal(0)) > 1e-9)
    throw SynthesisError("complete_partner: odd partner needs |P(0)| = 1");
  const int d = (k - 1 - q) / 2;

  // |Qt(b)|^2 as a Chebyshev series in x = 2b - 1
  auto g_of_b = [&](Real b) {
    Real pa = preal(std::sqrt(b));
    return (1 - pa * pa) / ((1 - b) * (q ? b : Real(1)));
  };
  ChebyshevSeries g = ChebyshevSeries::interpolate(
      [&](Real x) { return CplxL(g_of_b((x + 1) / 2)); }, 2 * d + 1);

  std::vector<CplxL> chosen;
  if (d > 0) {
    std::vector<CplxL> roots = chebyshev_roots(g);
    if (static_cast<int>(roots.size()) != 2 * d)
      throw SynthesisError("complete_partner: |Q|^2 has wrong degree");
    for (auto &r : roots) r = (r + Real(1)) / Real(2);
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      size_t best = roots.size();
      Real dist = 0;
      for (size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        Real dj = std::abs(roots[j] - std::conj(roots[i]));
        if (best == roots.size() || dj < dist) {
          best = j;
          dist = dj;
        }
      }
      if (best == roots.size() ||
          dist > Real(1e-5) * std::max(Real(1), std::abs(roots[i])))
        throw SynthesisError("complete_partner: unpaired root of |Q|^2");
      used[best] = true;
      CplxL s = (roots[i] + std::conj(roots[best])) / Real(2);
      chosen.push_back(s.imag() < 0 ? std::conj(s) : s);
    }
  }
  auto qt_monic = [&](Real b) {
    CplxL v = 1;
    for (auto s : chosen) v *= (b - s);
    return v;
  };
  Real kappa2 = 0;
  const int samples = 2 * d + 1;
  for (int j = 0; j < samples; ++j) {
    Real b = (std::cos(pi * (j + Real(0.5)) / samples) + 1) / 2;
    kappa2 += g_of_b(b) / std::norm(qt_monic(b));
  }
  const Real kappa = std::sqrt(kappa2 / samples);

  ChebyshevSeries qs = ChebyshevSeries::interpolate(
      [&](Real a) { return kappa * (q ? a : Real(1)) * qt_monic(a * a); }, k);
  for (int l = 0; l < k; ++l)
    if ((l - (k - 1)) % 2 != 0) qs.coeffs[l] = 0;

  for (int i = 0; i <= 1000; ++i) {
    Real a = std::cos(pi * i / 1000);
    Real res = std::abs(preal(a) * preal(a) + (1 - a * a) * std::norm(qs.eval(a)) - 1);
    if (res > 1e-9)
      throw SynthesisError("complete_partner: completion residual too large");
  }
  return qs;
}

using Mat2L = Eigen::Matrix<CplxL, 2, 2>;

/// Laurent coefficients C_{-k..k} (index j+k) of a 2x2 matrix function of
/// w = e^{i theta}, computed in extended precision.
template <class F>
std::vector<Mat2L> laurent_coefficients(const F &u_of_theta, int k) {
  const int n = 2 * k + 2;
  const Real pi = std::numbers::pi_v<Real>;
  std::vector<Mat2L> samples(n);
  for (int m = 0; m < n; ++m) samples[m] = u_of_theta(2 * pi * m / n);
  std::vector<Mat2L> c(2 * k + 1);
  for (int j = -k; j <= k; ++j) {
    Mat2L acc = Mat2L::Zero();
    for (int m = 0; m < n; ++m)
      acc += samples[m] * std::polar(Real(1), -2 * pi * ((j * m) % n) / n);
    c[j + k] = acc / Real(n);
  }
  return c;
}

/// Peels e^{iZ phi_0} S e^{iZ phi_1} ... S e^{iZ phi_k} off a Laurent matrix
/// polynomial, S = e^{-iX theta}.
inline std::vector<double> strip_layers(std::vector<Mat2L> c, int k) {
  Real scale = 0;
  for (const auto &m : c) scale = std::max(scale, m.cwiseAbs().maxCoeff());
  const Real tol = Real(1e-10) * scale;
  for (int j = -k; j <= k; ++j)
    if ((j - k) % 2 != 0) {
      if (c[j + k].cwiseAbs().maxCoeff() > tol)
        throw SynthesisError("strip_layers: target lacks definite parity");
      c[j + k].setZero();
    }
  Mat2L pm, pp;
  pm << Real(0.5), Real(-0.5), Real(-0.5), Real(0.5);
  pp << Real(0.5), Real(0.5), Real(0.5), Real(0.5);
  std::vector<double> phases;
  for (int d = k; d >= 1; --d) {
    const Mat2L &top = c[d + k], &bot = c[-d + k];
    CplxL w = 0;
    for (int col = 0; col < 2; ++col) {
      w += top(1, col) * std::conj(top(0, col));
      w -= bot(1, col) * std::conj(bot(0, col));
    }
    if (std::abs(w) == Real(0))
      throw SynthesisError("strip_layers: outer coefficients vanish", k - d);
    Real phi = std::arg(-std::conj(w)) / 2;
    phases.push_back(static_cast<double>(phi));
    Mat2L ez = Mat2L::Zero();
    ez(0, 0) = std::polar(Real(1), -phi);
    ez(1, 1) = std::polar(Real(1), phi);
    std::vector<Mat2L> e(2 * k + 1);
    for (int j = -d; j <= d; ++j) e[j + k] = ez * c[j + k];
    if ((pp * e[d + k]).cwiseAbs().maxCoeff() > tol ||
        (pm * e[-d + k]).cwiseAbs().maxCoeff() > tol)
      throw SynthesisError("strip_layers: degree fails to drop", k - d);
    std::vector<Mat2L> next(2 * k + 1, Mat2L::Zero());
    for (int j = -(d - 1); j <= d - 1; j += 2)
      next[j + k] = pm * e[j + 1 + k] + pp * e[j - 1 + k];
    c = std::move(next);
  }
  const Mat2L &c0 = c[k];
  Real phi = std::arg(c0(0, 0));
  const Real rtol = Real(1e-8) * std::max(Real(1), scale);
  if (std::abs(c0(0, 1)) > tol || std::abs(c0(1, 0)) > tol ||
      std::abs(c0(0, 0) - std::polar(Real(1), phi)) > rtol ||
      std::abs(c0(1, 1) - std::polar(Real(1), -phi)) > rtol)
    throw SynthesisError("strip_layers: remainder is not a z-phase", k);
  phases.push_back(static_cast<double>(phi));
  return phases;
}

/// Phases realizing [[P, -isQ], [-isQ*, P*]] with a = cos, s = sin theta.
inline PhaseSequence layer_strip(const ChebyshevTarget &p,
                                 const ChebyshevSeries &q, int k) {
  if (p.degree() != k || q.degree() > k - 1)
    throw DomainError("layer_strip: degree mismatch");
  auto u = [&](Real theta) {
    Real a = std::cos(theta), s = std::sin(theta);
    CplxL pa = p.eval(a), qa = q.eval(a);
    const CplxL iu(0, 1);
    Mat2L m;
    m << pa, -iu * s * qa, -iu * s * std::conj(qa), std::conj(pa);
    return m;
  };
  PhaseSequence seq{k, PhaseConvention::ZPhases,
                    strip_layers(laurent_coefficients(u, k), k)};
  for (int i = 0; i <= 1000; ++i) {
    double theta = std::numbers::pi * i / 1000;
    ComplexMatrix m = evaluate_qsp(seq, theta, BlochHamiltonian::x());
    if (std::abs(m(0, 0) - p(std::cos(theta))) > 1e-8)
      throw SynthesisError("layer_strip: roundtrip check failed");
  }
  return seq;
}

/// Phases for the odd-k binary protocol.
inline PhaseSequence odd_phase_sequence(int k) {
  ChebyshevTarget p = odd_target(k);
  return layer_strip(p, complete_partner(p), k);
}

/// The Laurent polynomials behind the even-k protocol.
struct EvenConstruction {
  int k = 0;
  LaurentPoly h, l, p, q, f, g;
};

namespace detail {

// y-polynomial with coefficients c; roots outside the unit circle.
inline std::vector<cplx> outer_roots(const std::vector<cplx> &c, int expect,
                                     const char *what) {
  std::vector<cplx> roots = polynomial_roots(c);
  for (auto y : roots) {
    bool conj_ok = false, recip_ok = false;
    cplx yc = std::conj(y), yr = 1.0 / std::conj(y);
    for (auto z : roots) {
      if (std::abs(z - yc) <= 1e-8 * std::max(1.0, std::abs(y))) conj_ok = true;
      if (std::abs(z - yr) <= 1e-8 * std::max(1.0, std::abs(yr))) recip_ok = true;
    }
    if (!conj_ok || !recip_ok)
      throw SynthesisError(std::string("even_construction: roots of ") + what +
                           " are not paired");
  }
  std::vector<cplx> out;
  for (auto y : roots)
    if (std::abs(y) > 1) out.push_back(y);
  if (static_cast<int>(out.size()) != expect)
    throw SynthesisError(std::string("even_construction: ") + what +
                         " has roots on the unit circle");
  return out;
}

// a * prod (z^2 - y) as a Laurent polynomial in z, real coefficients.
inline LaurentPoly even_product(const std::vector<cplx> &ys, double lead) {
  std::vector<cplx> c{lead};
  for (auto y : ys) {
    std::vector<cplx> n(c.size() + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= y * c[i];
    }
    c = std::move(n);
  }
  LaurentPoly p{0, std::vector<cplx>(2 * c.size() - 1, 0)};
  for (size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i].imag()) > 1e-10 * std::max(1.0, std::abs(c[i])))
      throw SynthesisError("even_construction: complex coefficient");
    p.coeffs[2 * i] = c[i].real();
  }
  return p;
}

inline double abs_product(const std::vector<cplx> &ys) {
  double v = 1;
  for (auto y : ys) v *= std::abs(y);
  return v;
}

}  // namespace detail

/// Builds H = 1 + f_k, L = 1 - f_k and their factors P, Q and F, G.
inline EvenConstruction even_construction(int k) {
  if (k < 2 || k % 2 != 0)
    throw DomainError("even_construction: k must be even and positive");
  const int n = k / 2;
  EvenConstruction ec;
  ec.k = k;
  // in z: 1 +- (1/(k+1)) sum_{l even} z^l, l = -k..k
  ec.h = LaurentPoly{-k, std::vector<cplx>(2 * k + 1, 0)};
  ec.l = ec.h;
  for (int l = -k; l <= k; l += 2) {
    ec.h.coeffs[l + k] = 1.0 / (k + 1);
    ec.l.coeffs[l + k] = -1.0 / (k + 1);
  }
  ec.h.coeffs[k] += 1.0;
  ec.l.coeffs[k] += 1.0;
  // z^k H(z) as a polynomial in y = z^2
  std::vector<cplx> hy(k + 1), ly(k + 1);
  for (int e = 0; e <= k; ++e) {
    hy[e] = ec.h.coeffs[2 * e];
    ly[e] = ec.l.coeffs[2 * e];
  }
  // remove the double root at y = 1
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<cplx> quo(ly.size() - 1);
    cplx carry = 0;
    for (int i = static_cast<int>(ly.size()) - 1; i >= 1; --i) {
      carry = ly[i] + carry;
      quo[i - 1] = carry;
    }
    cplx rem = ly[0] + carry;
    if (std::abs(rem) > 1e-12)
      throw SynthesisError("even_construction: L lacks a double root at 1");
    ly = std::move(quo);
  }
  std::vector<cplx> hr = detail::outer_roots(hy, n, "H");
  std::vector<cplx> lr = detail::outer_roots(ly, n - 1, "L");
  const double a = 1 / std::sqrt((k + 1) * detail::abs_product(hr));
  const double b = 1 / std::sqrt((k + 1) * detail::abs_product(lr));
  ec.p = detail::even_product(hr, a);
  std::vector<cplx> lr1 = lr;
  lr1.push_back(1.0);
  ec.q = detail::even_product(lr1, b);
  ec.f = (0.5 * (ec.p + ec.q)).shifted(-n);
  ec.g = (0.5 * (ec.p - ec.q)).shifted(-n);

  auto check = [&](const LaurentPoly &x, const LaurentPoly &target,
                   const char *what) {
    LaurentPoly r = x * x.reflected() - target;
    if (r.max_coeff() > 1e-8 * std::max(1.0, target.max_coeff()))
      throw SynthesisError(std::string("even_construction: ") + what +
                           " factorization residual too large");
  };
  check(ec.p, ec.h, "H");
  check(ec.q, ec.l, "L");
  if (std::abs(ec.p(1.0) - std::sqrt(2.0)) > 1e-9 || std::abs(ec.q(1.0)) > 1e-9)
    throw SynthesisError("even_construction: boundary values off");
  return ec;
}

/// Phases for the even-k binary protocol; sum of phases is -pi/2.
inline PhaseSequence even_phase_sequence(int k) {
  EvenConstruction ec = even_construction(k);
  const int n = k / 2;
  Mat2 had;
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  std::vector<Mat2L> c(2 * n + 1);
  for (int j = -n; j <= n; ++j) {
    Mat2 m;
    m << ec.f.coeff(j), I_UNIT * ec.g.coeff(j), I_UNIT * ec.g.coeff(-j),
        ec.f.coeff(-j);
    c[j + n] = (had * m * had).cast<CplxL>();
  }
  std::vector<double> psi = strip_layers(c, n);
  PhaseSequence seq{k, PhaseConvention::XPhasesReflected, {}};
  double sum = 0;
  for (double x : psi) {
    seq.phases.push_back(-2 * x);
    sum += -2 * x;
  }
  double shift = -std::numbers::pi / 2 - sum;
  double turns = shift / (2 * std::numbers::pi);
  if (std::abs(turns - std::round(turns)) > 1e-9)
    throw SynthesisError("even_phase_sequence: phase sum off");
  seq.phases[0] += shift;
  return seq;
}

}  // namespace hamrec::qsp
