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
#include <string>
#include <vector>

#include "hamrec/core/rational.hpp"
#include "hamrec/protocols/circuit.hpp"

namespace hamrec::protocols {

/// f_k(theta) = sum_{l=-k}^{k} (k-|l|+1)/(k+1)^2 e^{2il theta}.
inline double error_polynomial(int k, double theta) {
  if (k < 1) throw DomainError("error_polynomial: k must be positive");
  double s = 0;
  for (int l = -k; l <= k; ++l)
    s += (k - std::abs(l) + 1.0) * std::cos(2.0 * l * theta);
  return s / ((k + 1.0) * (k + 1.0));
}

/// [sin((k+1) theta) / ((k+1) sin theta)]^2 with its limits at 0 and pi.
inline double fejer_kernel(int k, double theta) {
  if (k < 1) throw DomainError("fejer_kernel: k must be positive");
  double t = std::remainder(theta, std::numbers::pi);
  if (std::abs(t) < 1e-6) {
    double r = 1 - ((k + 1.0) * (k + 1.0) - 1) * t * t / 6;
    return r * r;
  }
  double r = std::sin((k + 1) * t) / ((k + 1) * std::sin(t));
  return r * r;
}

enum class ProtocolKind { Binary, Ternary };

inline ProtocolKind protocol_kind_from_string(const std::string &s) {
  if (s == "binary") return ProtocolKind::Binary;
  if (s == "ternary") return ProtocolKind::Ternary;
  throw DomainError("unknown protocol '" + s + "'");
}

/// Closed-form success for hypothesis `label` of the built protocols.
inline double closed_form_success(ProtocolKind kind, int k,
                                  const std::string &label, double theta) {
  const double f = error_polynomial(k, theta);
  if (kind == ProtocolKind::Ternary) {
    if (k % 2 == 0) throw DomainError("ternary protocol needs odd k");
    if (label == "X" || label == "Y") return 1 - f;
    if (label == "Z") return 1;
  } else {
    if (label == "X") return k % 2 ? 1 - f : 1;
    if (label == "Z") return k % 2 ? 1 : 1 - f;
  }
  throw DomainError("closed_form_success: unknown label '" + label + "'");
}

/// Closed-form theta-averaged success: (2k+1)/(2k+2) or (3k+1)/(3k+3).
inline Rational average_success(ProtocolKind kind, int k) {
  if (k < 1) throw DomainError("average_success: k must be positive");
  if (kind == ProtocolKind::Binary) return Rational(2 * k + 1, 2 * k + 2);
  if (k % 2 == 0) throw DomainError("average_success: ternary needs odd k");
  return Rational(3 * k + 1, 3 * k + 3);
}

/// Closed-form variance of the binary success for odd k.
inline Rational success_variance(int k) {
  if (k < 1 || k % 2 == 0)
    throw DomainError("success_variance: k must be odd");
  return Rational(k * (2 * k + 1), 12 * (k + 1) * (k + 1) * (k + 1));
}

/// Mean of g over [0, pi] by composite Simpson on n (odd) points.
inline double simpson_mean(const std::function<double(double)> &g,
                           int n = 2049) {
  if (n < 3 || n % 2 == 0) throw DomainError("simpson_mean: n must be odd");
  const double h = std::numbers::pi / (n - 1);
  double s = 0;
  for (int i = 0; i < n; ++i) {
    double w = (i == 0 || i == n - 1) ? 1 : (i % 2 ? 4 : 2);
    s += w * g(i * h);
  }
  return s * h / 3 / std::numbers::pi;
}

/// Theta-averaged success per hypothesis from simulation.
inline std::vector<double> mean_success_by_hypothesis(const ProtocolCircuit &c,
                                                      int n = 2049) {
  const double h = std::numbers::pi / (n - 1);
  std::vector<std::vector<double>> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = success_probabilities(c, i * h);
  std::vector<double> out;
  for (size_t j = 0; j < c.hypotheses.size(); ++j)
    out.push_back(simpson_mean([&](double t) {
      return rows[static_cast<size_t>(std::lround(t / h))][j];
    }, n));
  return out;
}

/// Theta-averaged success with uniform priors, from simulation.
inline double average_success_quadrature(const ProtocolCircuit &c,
                                         int n = 2049) {
  double s = 0;
  for (double v : mean_success_by_hypothesis(c, n)) s += v;
  return s / c.hypotheses.size();
}

/// Variance over independent uniform angles of the uniform-prior success,
/// from simulation.
inline double success_variance_quadrature(const ProtocolCircuit &c,
                                          int n = 2049) {
  const double h = std::numbers::pi / (n - 1);
  const size_t m = c.hypotheses.size();
  std::vector<std::vector<double>> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = success_probabilities(c, i * h);
  double var = 0;
  for (size_t j = 0; j < m; ++j) {
    auto at = [&](double t) { return rows[static_cast<size_t>(std::lround(t / h))][j]; };
    double mean = simpson_mean(at, n);
    double sq = simpson_mean([&](double t) { return at(t) * at(t); }, n);
    var += (sq - mean * mean) / double(m * m);
  }
  return var;
}

/// Angles j pi/(k+1), j = 1..k, where f_k vanishes.
inline std::vector<double> perfect_discrimination_angles(int k) {
  if (k < 1) throw DomainError("perfect_discrimination_angles: k < 1");
  std::vector<double> out;
  for (int j = 1; j <= k; ++j) out.push_back(j * std::numbers::pi / (k + 1));
  return out;
}

}  // namespace hamrec::protocols
