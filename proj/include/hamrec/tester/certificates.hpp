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

#include <string>
#include <vector>

#include "hamrec/core/rational.hpp"
#include "hamrec/tester/comb.hpp"

namespace hamrec::tester {

/// |I>><<I|^{(x)k} in the interleaved ordering.
inline ComplexMatrix identity_choi_projector(int k) {
  const Eigen::Index dim = Eigen::Index(1) << (2 * k);
  ComplexVector v = ComplexVector::Zero(dim);
  for (unsigned j = 0; j < (1u << k); ++j) v(detail::doubled_index(j, k)) = 1.0;
  return v * v.adjoint();
}

struct DualCertificate {
  int k = 0;
  std::vector<std::string> labels;
  Rational lambda;
  ComplexMatrix wbar;
  EigenRange wbar_eigs;
  /// m lambda Wbar - Omega_j for each hypothesis
  std::vector<EigenRange> slack_eigs;
  ConstraintReport dual_seq, dual_gen;
  bool pass = false;
};

namespace detail {

inline void evaluate_certificate(DualCertificate &c,
                                 const std::vector<ComplexMatrix> &omegas) {
  const double m = static_cast<double>(omegas.size());
  c.wbar_eigs = hermitian_eig_range(c.wbar);
  c.slack_eigs.clear();
  for (const auto &om : omegas)
    c.slack_eigs.push_back(hermitian_eig_range(m * c.lambda.value() * c.wbar - om));
  c.dual_seq = check_constraints(c.wbar, comb_constraints(c.k, Strategy::DualSequential));
  c.dual_gen = check_constraints(c.wbar, comb_constraints(c.k, Strategy::DualGeneral));
  c.pass = is_psd(c.wbar_eigs) && c.dual_seq.pass && c.dual_gen.pass;
  for (const auto &e : c.slack_eigs) c.pass = c.pass && is_psd(e);
}

inline const DualCertificate &require(const DualCertificate &c) {
  if (c.pass) return c;
  std::string what;
  if (!is_psd(c.wbar_eigs)) what = "Wbar not PSD";
  for (size_t j = 0; j < c.slack_eigs.size() && what.empty(); ++j)
    if (!is_psd(c.slack_eigs[j])) what = "slack for " + c.labels[j] + " not PSD";
  for (const auto *rep : {&c.dual_seq, &c.dual_gen})
    for (const auto &r : rep->results)
      if (!r.pass && what.empty()) what = to_string(rep->strategy) + ": " + r.name;
  throw CertificateError("certificate check failed for k = " +
                         std::to_string(c.k) + " (" + what + ")");
}

}  // namespace detail

/// Dual point for the {X, Z} protocol with all checks evaluated.
inline DualCertificate binary_certificate_report(int k) {
  if (k < 1 || k > MAX_OPERATOR_SLOTS)
    throw DomainError("binary_certificate: k must lie in [1, 6]");
  DualCertificate c;
  c.k = k;
  c.labels = {"X", "Z"};
  c.lambda = Rational(2 * k + 1, 2 * k + 2);
  std::vector<ComplexMatrix> om{
      performance_operator(BlochHamiltonian::x(), k).matrix,
      performance_operator(BlochHamiltonian::z(), k).matrix};
  c.wbar = (double(k + 1) / (2 * k + 1)) * (om[0] + om[1]) -
           identity_choi_projector(k) / double(2 * k + 1);
  detail::evaluate_certificate(c, om);
  return c;
}

/// Dual point for the {X, Y, Z} protocol with all checks evaluated.
inline DualCertificate ternary_certificate_report(int k) {
  if (k < 1 || k > 5 || k % 2 == 0)
    throw DomainError("ternary_certificate: k must be odd and at most 5");
  DualCertificate c;
  c.k = k;
  c.labels = {"X", "Y", "Z"};
  c.lambda = Rational(3 * k + 1, 3 * k + 3);
  std::vector<ComplexMatrix> om{
      performance_operator(BlochHamiltonian::x(), k).matrix,
      performance_operator(BlochHamiltonian::y(), k).matrix,
      performance_operator(BlochHamiltonian::z(), k).matrix};
  c.wbar = (double(k + 1) / (3 * k + 1)) * (om[0] + om[1] + om[2]) -
           (2.0 / (3 * k + 1)) * identity_choi_projector(k);
  detail::evaluate_certificate(c, om);
  return c;
}

/// Dual feasible point certifying optimality of the {X, Z} protocol.
inline DualCertificate binary_certificate(int k) {
  return detail::require(binary_certificate_report(k));
}

/// Dual feasible point certifying optimality of the {X, Y, Z} protocol.
inline DualCertificate ternary_certificate(int k) {
  return detail::require(ternary_certificate_report(k));
}

}  // namespace hamrec::tester
