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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "hamrec/protocols/builders.hpp"
#include "hamrec/protocols/statistics.hpp"
#include "hamrec/tester/certificates.hpp"
#include "hamrec/tester/circuit_tester.hpp"
#include "hamrec/tester/comb.hpp"
#include "hamrec/tester/performance_operator.hpp"
#include "test_util.hpp"

using namespace hamrec;
using namespace hamrec::tester;
using hamrec::testing::random_direction;
using hamrec::testing::random_hermitian;
using hamrec::testing::random_unitary;
constexpr double pi = std::numbers::pi;

namespace {

const BlochHamiltonian &axis(int i) {
  static const BlochHamiltonian a[] = {BlochHamiltonian::x(), BlochHamiltonian::y(),
                                       BlochHamiltonian::z()};
  return a[i];
}

ComplexVector choi_power(const ComplexMatrix &u, int k) {
  ComplexVector c = choi_vec(u), v = c;
  for (int l = 1; l < k; ++l) v = kron(v, c);
  return v;
}

}  // namespace

TEST(PerformanceOperator, ZOneSlot) {
  auto op = performance_operator(BlochHamiltonian::z(), 1);
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  want(0, 0) = want(3, 3) = 1;
  EXPECT_EQ(max_abs(op.matrix - want), 0);
}

TEST(PerformanceOperator, ZTwoSlotWeightClasses) {
  auto op = performance_operator(BlochHamiltonian::z(), 2);
  ASSERT_EQ(op.weight_classes.size(), 3u);
  EXPECT_EQ(op.weight_classes[0].size(), 1u);
  EXPECT_EQ(op.weight_classes[1].size(), 2u);
  EXPECT_EQ(op.weight_classes[2].size(), 1u);
  EXPECT_NEAR(op.matrix.trace().real(), 4, 1e-14);
}

TEST(PerformanceOperator, XIsHadamardConjugate) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  ComplexMatrix z = performance_operator(BlochHamiltonian::z(), 1).matrix;
  ComplexMatrix hh = kron(h, h);
  EXPECT_LT(max_abs(performance_operator(BlochHamiltonian::x(), 1).matrix - hh * z * hh), 1e-14);
}

TEST(PerformanceOperator, MatchesQuadrature) {
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a < 3; ++a) {
      ComplexMatrix d = performance_operator(axis(a), k).matrix -
                        performance_operator_quadrature(axis(a), k);
      EXPECT_LE(d.norm(), 1e-8) << "k=" << k << " axis=" << a;
    }
}

TEST(PerformanceOperator, Invariants) {
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a < 3; ++a) {
      ComplexMatrix m = performance_operator(axis(a), k).matrix;
      EXPECT_TRUE(is_hermitian(m, 1e-10));
      EXPECT_NEAR(m.trace().real(), std::ldexp(1.0, k), 1e-8);
      EXPECT_GE(hermitian_min_eig(m), -1e-9);
    }
}

TEST(PerformanceOperator, ConjugationCovariance) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    auto h = BlochHamiltonian::normalized(random_direction(rng));
    ComplexMatrix v = random_unitary(2, rng);
    ComplexMatrix rn = v * h.matrix() * v.adjoint();
    auto hr = BlochHamiltonian::normalized(
        Vec3(rn(1, 0).real(), rn(1, 0).imag(), rn(0, 0).real()));
    for (int k = 1; k <= 3; ++k) {
      ComplexMatrix m = performance_operator(h, k).matrix;
      const ComplexMatrix g = kron(ComplexMatrix(v.conjugate()), v);
      for (int l = 1; l <= k; ++l) conjugate_local(m, g, input_qubit(l), 2 * k);
      EXPECT_LT(max_abs(m - performance_operator(hr, k).matrix), 1e-10);
    }
  }
}

TEST(PerformanceOperator, ChoiAverageIsInvariant) {
  // U(1) invariance: Omega commutes with (Vbar (x) V)^{(x)k} for V = exp(-i t n.sigma)
  for (int a = 0; a < 3; ++a) {
    ComplexMatrix m = performance_operator(axis(a), 2).matrix;
    ComplexMatrix v = rotation_gate(axis(a), 0.37);
    ComplexMatrix g = kron(ComplexMatrix(v.conjugate()), v);
    ComplexMatrix c = m;
    for (int l = 1; l <= 2; ++l) conjugate_local(c, g, input_qubit(l), 4);
    EXPECT_LT(max_abs(c - m), 1e-12);
  }
}

TEST(PerformanceOperator, Budget) {
  EXPECT_THROW(performance_operator(BlochHamiltonian::z(), 7), ResourceError);
  EXPECT_THROW(performance_operator(BlochHamiltonian::z(), 0), DomainError);
}

TEST(OmegaLowerBound, SmallK) {
  for (int k = 1; k <= 4; ++k) {
    ComplexMatrix p = identity_choi_projector(k) / double(k + 1);
    for (int a = 0; a < 3; ++a)
      EXPECT_GE(hermitian_min_eig(performance_operator(axis(a), k).matrix - p), -1e-9);
  }
}

TEST(TraceAndReplace, Examples) {
  ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  EXPECT_LT(max_abs(trace_and_replace(id, {0}) - id), 1e-15);
  EXPECT_LT(max_abs(trace_and_replace(id, {1}) - id), 1e-15);
  ComplexMatrix p00 = ComplexMatrix::Zero(4, 4);
  p00(0, 0) = 1;
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  EXPECT_LT(max_abs(trace_and_replace(p00, {1}) - kron(p0, 0.5 * pauli_i())), 1e-15);
  EXPECT_THROW(trace_and_replace(id, {2}), DomainError);
}

TEST(TraceAndReplace, IdempotentAndTracePreserving) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    ComplexMatrix m = random_hermitian(16, rng);
    for (const std::vector<int> &q : {std::vector<int>{0}, {1, 3}, {0, 1, 2}}) {
      ComplexMatrix once = trace_and_replace(m, q);
      EXPECT_LT(max_abs(trace_and_replace(once, q) - once), 1e-12);
      EXPECT_NEAR(std::abs(once.trace() - m.trace()), 0, 1e-12);
    }
  }
}

TEST(Constraints, IdentityProjectorIsDualComb) {
  for (int k = 1; k <= 4; ++k) {
    ComplexMatrix w = identity_choi_projector(k);
    EXPECT_TRUE(check_constraints(w, comb_constraints(k, Strategy::DualSequential)).pass);
    EXPECT_TRUE(check_constraints(w, comb_constraints(k, Strategy::DualGeneral)).pass);
  }
}

TEST(Constraints, OmegasAreDualCombs) {
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a < 3; ++a)
      EXPECT_TRUE(check_constraints(performance_operator(axis(a), k).matrix,
                                    comb_constraints(k, Strategy::DualSequential))
                      .pass);
}

TEST(Constraints, WrongTraceReported) {
  std::mt19937_64 rng(12);
  ComplexMatrix m = random_hermitian(16, rng);
  auto rep = check_constraints(m, comb_constraints(2, Strategy::DualSequential));
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.results.empty());
  EXPECT_EQ(rep.results.front().name, "tr W = 4");
  EXPECT_FALSE(rep.results.front().pass);
  EXPECT_NEAR(rep.results.front().residual, std::abs(m.trace() - 4.0), 1e-12);
}

TEST(Constraints, Labels) {
  auto c = comb_constraints(2, Strategy::Sequential);
  ASSERT_EQ(c.identities.size(), 2u);
  EXPECT_EQ(c.identities[0].name, "W = _{O2}W");
  EXPECT_EQ(c.identities[1].name, "_{I2O2}W = _{O1I2O2}W");
  EXPECT_EQ(comb_constraints(3, Strategy::Parallel).identities.size(), 1u);
}

TEST(ProjectDual, IdempotentAndFixesMembers) {
  std::mt19937_64 rng(21);
  for (int k = 1; k <= 3; ++k)
    for (Strategy s : {Strategy::DualSequential, Strategy::DualGeneral}) {
      ComplexMatrix m = random_hermitian(1 << (2 * k), rng);
      ComplexMatrix p = project_dual(m, k, s);
      EXPECT_LT(max_abs(project_dual(p, k, s) - p), 1e-12);
      ComplexMatrix w = (std::ldexp(1.0, k) / p.trace().real()) * p;
      auto c = comb_constraints(k, s);
      auto rep = check_constraints(w, c);
      for (size_t i = 1; i < rep.results.size(); ++i) EXPECT_TRUE(rep.results[i].pass);
      ComplexMatrix om = performance_operator(BlochHamiltonian::x(), k).matrix;
      if (s == Strategy::DualSequential) EXPECT_LT(max_abs(project_dual(om, k, s) - om), 1e-12);
      ComplexMatrix id = identity_choi_projector(k);
      EXPECT_LT(max_abs(project_dual(id, k, s) - id), 1e-12);
    }
  EXPECT_THROW(project_dual(ComplexMatrix::Identity(4, 4), 1, Strategy::Sequential), DomainError);
}

TEST(Certificates, BinarySmallK) {
  for (int k = 1; k <= 4; ++k) {
    auto c = binary_certificate(k);
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(c.lambda, protocols::average_success(protocols::ProtocolKind::Binary, k));
    EXPECT_TRUE(c.dual_seq.pass);
    EXPECT_TRUE(c.dual_gen.pass);
  }
  EXPECT_EQ(binary_certificate(1).lambda, Rational(3, 4));
  EXPECT_EQ(binary_certificate(3).lambda, Rational(7, 8));
  ComplexMatrix oz = performance_operator(BlochHamiltonian::z(), 1).matrix;
  EXPECT_NEAR(hermitian_min_eig(oz - 0.5 * identity_choi_projector(1)), 0, 1e-14);
}

TEST(Certificates, Ternary) {
  EXPECT_EQ(ternary_certificate(1).lambda, Rational(2, 3));
  EXPECT_EQ(ternary_certificate(3).lambda, Rational(5, 6));
  EXPECT_THROW(ternary_certificate(2), DomainError);
}

TEST(Certificates, TernarySlackSplits) {
  for (int k : {1, 3}) {
    auto c = ternary_certificate(k);
    std::vector<ComplexMatrix> om;
    for (int a = 0; a < 3; ++a) om.push_back(performance_operator(axis(a), k).matrix);
    ComplexMatrix p = identity_choi_projector(k) / double(k + 1);
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix slack = 3 * c.lambda.value() * c.wbar - om[j];
      ComplexMatrix split = ComplexMatrix::Zero(slack.rows(), slack.cols());
      for (int i = 0; i < 3; ++i)
        if (i != j) split += om[i] - p;
      EXPECT_LT(max_abs(slack - split), 1e-12);
    }
  }
}

TEST(Certificates, FailureNamesTheCheck) {
  auto c = binary_certificate_report(2);
  c.lambda = Rational(3, 4);  // below the achievable 5/6
  std::vector<ComplexMatrix> om{performance_operator(BlochHamiltonian::x(), 2).matrix,
                                performance_operator(BlochHamiltonian::z(), 2).matrix};
  detail::evaluate_certificate(c, om);
  EXPECT_FALSE(c.pass);
  try {
    detail::require(c);
    FAIL() << "expected CertificateError";
  } catch (const CertificateError &e) {
    EXPECT_NE(std::string(e.what()).find("slack"), std::string::npos);
  }
}

TEST(CircuitTester, ReproducesSimulation) {
  std::vector<protocols::ProtocolCircuit> circuits{
      protocols::build_binary_circuit(1), protocols::build_binary_circuit(2),
      protocols::build_binary_circuit(3), protocols::build_ternary_circuit(1)};
  std::mt19937_64 rng(31);
  for (const auto &c : circuits) {
    auto t = circuit_to_tester(c);
    for (int trial = 0; trial < 5; ++trial) {
      ComplexMatrix u = random_unitary(2, rng);
      ComplexVector v = choi_power(u, t.k);
      auto s = protocols::simulate(c, u);
      std::map<std::string, double> want;
      for (Eigen::Index b = 0; b < s.amplitudes.size(); ++b) {
        std::string key;
        for (int q : c.measured) key += ((b >> (c.qubit_count - 1 - q)) & 1) ? '1' : '0';
        want[c.decision.at(key)] += s.probability(b);
      }
      for (size_t j = 0; j < t.labels.size(); ++j)
        EXPECT_NEAR((v.adjoint() * t.elements[j] * v)(0).real(), want[t.labels[j]], 1e-12);
    }
  }
}

TEST(CircuitTester, PhysicalTester) {
  for (const auto &c : {protocols::build_binary_circuit(1), protocols::build_binary_circuit(2),
                        protocols::build_binary_circuit(3), protocols::build_ternary_circuit(1),
                        protocols::build_ternary_circuit(3)}) {
    auto t = circuit_to_tester(c);
    for (const auto &e : t.elements) EXPECT_GE(hermitian_min_eig(e), -1e-9);
    EXPECT_TRUE(check_constraints(t.sum(), comb_constraints(t.k, Strategy::Sequential)).pass);
    EXPECT_TRUE(check_constraints(t.sum(), comb_constraints(t.k, Strategy::General)).pass);
  }
}

TEST(CircuitTester, PairingsGiveAverageSuccess) {
  auto t1 = circuit_to_tester(protocols::build_binary_circuit(1));
  double s = (t1.element("X") * performance_operator(BlochHamiltonian::x(), 1).matrix)
                 .trace()
                 .real() +
             (t1.element("Z") * performance_operator(BlochHamiltonian::z(), 1).matrix)
                 .trace()
                 .real();
  EXPECT_NEAR(s, 2 * 0.75, 1e-12);
  auto t3 = circuit_to_tester(protocols::build_ternary_circuit(1));
  double s3 = 0;
  for (int a = 0; a < 3; ++a)
    s3 += (t3.elements[a] * performance_operator(axis(a), 1).matrix).trace().real();
  EXPECT_NEAR(s3 / 3, 2.0 / 3, 1e-12);
}

TEST(CircuitTester, Budget) {
  EXPECT_THROW(circuit_to_tester(protocols::build_binary_circuit(5)), ResourceError);
}
