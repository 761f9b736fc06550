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

#include "hamrec/tester/sdp.hpp"
#include "hamrec/tester/sweep.hpp"
#include "helstrom_oracle.hpp"

using namespace hamrec;
using namespace hamrec::tester;
constexpr double pi = std::numbers::pi;

namespace {

ComplexMatrix omega(const BlochHamiltonian &h, int k) { return performance_operator(h, k).matrix; }

void expect_sound(const SdpResult &r, const std::vector<ComplexMatrix> &om,
                  const std::vector<double> &priors, int k, Strategy dual) {
  auto rep = check_constraints(r.wbar, comb_constraints(k, dual), 1e-6);
  EXPECT_TRUE(rep.pass);
  for (size_t j = 0; j < om.size(); ++j)
    EXPECT_GE(hermitian_min_eig(r.v - priors[j] * om[j]), -1e-6);
  EXPECT_LE(r.gap, 1e-7);
}

}  // namespace

TEST(Sdp, BinaryOneSlot) {
  std::vector<ComplexMatrix> om{omega(BlochHamiltonian::x(), 1), omega(BlochHamiltonian::z(), 1)};
  auto r = solve_recognition_sdp(om, {0.5, 0.5}, 1, Strategy::Sequential);
  EXPECT_NEAR(r.value, 0.75, 1e-4);
  expect_sound(r, om, {0.5, 0.5}, 1, Strategy::DualSequential);
  auto g = solve_recognition_sdp(om, {0.5, 0.5}, 1, Strategy::General);
  EXPECT_NEAR(g.value, r.value, 1e-4);
  expect_sound(g, om, {0.5, 0.5}, 1, Strategy::DualGeneral);
}

TEST(Sdp, IdenticalHypotheses) {
  for (int k = 1; k <= 2; ++k) {
    std::vector<ComplexMatrix> om{omega(BlochHamiltonian::z(), k), omega(BlochHamiltonian::z(), k)};
    EXPECT_NEAR(solve_recognition_sdp(om, {0.5, 0.5}, k, Strategy::Sequential).value, 0.5, 1e-6);
  }
}

TEST(Sdp, TernaryOneSlot) {
  std::vector<ComplexMatrix> om{omega(BlochHamiltonian::x(), 1), omega(BlochHamiltonian::y(), 1),
                                omega(BlochHamiltonian::z(), 1)};
  std::vector<double> pr(3, 1.0 / 3);
  auto r = solve_recognition_sdp(om, pr, 1, Strategy::Sequential);
  EXPECT_NEAR(r.value, 2.0 / 3, 1e-4);
  expect_sound(r, om, pr, 1, Strategy::DualSequential);
}

TEST(Sdp, BinaryTwoSlots) {
  std::vector<ComplexMatrix> om{omega(BlochHamiltonian::x(), 2), omega(BlochHamiltonian::z(), 2)};
  auto r = solve_recognition_sdp(om, {0.5, 0.5}, 2, Strategy::Sequential);
  EXPECT_NEAR(r.value, 5.0 / 6, 1e-4);
  expect_sound(r, om, {0.5, 0.5}, 2, Strategy::DualSequential);
  EXPECT_NEAR(solve_recognition_sdp(om, {0.5, 0.5}, 2, Strategy::General).value, r.value, 1e-4);
}

TEST(Sdp, UnequalPriorsAreMonotone) {
  std::vector<ComplexMatrix> om{omega(BlochHamiltonian::x(), 1), omega(BlochHamiltonian::z(), 1)};
  double v = solve_recognition_sdp(om, {0.9, 0.1}, 1, Strategy::Sequential).value;
  EXPECT_GE(v, 0.9 - 1e-6);
  EXPECT_LE(v, 1 + 1e-6);
}

TEST(Sdp, Errors) {
  std::vector<ComplexMatrix> om{omega(BlochHamiltonian::x(), 1), omega(BlochHamiltonian::z(), 1)};
  EXPECT_THROW(solve_recognition_sdp(om, {0.5}, 1, Strategy::Sequential), DomainError);
  EXPECT_THROW(solve_recognition_sdp(om, {0.7, 0.7}, 1, Strategy::Sequential), DomainError);
  EXPECT_THROW(solve_recognition_sdp(om, {0.5, 0.5}, 1, Strategy::Parallel), DomainError);
  EXPECT_THROW(solve_recognition_sdp(om, {0.5, 0.5}, 4, Strategy::Sequential), ResourceError);
}

TEST(Sdp, MagicBasisRoundtrip) {
  ComplexMatrix m = omega(BlochHamiltonian::y(), 2);
  ComplexMatrix r = to_magic(m, 2);
  EXPECT_LT(r.imag().cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(max_abs(from_magic(r, 2) - m), 1e-12);
  RealMatrix s = r.real();
  EXPECT_LT((smat(svec(s), s.rows()) - s).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Sweep, AnchorsAndOrdering) {
  auto rows = general_axis_sweep(1, {0, pi / 4, pi / 2});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto &r : rows) {
    ASSERT_TRUE(r.ok) << r.error;
    EXPECT_GE(r.optimal, r.fixed - 1e-6);
    EXPECT_GE(r.fixed, 0.5 - 1e-6);
  }
  EXPECT_NEAR(rows[0].optimal, 0.5, 1e-6);
  EXPECT_NEAR(rows[0].fixed, 0.5, 1e-12);
  EXPECT_NEAR(rows[2].optimal, 0.75, 1e-6);
  EXPECT_NEAR(rows[2].fixed, 0.75, 1e-12);
  EXPECT_THROW(general_axis_sweep(2, {0}), DomainError);
}

TEST(Sweep, InteriorPointMatchesHelstromOracle) {
  const double alpha = pi / 3;
  auto rows = general_axis_sweep(1, {alpha});
  ASSERT_TRUE(rows[0].ok);
  double oracle = hamrec::testing::helstrom_brute_force(
      BlochHamiltonian::normalized(sweep_axis(alpha)), BlochHamiltonian::z(), 100000, 2718);
  EXPECT_NEAR(rows[0].optimal, oracle, 1e-3);
  EXPECT_LE(oracle, rows[0].optimal + 1e-6);
}
