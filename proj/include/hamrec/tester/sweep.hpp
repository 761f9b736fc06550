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
#include <string>
#include <vector>

#include "hamrec/protocols/builders.hpp"
#include "hamrec/tester/circuit_tester.hpp"
#include "hamrec/tester/sdp.hpp"

namespace hamrec::tester {

struct SweepRow {
  double alpha = 0;
  Vec3 n0;
  double optimal = 0;
  double fixed = 0;
  bool ok = false;
  std::string error;
};

/// Axis n0 = (sin alpha, 0, cos alpha) against n1 = z.
inline Vec3 sweep_axis(double alpha) {
  return Vec3(std::sin(alpha), 0, std::cos(alpha));
}

/// Optimal SEQ success for {n0, z} next to the {X, Z} protocol applied as is.
inline std::vector<SweepRow> general_axis_sweep(int k,
                                                const std::vector<double> &alphas) {
  if (k != 1 && k != 3) throw DomainError("general_axis_sweep: k must be 1 or 3");
  const TesterRealization t = circuit_to_tester(protocols::build_binary_circuit(k));
  const ComplexMatrix oz = performance_operator(BlochHamiltonian::z(), k).matrix;
  std::vector<SweepRow> rows;
  for (double alpha : alphas) {
    SweepRow row;
    row.alpha = alpha;
    row.n0 = sweep_axis(alpha);
    try {
      const ComplexMatrix o0 =
          performance_operator(BlochHamiltonian::normalized(row.n0), k).matrix;
      row.fixed = 0.5 * ((t.element("X") * o0).trace().real() +
                         (t.element("Z") * oz).trace().real());
      row.optimal =
          solve_recognition_sdp({o0, oz}, {0.5, 0.5}, k, Strategy::Sequential).value;
      row.ok = true;
    } catch (const std::exception &e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hamrec::tester
