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

#include "hamrec/protocols/circuit.hpp"
#include "hamrec/tester/performance_operator.hpp"

namespace hamrec::tester {

/// Tester elements T_j with P(guess j | U) = tr(T_j |U>><<U|^{(x)k}).
struct TesterRealization {
  int k = 0;
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> elements;

  const ComplexMatrix &element(const std::string &label) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return elements[i];
    throw DomainError("tester has no element '" + label + "'");
  }

  ComplexMatrix sum() const {
    ComplexMatrix s = elements.front();
    for (size_t i = 1; i < elements.size(); ++i) s += elements[i];
    return s;
  }
};

inline TesterRealization circuit_to_tester(const protocols::ProtocolCircuit &c) {
  const int k = c.slot_count();
  if (k < 1 || k > 4) throw ResourceError("circuit_to_tester: needs 1 <= k <= 4");
  const Eigen::Index cols = Eigen::Index(1) << (2 * k);
  const Eigen::Index rows = Eigen::Index(1) << c.qubit_count;
  // amplitudes with slot l replaced by |o_l><i_l|
  ComplexMatrix amp(rows, cols);
  for (Eigen::Index idx = 0; idx < cols; ++idx) {
    std::vector<ComplexMatrix> ops;
    for (int l = 1; l <= k; ++l) {
      int i = (idx >> (2 * k - 1 - input_qubit(l))) & 1;
      int o = (idx >> (2 * k - 1 - output_qubit(l))) & 1;
      ComplexMatrix e = ComplexMatrix::Zero(2, 2);
      e(o, i) = 1.0;
      ops.push_back(e);
    }
    amp.col(idx) = protocols::run_with_slots(c, ops).amplitudes;
  }
  TesterRealization t;
  t.k = k;
  for (const auto &h : c.hypotheses) {
    t.labels.push_back(h.label);
    t.elements.push_back(ComplexMatrix::Zero(cols, cols));
  }
  const int n = c.qubit_count;
  for (Eigen::Index b = 0; b < rows; ++b) {
    std::string key;
    for (int q : c.measured) key += ((b >> (n - 1 - q)) & 1) ? '1' : '0';
    const std::string &label = c.decision.at(key);
    size_t j = 0;
    while (t.labels[j] != label) ++j;
    ComplexVector v = amp.row(b).adjoint();
    t.elements[j].noalias() += v * v.adjoint();
  }
  return t;
}

}  // namespace hamrec::tester
