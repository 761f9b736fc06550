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

#include "hamrec/core/linalg.hpp"
#include "hamrec/tester/performance_operator.hpp"

namespace hamrec::tester {

/// tr_S(M) (x) I_S / d_S for the qubits S of a 2^n x 2^n operator.
inline ComplexMatrix trace_and_replace(const ComplexMatrix &m,
                                       const std::vector<int> &qubits) {
  const Eigen::Index dim = m.rows();
  if (m.cols() != dim || dim == 0 || (dim & (dim - 1)) != 0)
    throw DomainError("trace_and_replace: operator must be 2^n square");
  const int n = std::countr_zero(static_cast<unsigned long long>(dim));
  Eigen::Index mask = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n) throw DomainError("trace_and_replace: bad qubit label");
    mask |= Eigen::Index(1) << (n - 1 - q);
  }
  if (mask == 0) return m;
  std::vector<Eigen::Index> sub, rest;
  for (Eigen::Index t = mask;; t = (t - 1) & mask) {
    sub.push_back(t);
    if (t == 0) break;
  }
  for (Eigen::Index i = 0; i < dim; ++i)
    if ((i & mask) == 0) rest.push_back(i);
  const double inv = 1.0 / sub.size();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index c : rest)
    for (Eigen::Index r : rest) {
      cplx s = 0;
      for (Eigen::Index t : sub) s += m(r | t, c | t);
      s *= inv;
      for (Eigen::Index t : sub) out(r | t, c | t) = s;
    }
  return out;
}

enum class Strategy { Parallel, Sequential, General, DualSequential, DualGeneral };

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Parallel: return "PAR";
    case Strategy::Sequential: return "SEQ";
    case Strategy::General: return "GEN";
    case Strategy::DualSequential: return "dual-SEQ";
    case Strategy::DualGeneral: return "dual-GEN";
  }
  return "?";
}

/// lhs W = rhs W with both sides trace-and-replace maps.
struct Identity {
  std::string name;
  std::vector<int> lhs, rhs;
};

struct CombConstraints {
  int k = 0;
  Strategy strategy = Strategy::Sequential;
  std::vector<Identity> identities;
  double trace = 0;
  /// GEN testers are characterized through the dual-GEN projector instead
  bool projector_identity = false;
};

namespace detail {

inline std::string label(const std::vector<int> &qs) {
  std::string s;
  for (int q : qs) s += (q % 2 ? "O" : "I") + std::to_string(q / 2 + 1);
  return s.empty() ? "W" : "_{" + s + "}W";
}

// O_j I_{j+1} O_{j+1} ... I_k O_k
inline std::vector<int> tail_from_output(int j, int k) {
  std::vector<int> q{output_qubit(j)};
  for (int l = j + 1; l <= k; ++l) {
    q.push_back(input_qubit(l));
    q.push_back(output_qubit(l));
  }
  return q;
}

inline std::vector<int> tail_from_input(int j, int k) {
  std::vector<int> q{input_qubit(j)};
  auto t = tail_from_output(j, k);
  q.insert(q.end(), t.begin(), t.end());
  return q;
}

}  // namespace detail

inline CombConstraints comb_constraints(int k, Strategy s) {
  if (k < 1) throw DomainError("comb_constraints: k must be positive");
  CombConstraints c;
  c.k = k;
  c.strategy = s;
  c.trace = std::ldexp(1.0, k);
  auto add = [&](std::vector<int> lhs, std::vector<int> rhs) {
    c.identities.push_back(
        {detail::label(lhs) + " = " + detail::label(rhs), lhs, rhs});
  };
  switch (s) {
    case Strategy::Parallel: {
      std::vector<int> outs;
      for (int l = 1; l <= k; ++l) outs.push_back(output_qubit(l));
      add({}, outs);
      break;
    }
    case Strategy::Sequential:
      add({}, {output_qubit(k)});
      for (int j = k; j >= 2; --j)
        add(detail::tail_from_input(j, k), detail::tail_from_output(j - 1, k));
      break;
    case Strategy::General:
      c.projector_identity = true;
      break;
    case Strategy::DualSequential:
      for (int j = k; j >= 1; --j)
        add(detail::tail_from_output(j, k), detail::tail_from_input(j, k));
      break;
    case Strategy::DualGeneral:
      for (int j = 1; j <= k; ++j)
        add({output_qubit(j)}, {input_qubit(j), output_qubit(j)});
      break;
  }
  return c;
}

/// Orthogonal projection onto the homogeneous dual-SEQ or dual-GEN space.
inline ComplexMatrix project_dual(const ComplexMatrix &m, int k, Strategy s) {
  auto tr = [](const ComplexMatrix &x, const std::vector<int> &q) {
    return trace_and_replace(x, q);
  };
  if (s == Strategy::DualGeneral) {
    ComplexMatrix out = m;
    for (int j = 1; j <= k; ++j)
      out = out - tr(out, {output_qubit(j)}) +
            tr(out, {input_qubit(j), output_qubit(j)});
    return out;
  }
  if (s != Strategy::DualSequential)
    throw DomainError("project_dual: expected a dual strategy");
  ComplexMatrix out = m;
  for (int j = k; j >= 1; --j)
    out = out - tr(m, detail::tail_from_output(j, k)) +
          tr(m, detail::tail_from_input(j, k));
  return out;
}

struct ConstraintResult {
  std::string name;
  double residual = 0;
  bool pass = false;
};

struct ConstraintReport {
  Strategy strategy = Strategy::Sequential;
  std::vector<ConstraintResult> results;
  bool pass = true;
};

inline ConstraintReport check_constraints(const ComplexMatrix &w,
                                          const CombConstraints &c,
                                          double tol = 1e-9) {
  const Eigen::Index dim = Eigen::Index(1) << (2 * c.k);
  if (w.rows() != dim || w.cols() != dim)
    throw DomainError("check_constraints: dimension does not match k");
  const double scale = std::max(1.0, max_abs(w));
  ConstraintReport rep;
  rep.strategy = c.strategy;
  auto push = [&](const std::string &name, double res) {
    bool ok = res <= tol * scale;
    rep.results.push_back({name, res, ok});
    rep.pass = rep.pass && ok;
  };
  push("tr W = " + std::to_string(static_cast<long long>(c.trace)),
       std::abs(w.trace() - c.trace));
  push("hermitian", max_abs(w - w.adjoint()));
  for (const auto &id : c.identities)
    push(id.name, max_abs(trace_and_replace(w, id.lhs) -
                          trace_and_replace(w, id.rhs)));
  if (c.projector_identity) {
    ComplexMatrix p = project_dual(w, c.k, Strategy::DualGeneral);
    push("P_dualGEN(W) = (tr W / d) I",
         max_abs(p - (w.trace() / double(dim)) * ComplexMatrix::Identity(dim, dim)));
  }
  return rep;
}

}  // namespace hamrec::tester
