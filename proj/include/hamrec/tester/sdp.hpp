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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hamrec/tester/comb.hpp"

namespace hamrec::tester {

/// Per-slot change of basis after which Choi vectors of SU(2) elements are
/// real: columns |I>>, -i|X>>, -i|Y>>, -i|Z>> over sqrt 2.
inline ComplexMatrix magic_basis() {
  const double r = 1 / std::sqrt(2.0);
  ComplexMatrix m(4, 4);
  m << r, 0, 0, -I_UNIT * r,
       0, -I_UNIT * r, r, 0,
       0, -I_UNIT * r, -r, 0,
       r, 0, 0, I_UNIT * r;
  return m;
}

inline ComplexMatrix to_magic(ComplexMatrix a, int k) {
  const ComplexMatrix g = magic_basis().adjoint();
  for (int l = 1; l <= k; ++l) conjugate_local(a, g, input_qubit(l), 2 * k);
  return a;
}

inline ComplexMatrix from_magic(ComplexMatrix a, int k) {
  const ComplexMatrix g = magic_basis();
  for (int l = 1; l <= k; ++l) conjugate_local(a, g, input_qubit(l), 2 * k);
  return a;
}

/// Orthonormal vectorization of real symmetric matrices.
inline RealVector svec(const RealMatrix &a) {
  const Eigen::Index n = a.rows();
  RealVector v(n * (n + 1) / 2);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    v(p++) = a(j, j);
    for (Eigen::Index i = j + 1; i < n; ++i)
      v(p++) = std::sqrt(2.0) * 0.5 * (a(i, j) + a(j, i));
  }
  return v;
}

inline RealMatrix smat(const RealVector &v, Eigen::Index n) {
  RealMatrix a(n, n);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    a(j, j) = v(p++);
    for (Eigen::Index i = j + 1; i < n; ++i) a(i, j) = a(j, i) = v(p++) / std::sqrt(2.0);
  }
  return a;
}

/// Orthonormal basis (columns, svec form, magic frame) of the homogeneous
/// dual comb space restricted to real symmetric operators.
inline const RealMatrix &dual_space_basis(int k, Strategy s) {
  static std::map<std::pair<int, int>, std::unique_ptr<RealMatrix>> cache;
  auto key = std::make_pair(k, static_cast<int>(s));
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  const Eigen::Index n = Eigen::Index(1) << (2 * k);
  const Eigen::Index np = n * (n + 1) / 2;
  RealMatrix proj(np, np);
  for (Eigen::Index p = 0; p < np; ++p) {
    RealVector e = RealVector::Zero(np);
    e(p) = 1;
    ComplexMatrix m = from_magic(smat(e, n).cast<cplx>(), k);
    ComplexMatrix pm = to_magic(project_dual(m, k, s), k);
    if (pm.imag().cwiseAbs().maxCoeff() > 1e-10)
      throw NumericError("dual_space_basis: projector leaves the real subspace");
    proj.col(p) = svec(pm.real());
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (proj + proj.transpose()));
  const RealVector &ev = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < np; ++i) {
    if (std::abs(ev(i)) > 1e-8 && std::abs(ev(i) - 1) > 1e-8)
      throw NumericError("dual_space_basis: operator is not a projector");
    if (ev(i) > 0.5) keep.push_back(i);
  }
  auto basis = std::make_unique<RealMatrix>(np, keep.size());
  for (size_t i = 0; i < keep.size(); ++i) basis->col(i) = es.eigenvectors().col(keep[i]);
  return *(cache[key] = std::move(basis));
}

struct SdpResult {
  /// optimal average success probability (dual objective)
  double value = 0;
  double gap = 0;
  int iterations = 0;
  /// V = value * Wbar, with V >= p_j Omega_j
  ComplexMatrix v;
  ComplexMatrix wbar;
  std::vector<double> gap_trace;
};

namespace detail {

inline double max_step(const RealMatrix &x, const RealMatrix &dx) {
  Eigen::LLT<RealMatrix> llt(x);
  if (llt.info() != Eigen::Success) return 0;
  RealMatrix l = llt.matrixL();
  RealMatrix t = l.triangularView<Eigen::Lower>().solve(dx);
  t = l.triangularView<Eigen::Lower>().solve(RealMatrix(t.transpose()));
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (t + t.transpose()),
                                              Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff();
  return lo < 0 ? -1 / lo : 1e300;
}

inline RealMatrix sym(const RealMatrix &a) { return 0.5 * (a + a.transpose()); }

}  // namespace detail

/// Optimal success of recognizing Omega_j with priors p_j over k-slot testers
/// of the given strategy (Sequential or General), by a primal-dual interior
/// point method on  min tr(V)/2^k  s.t.  V - p_j Omega_j >= 0, V in the
/// homogeneous dual comb space.
inline SdpResult solve_recognition_sdp(const std::vector<ComplexMatrix> &omegas,
                                       const std::vector<double> &priors,
                                       int k, Strategy strategy,
                                       double gap_tol = 1e-7,
                                       int max_iterations = 200) {
  if (omegas.empty() || omegas.size() != priors.size())
    throw DomainError("solve_recognition_sdp: need one prior per operator");
  if (k < 1 || k > 3) throw ResourceError("solve_recognition_sdp: k must be <= 3");
  double psum = 0;
  for (double p : priors) {
    if (!(p >= 0)) throw DomainError("solve_recognition_sdp: negative prior");
    psum += p;
  }
  if (std::abs(psum - 1) > 1e-12)
    throw DomainError("solve_recognition_sdp: priors must sum to 1");
  Strategy dual;
  if (strategy == Strategy::Sequential) dual = Strategy::DualSequential;
  else if (strategy == Strategy::General) dual = Strategy::DualGeneral;
  else throw DomainError("solve_recognition_sdp: strategy must be SEQ or GEN");
  const Eigen::Index n = Eigen::Index(1) << (2 * k);
  const size_t m = omegas.size();

  std::vector<RealMatrix> cmat(m);
  for (size_t j = 0; j < m; ++j) {
    if (omegas[j].rows() != n || omegas[j].cols() != n)
      throw DomainError("solve_recognition_sdp: operator dimension mismatch");
    ComplexMatrix mg = to_magic(omegas[j], k);
    if (mg.imag().cwiseAbs().maxCoeff() > 1e-10)
      throw DomainError("solve_recognition_sdp: operator is not real in the "
                        "magic basis");
    cmat[j] = priors[j] * detail::sym(mg.real());
  }
  const RealMatrix &basis = dual_space_basis(k, dual);
  const Eigen::Index d = basis.cols();
  const double norm_k = std::ldexp(1.0, k);
  const RealVector cvec = basis.transpose() * svec(RealMatrix::Identity(n, n)) / norm_k;

  auto a_of = [&](const RealVector &y) { return smat(basis * y, n); };
  auto a_adj = [&](const RealMatrix &x) -> RealVector {
    return basis.transpose() * svec(x);
  };

  double t0 = 1;
  for (const auto &c : cmat) t0 = std::max(t0, 1 + c.norm());
  RealVector y = t0 * basis.transpose() * svec(RealMatrix::Identity(n, n));
  std::vector<RealMatrix> x(m, RealMatrix::Identity(n, n) / (double(m) * norm_k));

  SdpResult res;
  const double tau = 0.95;
  for (int it = 0; it <= max_iterations; ++it) {
    const RealMatrix av = a_of(y);
    std::vector<RealMatrix> s(m), sinv(m);
    double dual_obj = cvec.dot(y), primal_obj = 0, xs = 0;
    RealVector rp = cvec;
    for (size_t j = 0; j < m; ++j) {
      s[j] = av - cmat[j];
      Eigen::LLT<RealMatrix> llt(s[j]);
      if (llt.info() != Eigen::Success)
        throw NumericError("solve_recognition_sdp: lost dual feasibility at "
                           "iteration " + std::to_string(it));
      sinv[j] = llt.solve(RealMatrix::Identity(n, n));
      primal_obj += (cmat[j].cwiseProduct(x[j])).sum();
      xs += (x[j].cwiseProduct(s[j])).sum();
      rp -= a_adj(x[j]);
    }
    const double gap = dual_obj - primal_obj;
    res.gap_trace.push_back(gap);
    res.iterations = it;
    res.gap = gap;
    if (std::abs(gap) <= gap_tol && rp.norm() <= 1e-9) {
      res.value = dual_obj;
      res.v = from_magic(av.cast<cplx>(), k);
      res.wbar = res.v / res.value;
      return res;
    }
    if (it == max_iterations) break;
    const double mu = xs / double(m * n);

    // Schur complement of the HKM direction
    RealMatrix ycols(basis.rows(), d);
    for (Eigen::Index b = 0; b < d; ++b) {
      RealMatrix bm = smat(basis.col(b), n);
      RealMatrix acc = RealMatrix::Zero(n, n);
      for (size_t j = 0; j < m; ++j) acc.noalias() += x[j] * bm * sinv[j];
      ycols.col(b) = svec(detail::sym(acc));
    }
    RealMatrix schur = basis.transpose() * ycols;
    schur = detail::sym(schur);
    Eigen::LLT<RealMatrix> chol(schur);
    if (chol.info() != Eigen::Success)
      throw NumericError("solve_recognition_sdp: Schur complement not positive "
                         "definite at iteration " + std::to_string(it));

    auto direction = [&](double sigma_mu, const std::vector<RealMatrix> *corr,
                         RealVector &dy, std::vector<RealMatrix> &ds,
                         std::vector<RealMatrix> &dx) {
      RealVector rhs = -rp;
      for (size_t j = 0; j < m; ++j) {
        RealMatrix t = sigma_mu * sinv[j] - x[j];
        if (corr) t += (*corr)[j];
        rhs += a_adj(t);
      }
      dy = chol.solve(rhs);
      RealMatrix ady = a_of(dy);
      ds.assign(m, ady);
      dx.resize(m);
      for (size_t j = 0; j < m; ++j) {
        dx[j] = sigma_mu * sinv[j] - x[j] - detail::sym(x[j] * ady * sinv[j]);
        if (corr) dx[j] += (*corr)[j];
      }
    };
    auto steps = [&](const std::vector<RealMatrix> &dx,
                     const std::vector<RealMatrix> &ds) {
      double ap = 1, ad = 1;
      for (size_t j = 0; j < m; ++j) {
        ap = std::min(ap, tau * detail::max_step(x[j], dx[j]));
        ad = std::min(ad, tau * detail::max_step(s[j], ds[j]));
      }
      return std::make_pair(ap, ad);
    };

    RealVector dy;
    std::vector<RealMatrix> ds, dx;
    direction(0.0, nullptr, dy, ds, dx);
    auto [ap, ad] = steps(dx, ds);
    double mu_aff = 0;
    for (size_t j = 0; j < m; ++j)
      mu_aff += ((x[j] + ap * dx[j]).cwiseProduct(s[j] + ad * ds[j])).sum();
    mu_aff /= double(m * n);
    const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);
    std::vector<RealMatrix> corr(m);
    for (size_t j = 0; j < m; ++j) corr[j] = -detail::sym(dx[j] * ds[j] * sinv[j]);
    direction(sigma * mu, &corr, dy, ds, dx);
    std::tie(ap, ad) = steps(dx, ds);
    for (size_t j = 0; j < m; ++j) x[j] = detail::sym(x[j] + ap * dx[j]);
    y += ad * dy;
  }
  std::string trace;
  for (size_t i = res.gap_trace.size() > 5 ? res.gap_trace.size() - 5 : 0;
       i < res.gap_trace.size(); ++i)
    trace += " " + std::to_string(res.gap_trace[i]);
  throw NumericError("solve_recognition_sdp: no convergence after " +
                     std::to_string(max_iterations) + " iterations; gaps:" + trace);
}

}  // namespace hamrec::tester
