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

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "hamrec/protocols/builders.hpp"
#include "hamrec/protocols/statistics.hpp"
#include "hamrec/qsp/synthesis.hpp"
#include "hamrec/tester/certificates.hpp"
#include "hamrec/tester/sdp.hpp"
#include "hamrec/tester/sweep.hpp"
#include "helstrom_oracle.hpp"

using namespace hamrec;
using namespace hamrec::protocols;
using namespace hamrec::tester;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string fix6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string &name, const std::function<Outcome()> &f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), s);
  std::fflush(stdout);
  failures += !o.pass;
}

BlochHamiltonian axis(int i) {
  return i == 0 ? BlochHamiltonian::x() : i == 1 ? BlochHamiltonian::y() : BlochHamiltonian::z();
}

}  // namespace

int main() {
  criterion(1, "binary average success", [] {
    const double tol = 1e-6;
    double worst = 0;
    for (int k = 1; k <= 8; ++k)
      worst = std::max(worst, std::abs(average_success_quadrature(build_binary_circuit(k)) -
                                        average_success(ProtocolKind::Binary, k).value()));
    return Outcome{worst <= tol, "k=1..8 max dev " + sci(worst) + " (tol " + sci(tol) + ")"};
  });

  criterion(2, "ternary average success", [] {
    const double tol = 1e-6;
    double worst = 0;
    for (int k : {1, 3, 5})
      worst = std::max(worst, std::abs(average_success_quadrature(build_ternary_circuit(k)) -
                                        average_success(ProtocolKind::Ternary, k).value()));
    return Outcome{worst <= tol, "k=1,3,5 max dev " + sci(worst) + " (tol " + sci(tol) + ")"};
  });

  criterion(3, "perfect discrimination", [] {
    const double tol = 1e-10;
    double worst = 0;
    for (int k = 1; k <= 8; ++k) {
      std::vector<ProtocolCircuit> sets{build_binary_circuit(k)};
      if (k % 2) sets.push_back(build_ternary_circuit(k));
      for (const auto &c : sets)
        for (double t : perfect_discrimination_angles(k))
          for (double s : success_probabilities(c, t)) worst = std::max(worst, 1 - s);
    }
    return Outcome{worst <= tol, "binary k=1..8, ternary odd k<=7, max misid " + sci(worst) +
                                     " (tol " + sci(tol) + ")"};
  });

  criterion(4, "error polynomial triple agreement", [] {
    const double tol = 1e-9;
    double worst = 0;
    for (int k = 1; k <= 8; ++k) {
      auto c = build_binary_circuit(k);
      for (int i = 0; i <= 1000; ++i) {
        double t = pi * i / 1000;
        // odd k errs on X, even k errs on Z
        auto g = k % 2 ? guess_distribution(c, BlochHamiltonian::x(), t)["Z"]
                       : guess_distribution(c, BlochHamiltonian::z(), t)["X"];
        double e = error_polynomial(k, t), f = fejer_kernel(k, t);
        worst = std::max({worst, std::abs(g - e), std::abs(g - f), std::abs(e - f)});
      }
    }
    return Outcome{worst <= tol, "k=1..8 on 1001 points, max dev " + sci(worst) + " (tol " +
                                     sci(tol) + ")"};
  });

  criterion(5, "success variance", [] {
    const double tol = 1e-6;
    double worst = 0, v1 = 0;
    for (int k = 1; k <= 7; k += 2) {
      double v = success_variance_quadrature(build_binary_circuit(k));
      if (k == 1) v1 = v;
      worst = std::max(worst, std::abs(v - success_variance(k).value()));
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v1);
    bool ok = worst <= tol && std::string(buf) == "0.031250";
    return Outcome{ok, "odd k<=7 max dev " + sci(worst) + " (tol " + sci(tol) + "), k=1 " + buf};
  });

  criterion(6, "Omega lower bound PSD suite", [] {
    const double tol = -1e-9;
    double worst = 1;
    for (int k = 1; k <= 5; ++k) {
      ComplexMatrix p = identity_choi_projector(k) / double(k + 1);
      for (int a = 0; a < 3; ++a)
        worst = std::min(worst, hermitian_min_eig(performance_operator(axis(a), k).matrix - p));
    }
    return Outcome{worst >= tol, "X,Y,Z k<=5 min eig " + sci(worst) + " (tol " + sci(tol) + ")"};
  });

  criterion(7, "dual certificates", [] {
    bool ok = true;
    double worst = 1;
    auto take = [&](const DualCertificate &c, ProtocolKind kind) {
      ok = ok && c.pass && c.lambda == average_success(kind, c.k);
      worst = std::min(worst, c.wbar_eigs.min);
      for (const auto &e : c.slack_eigs) worst = std::min(worst, e.min);
    };
    for (int k = 1; k <= 6; ++k) take(binary_certificate_report(k), ProtocolKind::Binary);
    for (int k : {1, 3, 5}) take(ternary_certificate_report(k), ProtocolKind::Ternary);
    return Outcome{ok, "binary k<=6, ternary k=1,3,5, lambda exact, min eig " + sci(worst)};
  });

  criterion(8, "SDP anchors", [] {
    auto om = [](int a) { return performance_operator(axis(a), 1).matrix; };
    double bin = solve_recognition_sdp({om(0), om(2)}, {0.5, 0.5}, 1, Strategy::Sequential).value;
    double same = solve_recognition_sdp({om(2), om(2)}, {0.5, 0.5}, 1, Strategy::Sequential).value;
    double ter = solve_recognition_sdp({om(0), om(1), om(2)}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1,
                                       Strategy::Sequential)
                     .value;
    double gen = solve_recognition_sdp({om(0), om(2)}, {0.5, 0.5}, 1, Strategy::General).value;
    bool ok = std::abs(bin - 0.75) <= 1e-4 && std::abs(same - 0.5) <= 1e-6 &&
              std::abs(ter - 2.0 / 3) <= 1e-4 && std::abs(gen - bin) <= 1e-4;
    return Outcome{ok, "binary " + fix6(bin) + ", identical " + fix6(same) + ", ternary " +
                           fix6(ter) + ", GEN-SEQ " + sci(gen - bin)};
  });

  criterion(9, "general-axis sweep", [] {
    std::vector<double> alphas;
    for (int i = 0; i <= 20; ++i) alphas.push_back(pi / 2 * i / 20);
    auto rows = general_axis_sweep(1, alphas);
    bool ok = true;
    for (const auto &r : rows)
      ok = ok && r.ok && r.optimal >= r.fixed - 1e-6 && r.fixed >= 0.5 - 1e-6;
    const auto &z = rows.front(), &x = rows.back();
    ok = ok && std::abs(z.optimal - 0.5) <= 1e-6 && std::abs(z.fixed - 0.5) <= 1e-6 &&
         std::abs(x.optimal - 0.75) <= 1e-6 && std::abs(x.fixed - 0.75) <= 1e-6;
    const double alpha = pi / 3;
    double sdp = general_axis_sweep(1, {alpha})[0].optimal;
    double oracle = hamrec::testing::helstrom_brute_force(
        BlochHamiltonian::normalized(sweep_axis(alpha)), BlochHamiltonian::z(), 100000, 2718);
    ok = ok && std::abs(sdp - oracle) <= 1e-3;
    return Outcome{ok, "21 rows ordered, anchors ok, alpha=pi/3 SDP " + fix6(sdp) + " vs oracle " +
                           fix6(oracle) + " (tol 1e-3)"};
  });

  criterion(10, "Monte Carlo sanity", [] {
    struct Point {
      ProtocolCircuit c;
      BlochHamiltonian h;
      double theta;
    };
    std::vector<Point> pts;
    for (int k = 1; k <= 4; ++k) {
      auto c = build_binary_circuit(k);
      for (double t : {0.4, 1.3})
        for (int a : {0, 2}) pts.push_back({c, axis(a), t});
    }
    for (int k : {1, 3}) {
      auto c = build_ternary_circuit(k);
      for (int a : {0, 1}) pts.push_back({c, axis(a), 0.9});
    }
    const std::uint64_t shots = 100000;
    double worst = 0;
    bool ok = pts.size() == 20, same = true;
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto &p = pts[i];
      auto exact = guess_distribution(p.c, p.h, p.theta);
      auto rec = sample_shots(p.c, p.h, p.theta, shots, 1000 + i);
      auto again = sample_shots(p.c, p.h, p.theta, shots, 1000 + i);
      same = same && rec.outcomes == again.outcomes && rec.guesses == again.guesses;
      for (const auto &[label, q] : exact) {
        double sigma = std::sqrt(shots * q * (1 - q));
        double dev = std::abs(double(rec.guesses[label]) - shots * q);
        if (sigma > 0) worst = std::max(worst, dev / sigma);
        // degenerate p allows no miss: counts are integers
        ok = ok && dev <= (sigma > 0 ? 4 * sigma : 0.5);
      }
    }
    ok = ok && same;
    return Outcome{ok, "20 points x 1e5 shots, max |dev|/sigma " + sci(worst) +
                           (same ? ", reruns identical" : ", reruns differ")};
  });

  criterion(11, "QSP synthesis roundtrip", [] {
    const double tol = 1e-8, btol = 1e-9;
    double worst = 0, bworst = 0;
    for (int k = 1; k <= 31; k += 2) {
      auto seq = qsp::odd_phase_sequence(k);
      auto p = qsp::odd_target(k);
      for (int i = 0; i <= 1000; ++i) {
        double t = pi * i / 1000;
        worst = std::max(worst, std::abs(qsp::evaluate_qsp(seq, t, BlochHamiltonian::x())(0, 0) -
                                         p(std::cos(t))));
      }
    }
    for (int k = 2; k <= 32; k += 2) {
      auto ec = qsp::even_construction(k);
      bworst = std::max({bworst, std::abs(ec.p(1.0) - std::sqrt(2.0)), std::abs(ec.q(1.0))});
      auto c = build_binary_circuit(k);
      for (int i = 0; i <= 1000; ++i) {
        double t = pi * i / 1000;
        auto s = success_probabilities(c, t);
        for (size_t h = 0; h < s.size(); ++h)
          worst = std::max(worst, std::abs(s[h] - closed_form_success(ProtocolKind::Binary, k,
                                                                      c.hypotheses[h].label, t)));
      }
    }
    return Outcome{worst <= tol && bworst <= btol,
                   "odd k<=31, even k<=32 sup err " + sci(worst) + " (tol " + sci(tol) +
                       "), P(1), Q(1) dev " + sci(bworst) + " (tol " + sci(btol) + ")"};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
