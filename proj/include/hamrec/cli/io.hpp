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
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamrec/core/errors.hpp"
#include "hamrec/qsp/phase_sequence.hpp"
#include "hamrec/tester/certificates.hpp"
#include "hamrec/tester/sweep.hpp"

namespace hamrec::cli {

using json = nlohmann::ordered_json;

/// Decimal text with 12 significant digits, "-0" folded to "0".
inline std::string fmt12(double x) {
  if (x == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

inline json number(double x) { return json(round12(x)); }

inline json numbers(const std::vector<double> &xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

inline json to_json(const qsp::PhaseSequence &s) {
  return json{{"k", s.k},
              {"convention", qsp::to_string(s.convention)},
              {"phases", numbers(s.phases)}};
}

inline qsp::PhaseSequence phases_from_json(const json &j) {
  qsp::PhaseSequence s;
  try {
    s.k = j.at("k").get<int>();
    s.convention = qsp::phase_convention_from_string(j.at("convention").get<std::string>());
    s.phases = j.at("phases").get<std::vector<double>>();
  } catch (const json::exception &e) {
    throw DomainError(std::string("phase file: ") + e.what());
  }
  s.validate();
  return s;
}

inline json to_json(const tester::ConstraintReport &r) {
  json a = json::array();
  for (const auto &c : r.results)
    a.push_back({{"identity", c.name}, {"residual", number(c.residual)}, {"pass", c.pass}});
  return json{{"strategy", tester::to_string(r.strategy)}, {"pass", r.pass}, {"checks", a}};
}

inline json to_json(const EigenRange &e) {
  return json{{"min_eig", number(e.min)}, {"spectral_norm", number(e.spectral_norm())}};
}

inline json to_json(const tester::DualCertificate &c) {
  json slack = json::object();
  for (size_t j = 0; j < c.labels.size(); ++j) slack[c.labels[j]] = to_json(c.slack_eigs[j]);
  return json{{"k", c.k},
              {"lambda", c.lambda.str()},
              {"lambda_value", number(c.lambda.value())},
              {"wbar", to_json(c.wbar_eigs)},
              {"slack", slack},
              {"dual_seq", to_json(c.dual_seq)},
              {"dual_gen", to_json(c.dual_gen)}};
}

inline json to_json(const tester::SweepRow &r) {
  return json{{"alpha", number(r.alpha)},
              {"n0", numbers({r.n0.x(), r.n0.y(), r.n0.z()})},
              {"optimal", r.ok ? number(r.optimal) : json()},
              {"fixed", r.ok ? number(r.fixed) : json()},
              {"guess", number(0.5)},
              {"status", r.ok ? "ok" : "error"},
              {"error", r.error}};
}

/// CSV with a header row and LF line endings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string> &header) { row(header); }

  void row(const std::vector<std::string> &cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ += ',';
      out_ += cells[i];
    }
    out_ += '\n';
  }

  const std::string &str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace hamrec::cli
