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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamrec/cli/commands.hpp"

using hamrec::cli::RunConfig;

int main(int argc, char **argv) {
  CLI::App app{"Hamiltonian recognition toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;

  struct Bound {
    const char *key;
    CLI::Option *opt;
  };
  std::vector<Bound> bound;

  auto add = [&](CLI::App *sub, bool angles, bool theta_range, bool sampling) {
    bound.push_back({"k", sub->add_option("--k", cfg.k, "number of evolution uses")});
    bound.push_back({"protocol", sub->add_option("--protocol", cfg.protocol, "binary or ternary")
                                     ->check(CLI::IsMember({"binary", "ternary"}))});
    bound.push_back({"grid", sub->add_option("--grid", cfg.grid, "grid points")});
    bound.push_back({"out", sub->add_option("--out", cfg.out, "output path")});
    bound.push_back({"format", sub->add_option("--format", cfg.format, "csv or json")
                                   ->check(CLI::IsMember({"csv", "json"}))});
    sub->add_option("--config", config_path, "JSON config file");
    if (angles) {
      bound.push_back({"axis", sub->add_option("--axis", cfg.axis, "x, y, z or nx,ny,nz")});
      bound.push_back({"theta", sub->add_option("--theta", cfg.theta, "evolution angle")});
    }
    if (theta_range) {
      bound.push_back({"theta_min", sub->add_option("--theta-min", cfg.theta_min)});
      bound.push_back({"theta_max", sub->add_option("--theta-max", cfg.theta_max)});
    }
    if (sampling) {
      bound.push_back({"shots", sub->add_option("--shots", cfg.shots, "number of shots")});
      bound.push_back({"seed", sub->add_option("--seed", cfg.seed, "RNG seed")});
    }
  };

  add(app.add_subcommand("synthesize", "phase file for the binary protocol"), false, false, false);
  add(app.add_subcommand("sweep", "success probabilities over theta"), false, true, false);
  add(app.add_subcommand("simulate", "sampled shots for a hidden axis"), true, false, true);
  add(app.add_subcommand("certify", "dual certificate report"), false, false, false);
  add(app.add_subcommand("sdp-sweep", "optimal vs fixed success over axis angle"), false, false,
      false);

  CLI11_PARSE(app, argc, argv);
  cfg.subcommand = app.get_subcommands().front()->get_name();

  if (!config_path.empty()) {
    std::vector<std::string> explicit_keys;
    for (const auto &b : bound)
      if (b.opt->count() > 0) explicit_keys.push_back(b.key);
    try {
      std::ifstream f(config_path);
      if (!f) throw hamrec::DomainError("cannot read config " + config_path);
      hamrec::cli::apply_config(cfg, hamrec::cli::json::parse(f), explicit_keys);
    } catch (const std::exception &e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return hamrec::cli::run(cfg, std::cout, std::cerr);
}
