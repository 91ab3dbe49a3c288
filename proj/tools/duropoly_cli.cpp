// Copyright 2026 The Duropoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "duropoly/cli.hpp"

namespace {

using duropoly::cli::Command;
using duropoly::cli::Format;

void add_common(CLI::App* sub, duropoly::cli::RunConfig& cfg, std::string& out_path) {
  static const std::map<std::string, Format> formats{
      {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  sub->add_option("--format", cfg.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", out_path, "Write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  duropoly::cli::RunConfig cfg;
  std::string input;
  std::string out_path;

  CLI::App app{"Durable-good monopoly equilibria with atomic consumers"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Compute the equilibrium price path");
  solve->add_option("input", input, "Instance JSON file")->required();
  add_common(solve, cfg, out_path);

  auto* bounds = app.add_subcommand("bounds", "Report profit bounds and the duropoly/static ratio");
  bounds->add_option("input", input, "Instance JSON file")->required();
  add_common(bounds, cfg, out_path);

  auto* verify = app.add_subcommand("verify", "Check a solution or a two-period profile for deviations");
  verify->add_option("input", input, "Instance or solution JSON file")->required();
  verify->add_option("--profile", cfg.profile_path, "Two-period threshold profile JSON file");
  add_common(verify, cfg, out_path);

  auto* pacman = app.add_subcommand("pacman", "Check full surplus extraction");
  pacman->add_option("input", input, "Instance JSON file")->required();
  add_common(pacman, cfg, out_path);

  auto* tight = app.add_subcommand("tight", "Build and solve the two-period tight family");
  tight->add_option("--n", cfg.tight_n, "Number of consumers")->required();
  tight->add_option("--k", cfg.tight_k, "Number of high-value consumers")->required();
  tight->add_option("--vh", cfg.tight_high_value, "High value (integer or p/q)")->capture_default_str();
  add_common(tight, cfg, out_path);

  auto* nonskim = app.add_subcommand("nonskim", "Analyse a two-period threshold profile");
  nonskim->add_option("input", input, "Instance JSON file");
  nonskim->add_option("--profile", cfg.profile_path, "Threshold profile JSON file");
  nonskim->add_flag("--demo", cfg.demo, "Use the built-in non-skimming example");
  add_common(nonskim, cfg, out_path);

  auto* oracle = app.add_subcommand("oracle", "Cross-check the solver against exhaustive search");
  oracle->add_option("input", input, "Instance JSON file")->required();
  add_common(oracle, cfg, out_path);

  auto* sweep = app.add_subcommand("sweep", "Check bounds on seeded random instances");
  sweep->add_option("--count", cfg.sweep.count, "Number of instances");
  sweep->add_option("--max-n", cfg.sweep.max_n, "Largest number of consumers");
  sweep->add_option("--max-t", cfg.sweep.max_t, "Largest horizon");
  sweep->add_option("--max-value", cfg.sweep.max_value, "Largest integer valuation");
  sweep->add_option("--seed", cfg.sweep.seed, "Random seed");
  add_common(sweep, cfg, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : duropoly::cli::kExitInvalid;
  }

  const std::map<CLI::App*, Command> commands{
      {solve, Command::kSolve},   {bounds, Command::kBounds}, {verify, Command::kVerify},
      {pacman, Command::kPacman}, {tight, Command::kTight},   {nonskim, Command::kNonskim},
      {oracle, Command::kOracle}, {sweep, Command::kSweep}};
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) cfg.command = command;
  if (!input.empty()) cfg.input_path = input;

  if (out_path.empty()) return duropoly::cli::run(cfg, std::cout, std::cerr);
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return duropoly::cli::kExitInvalid;
  }
  return duropoly::cli::run(cfg, file, std::cerr);
}
