// Copyright 2026 The qdestruct Authors
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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace qdestruct::cli;

  CLI::App app{"qdestruct: destruction maps on vacuum-extended Hilbert spaces"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  bool sample = false;
  std::uint64_t sample_seed = 42;
  CLI::App* run = app.add_subcommand("run", "Run a destruction scenario");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_flag("--sample", sample, "Also draw one outcome at random");
  run->add_option("--seed", sample_seed, "Seed for --sample");

  qdestruct::TrialConfig config;
  CLI::App* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--trials", config.trials, "Trials per property")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  verify->add_option("--dims", config.dims, "Physical dimensions")
      ->delimiter(',')
      ->capture_default_str();

  CLI::App* examples =
      app.add_subcommand("examples", "Write the bundled example scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (*run) {
    std::optional<std::filesystem::path> out;
    if (!out_path.empty()) out = out_path;
    std::optional<std::uint64_t> seed;
    if (sample) seed = sample_seed;
    return cmd_run(scenario_path, out, seed, std::cout, std::cerr);
  }
  if (*verify) return cmd_verify(config, std::cout, std::cerr);
  if (*examples) return cmd_examples(".", std::cout, std::cerr);
  return kExitInputError;
}
