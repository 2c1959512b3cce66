// Copyright 2026 The EBR Authors
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

// ebr: run extended-Bloch measurement experiments from a JSON config.
//
// Exit codes: 0 success, 2 bad command line or config, 3 I/O failure,
// 4 contract violation during the computation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ebr/error.hpp"
#include "ebr/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitContract = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Bloch representation measurement simulator"};

  std::string config_path;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  std::string out_path;
  std::string format;
  std::string partition;
  bool dump_geometry = false;
  bool trace = false;
  bool oracle_check = false;
  bool dump_generators = false;

  app.add_option("--config", config_path, "Experiment config (JSON)")->required();
  auto* trials_opt = app.add_option("--trials", trials, "Number of trials")
                         ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "64-bit RNG seed");
  auto* workers_opt = app.add_option("--workers", workers, "Worker threads")
                          ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--partition", partition,
                 "Degenerate outcome blocks, one-based, e.g. \"1|2,3\"");
  app.add_flag("--dump-geometry", dump_geometry, "Include simplex geometry");
  app.add_flag("--trace", trace, "Include a staged process trace");
  app.add_flag("--oracle-check", oracle_check,
               "Compare argmin classification with the brute-force oracle");
  app.add_flag("--dump-generators", dump_generators, "Include the SU(N) generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  std::string output;
  try {
    ebr::ExperimentConfig cfg = ebr::parse_config_file(config_path);
    if (*trials_opt) cfg.n_trials = trials;
    if (*seed_opt) cfg.seed.seed = seed;
    if (*workers_opt) cfg.workers = workers;
    if (format == "json") cfg.format = ebr::OutputFormat::Json;
    if (format == "csv") cfg.format = ebr::OutputFormat::Csv;
    if (!partition.empty()) cfg.partition = ebr::parse_partition_spec(partition, cfg.dim);
    cfg.dump_geometry = cfg.dump_geometry || dump_geometry;
    cfg.trace = cfg.trace || trace;
    cfg.oracle_check = cfg.oracle_check || oracle_check;
    cfg.dump_generators = cfg.dump_generators || dump_generators;
    output = ebr::run_experiment(cfg);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "ebr: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ebr::ParseError& e) {
    std::cerr << "ebr: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ebr::ValidationError& e) {
    std::cerr << "ebr: invalid config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ebr::Error& e) {
    std::cerr << "ebr: contract violation: " << e.what() << "\n";
    return kExitContract;
  }

  if (out_path.empty()) {
    std::cout << output;
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "ebr: I/O error: failed writing to stdout\n";
      return kExitIo;
    }
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << output;
  out.close();
  if (!out) {
    std::cerr << "ebr: I/O error: cannot write '" << out_path << "'\n";
    return kExitIo;
  }
  return 0;
}
