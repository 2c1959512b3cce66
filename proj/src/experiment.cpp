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

#include "ebr/experiment.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ebr/collapse.hpp"
#include "ebr/error.hpp"
#include "ebr/generators.hpp"
#include "ebr/json_io.hpp"

namespace ebr {

namespace {

using io::json;

const std::set<std::string> kTopLevelKeys = {
    "dim",     "state",   "basis",          "partition", "n_trials", "seed",
    "stream",  "workers", "oracle_samples", "format",    "flags"};
const std::set<std::string> kFlagKeys = {"dump_geometry", "trace", "oracle_check",
                                         "dump_generators"};

std::uint64_t read_unsigned(const json& j, const std::string& field,
                            std::uint64_t min_value) {
  if (!j.is_number_unsigned()) {
    throw ValidationError(field, "expected a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v < min_value) {
    throw ValidationError(field, "must be >= " + std::to_string(min_value));
  }
  return v;
}

MeasurementBasis read_basis(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw ValidationError("basis", "expected " + std::to_string(n) + " kets");
  }
  std::vector<ComplexVector> kets;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string f = "basis[" + std::to_string(i) + "]";
    ComplexVector v = io::vector_from_json(j[i], f);
    if (static_cast<std::size_t>(v.size()) != n) {
      throw ValidationError(f, "expected " + std::to_string(n) + " amplitudes");
    }
    kets.push_back(std::move(v));
  }
  try {
    return MeasurementBasis(std::move(kets));
  } catch (const Error& e) {
    throw ValidationError("basis", e.what());
  }
}

Partition read_partition(const json& j, std::size_t n) {
  if (!j.is_array()) {
    throw ValidationError("partition", "expected an array of index arrays");
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = "partition[" + std::to_string(k) + "]";
    if (!j[k].is_array()) throw ValidationError(f, "expected an array of indices");
    std::vector<std::size_t> block;
    for (std::size_t m = 0; m < j[k].size(); ++m) {
      const auto idx = read_unsigned(j[k][m], f + "[" + std::to_string(m) + "]", 1);
      block.push_back(static_cast<std::size_t>(idx - 1));
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition(n, std::move(blocks));
  } catch (const ContractError& e) {
    throw ValidationError("partition", e.what());
  }
}

// Oracle samples come from their own stream so that enabling the check does
// not shift the trial statistics.
constexpr std::uint64_t kOracleStreamTag = 0x6f7261636c65ULL;

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("config parse error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!j.is_object()) throw ValidationError("(root)", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kTopLevelKeys.count(key)) throw ValidationError(key, "unknown field");
  }

  if (!j.contains("dim")) throw ValidationError("dim", "required field missing");
  const auto n = static_cast<std::size_t>(read_unsigned(j["dim"], "dim", 2));
  if (!j.contains("state")) throw ValidationError("state", "required field missing");
  DensityMatrix state = io::state_from_json(j["state"], "state");
  if (state.dim() != n) {
    throw ValidationError("state", "state has dimension " + std::to_string(state.dim()) +
                                       ", config dim is " + std::to_string(n));
  }
  MeasurementBasis basis =
      j.contains("basis") ? read_basis(j["basis"], n) : MeasurementBasis::canonical(n);

  ExperimentConfig cfg{.dim = n, .state = std::move(state), .basis = std::move(basis)};
  if (j.contains("partition")) cfg.partition = read_partition(j["partition"], n);
  if (j.contains("n_trials")) cfg.n_trials = read_unsigned(j["n_trials"], "n_trials", 1);
  if (j.contains("seed")) cfg.seed.seed = read_unsigned(j["seed"], "seed", 0);
  if (j.contains("stream")) cfg.seed.stream = read_unsigned(j["stream"], "stream", 0);
  if (j.contains("workers")) {
    cfg.workers = static_cast<std::size_t>(read_unsigned(j["workers"], "workers", 1));
  }
  if (j.contains("oracle_samples")) {
    cfg.oracle_samples = read_unsigned(j["oracle_samples"], "oracle_samples", 1);
  }
  if (j.contains("format")) {
    const auto& f = j["format"];
    if (f == "json") {
      cfg.format = OutputFormat::Json;
    } else if (f == "csv") {
      cfg.format = OutputFormat::Csv;
    } else {
      throw ValidationError("format", "expected \"json\" or \"csv\"");
    }
  }
  if (j.contains("flags")) {
    const auto& flags = j["flags"];
    if (!flags.is_object()) throw ValidationError("flags", "expected an object");
    for (const auto& [key, value] : flags.items()) {
      if (!kFlagKeys.count(key)) throw ValidationError("flags." + key, "unknown flag");
      if (!value.is_boolean()) throw ValidationError("flags." + key, "expected a boolean");
    }
    cfg.dump_geometry = flags.value("dump_geometry", false);
    cfg.trace = flags.value("trace", false);
    cfg.oracle_check = flags.value("oracle_check", false);
    cfg.dump_generators = flags.value("dump_generators", false);
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("cannot read config file '" + path + "'");
  return parse_config(buf.str());
}

Partition parse_partition_spec(const std::string& spec, std::size_t n) {
  const std::string field = "--partition";
  std::vector<std::vector<std::size_t>> blocks;
  std::stringstream blocks_in(spec);
  std::string block_text;
  while (std::getline(blocks_in, block_text, '|')) {
    std::vector<std::size_t> block;
    std::stringstream idx_in(block_text);
    std::string idx_text;
    while (std::getline(idx_in, idx_text, ',')) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(idx_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != idx_text.size() || v < 1 || idx_text[0] == '-') {
        throw ValidationError(field, "bad index '" + idx_text + "'");
      }
      block.push_back(static_cast<std::size_t>(v - 1));
    }
    blocks.push_back(std::move(block));
  }
  if (!spec.empty() && spec.back() == '|') blocks.emplace_back();
  try {
    return Partition(n, std::move(blocks));
  } catch (const ContractError& e) {
    throw ValidationError(field, e.what());
  }
}

std::string run_experiment(const ExperimentConfig& cfg) {
  const bool extras =
      cfg.dump_geometry || cfg.trace || cfg.oracle_check || cfg.dump_generators;
  if (cfg.format == OutputFormat::Csv && extras) {
    throw ValidationError("format",
                          "csv output carries the trial report only; geometry, "
                          "trace, oracle and generator dumps need json");
  }

  const TrialReport report =
      cfg.partition ? run_degenerate_trials(cfg.state, cfg.basis, *cfg.partition,
                                            cfg.n_trials, cfg.seed, cfg.workers)
                    : run_trials(cfg.state, cfg.basis, cfg.n_trials, cfg.seed,
                                 cfg.workers);
  if (cfg.format == OutputFormat::Csv) return io::to_csv(report);

  json out;
  out["dim"] = cfg.dim;
  out["seed"] = cfg.seed.seed;
  out["stream"] = cfg.seed.stream;
  if (cfg.partition) {
    json blocks = json::array();
    for (const auto& block : cfg.partition->blocks()) {
      json b = json::array();
      for (auto i : block) b.push_back(i + 1);
      blocks.push_back(std::move(b));
    }
    out["partition"] = std::move(blocks);
  }
  out["report"] = io::to_json(report);

  if (cfg.dump_geometry || cfg.trace || cfg.oracle_check || cfg.dump_generators) {
    const GeneratorSet g = build_generators(cfg.dim);
    const MeasurementSimplex s = basis_to_simplex(cfg.basis, g);
    if (cfg.dump_generators) out["generators"] = io::to_json(g);
    if (cfg.dump_geometry) out["geometry"] = io::to_json(s);
    if (cfg.trace) {
      out["trace"] = io::to_json(run_measurement(cfg.state, cfg.basis, g,
                                                 cfg.partition, cfg.seed));
    }
    if (cfg.oracle_check) {
      Rng rng(RngSeed{cfg.seed.seed, cfg.seed.stream ^ kOracleStreamTag});
      const Barycentric p = born_probabilities(cfg.state, cfg.basis);
      out["oracle"] = io::to_json(compare_oracle_to_argmin(s, p, cfg.oracle_samples, rng));
    }
  }
  return out.dump(2) + "\n";
}

}  // namespace ebr
