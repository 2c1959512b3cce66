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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ebr/bloch.hpp"
#include "ebr/rng.hpp"
#include "ebr/sampler.hpp"
#include "ebr/simplex.hpp"

namespace ebr {

enum class OutputFormat { Json, Csv };

/// A fully validated experiment description.
///
/// JSON schema (only `dim` and `state` are required):
///
///   {
///     "dim": 3,
///     "state": {"ket": [[re, im], ...]}          // or
///              {"density": [[[re, im], ...], ...]},
///     "basis": [[[re, im], ...], ...],           // N kets; default canonical
///     "partition": [[1], [2, 3]],                // one-based outcome blocks
///     "n_trials": 1000000,
///     "seed": 0,
///     "stream": 0,
///     "workers": 1,
///     "oracle_samples": 100000,
///     "format": "json" | "csv",
///     "flags": {"dump_geometry": false, "trace": false,
///               "oracle_check": false, "dump_generators": false}
///   }
///
/// Real numbers are accepted wherever a complex [re, im] pair is expected.
struct ExperimentConfig {
  std::size_t dim = 0;
  DensityMatrix state;
  MeasurementBasis basis;
  std::optional<Partition> partition;
  std::uint64_t n_trials = 1000000;
  RngSeed seed;
  std::size_t workers = 1;
  std::uint64_t oracle_samples = 100000;
  OutputFormat format = OutputFormat::Json;
  bool dump_geometry = false;
  bool trace = false;
  bool oracle_check = false;
  bool dump_generators = false;
};

/// Parses and validates JSON text. Throws ParseError (with byte offset) for
/// malformed JSON and ValidationError naming the failing field otherwise.
ExperimentConfig parse_config(const std::string& text);

/// Reads the file and calls parse_config. Throws std::ios_base::failure if
/// the file cannot be read.
ExperimentConfig parse_config_file(const std::string& path);

/// Parses "1|2,3" (one-based, '|' between blocks, ',' within a block).
/// Throws ValidationError on field "--partition".
Partition parse_partition_spec(const std::string& spec, std::size_t n);

/// Runs the configured computations and returns the rendered output (JSON
/// document or CSV table). Deterministic in the config.
std::string run_experiment(const ExperimentConfig& cfg);

}  // namespace ebr
