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
#include <optional>
#include <string>
#include <vector>

#include "ebr/bloch.hpp"
#include "ebr/generators.hpp"
#include "ebr/rng.hpp"
#include "ebr/sampler.hpp"
#include "ebr/simplex.hpp"

namespace ebr {

/// sum_j <a_j|d|a_j> |a_j><a_j|, i.e. d with its off-diagonal part in the
/// measurement basis removed.
DensityMatrix reduce_state(const DensityMatrix& d, const MeasurementBasis& b);

struct TraceStage {
  std::string label;
  BlochVector bloch;
  DensityMatrix density;
};

/// Snapshots of one measurement: "initial" (the input), "reduced" (its
/// orthogonal projection onto the measurement simplex), "collapsed" (a vertex,
/// or for a degenerate outcome the point of the block's face reached by the
/// contraction) and, for degenerate measurements only, "purified" (the Lueders
/// post-state).
struct ProcessTrace {
  std::vector<TraceStage> stages;
  /// Fine-grained outcome index (zero-based).
  std::size_t outcome = 0;
  /// Class index when a partition was given.
  std::optional<std::size_t> class_index;
  HiddenInteraction lambda{RealVector()};

  const TraceStage* stage(const std::string& label) const;
};

/// Runs reduction, hidden-interaction selection and (degenerate case)
/// purification, recording each step. `d` must be a valid state.
ProcessTrace run_measurement(const DensityMatrix& d, const MeasurementBasis& b,
                             const GeneratorSet& g,
                             const std::optional<Partition>& partition,
                             RngSeed seed);

}  // namespace ebr
