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
#include <vector>

#include "ebr/bloch.hpp"
#include "ebr/rng.hpp"
#include "ebr/simplex.hpp"

namespace ebr {

/// A point lambda of the measurement simplex, in barycentric coordinates.
/// Each such point stands for one potential measurement-interaction.
using HiddenInteraction = Barycentric;

/// Uniform (Lebesgue) sample on the (n-1)-simplex: n unit-rate exponentials
/// normalized by their sum.
HiddenInteraction sample_lambda(std::size_t n, Rng& rng);

/// Outcome whose sub-region A_i contains lambda.
///
/// lambda lies in A_i = conv({n_j : j != i} u {r_par}) exactly when
/// b_i/p_i = min_j b_j/p_j. Outcomes with p_j <= 0 get ratio +inf and are
/// never selected. Ties go to the smallest index.
///
/// Throws ContractError if p does not sum to one (to 1e-10), has a weight
/// below -1e-12, or its size differs from lambda's.
std::size_t classify(const HiddenInteraction& lambda, const Barycentric& p);

/// Disjoint non-empty blocks of outcome indices covering 0..n-1. Indices are
/// zero-based.
class Partition {
 public:
  /// Throws ContractError naming the problem (empty block, index out of
  /// range, duplicate index, missing index).
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  static Partition singletons(std::size_t n);

  std::size_t dim() const { return class_of_.size(); }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t k) const { return blocks_[k]; }
  std::size_t class_of(std::size_t outcome) const { return class_of_[outcome]; }

  /// Sum of p over each block.
  Barycentric fuse(const Barycentric& p) const;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> class_of_;
};

struct MeasurementOutcome {
  std::size_t outcome;
  DensityMatrix post_state;
  HiddenInteraction lambda;
};

/// Single non-degenerate measurement: sample lambda, classify it against the
/// Born weights, return |a_i><a_i|.
MeasurementOutcome measure_once(const DensityMatrix& d, const MeasurementBasis& b,
                                Rng& rng);

struct DegenerateOutcome {
  std::size_t class_index;
  /// Fine-grained outcome whose sub-region contained lambda.
  std::size_t outcome;
  /// P_K d P_K / Tr(P_K d P_K)
  DensityMatrix post_state;
  HiddenInteraction lambda;
};

/// Degenerate measurement: the sub-regions of a block are fused, so the class
/// is the block containing classify(lambda, p). Post-state follows the
/// Lueders projection rule.
DegenerateOutcome measure_degenerate(const DensityMatrix& d,
                                     const MeasurementBasis& b,
                                     const Partition& partition, Rng& rng);

/// P_K d P_K / Tr(P_K d P_K) for P_K the projector onto span{a_i : i in K}.
/// Throws ContractError if the trace vanishes.
DensityMatrix lueders_update(const DensityMatrix& d, const MeasurementBasis& b,
                             const std::vector<std::size_t>& block);

struct TrialReport {
  std::uint64_t n_trials = 0;
  Barycentric exact_probs{RealVector()};
  std::vector<std::uint64_t> counts;
  std::vector<double> empirical_freqs;
  /// Pearson statistic over outcomes with p_i > 0.
  double chi_square = 0.0;
  /// max_i |freq_i - p_i|
  double max_abs_deviation = 0.0;
};

/// Builds a report from raw counts against exact probabilities.
TrialReport make_report(const Barycentric& exact, std::vector<std::uint64_t> counts);

/// Repeats the non-degenerate measurement n_trials times.
///
/// With workers == 1 the single stream `seed` is used. With more workers,
/// worker w draws from seed.substream(w) and handles a fixed slice of the
/// trials, so the result depends on (seed, workers) but not on scheduling.
TrialReport run_trials(const DensityMatrix& d, const MeasurementBasis& b,
                       std::uint64_t n_trials, RngSeed seed,
                       std::size_t workers = 1);

/// Same as run_trials but counting partition classes. With the singleton
/// partition it consumes the random stream identically to run_trials and
/// gives the same counts.
TrialReport run_degenerate_trials(const DensityMatrix& d, const MeasurementBasis& b,
                                  const Partition& partition,
                                  std::uint64_t n_trials, RngSeed seed,
                                  std::size_t workers = 1);

inline constexpr double kOracleTolerance = 1e-10;

struct OracleReport {
  std::uint64_t n_samples = 0;
  std::vector<std::uint64_t> hits;
  std::vector<double> fractions;
  /// Samples within kOracleTolerance of more than one region.
  std::uint64_t boundary_samples = 0;
};

/// Independent check of the measure-ratio rule. Each uniform lambda is placed
/// in the measurement simplex and assigned to a sub-region by solving for its
/// affine coefficients over every candidate vertex set {n_j : j != i} u
/// {r_par}; a region claims the point when all coefficients are >= -1e-10.
/// Does not use the argmin shortcut.
///
/// Requires every weight of rpar to be strictly positive. Throws
/// OracleInconsistency if a sample is claimed by no region or lies strictly
/// inside two.
OracleReport geometric_hit_count_oracle(const MeasurementSimplex& s,
                                        const Barycentric& rpar,
                                        std::uint64_t n_samples, Rng& rng);

struct OracleComparison {
  std::uint64_t n_samples = 0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  /// Samples whose two smallest ratios b_j/p_j differ by <= 1e-10; these are
  /// compared but a mismatch there is not counted as a disagreement.
  std::uint64_t ties = 0;
};

/// Runs the oracle and classify() on the same lambda stream.
OracleComparison compare_oracle_to_argmin(const MeasurementSimplex& s,
                                          const Barycentric& rpar,
                                          std::uint64_t n_samples, Rng& rng);

}  // namespace ebr
