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

#include "ebr/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include "ebr/error.hpp"

namespace ebr {

namespace {

constexpr double kProbabilitySumTolerance = 1e-10;

void validate_probabilities(const Barycentric& p, std::size_t n) {
  if (p.dim() != n) {
    throw ContractError("probability vector has " + std::to_string(p.dim()) +
                        " weights, expected " + std::to_string(n));
  }
  if (!(std::abs(p.sum() - 1.0) <= kProbabilitySumTolerance)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "probability weights sum to " << p.sum() << ", not 1";
    throw ContractError(msg.str());
  }
  if (!p.is_inside()) {
    throw ContractError("probability vector has a negative weight");
  }
}

void fill_lambda(double* out, std::size_t n, Rng& rng) {
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = rng.exponential();
    total += out[j];
  }
  for (std::size_t j = 0; j < n; ++j) out[j] /= total;
}

struct RatioPick {
  std::size_t index;
  double best;
  double second;
};

RatioPick argmin_ratio(const double* b, const double* p, std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  RatioPick pick{0, inf, inf};
  for (std::size_t j = 0; j < n; ++j) {
    const double ratio = p[j] > 0.0 ? b[j] / p[j] : inf;
    if (ratio < pick.best) {
      pick.second = pick.best;
      pick.best = ratio;
      pick.index = j;
    } else if (ratio < pick.second) {
      pick.second = ratio;
    }
  }
  return pick;
}

// Splits n_trials into `workers` fixed slices and runs `body(rng, count)` on
// each, summing the per-slice counts.
template <typename Body>
std::vector<std::uint64_t> run_sliced(std::size_t n_bins, std::uint64_t n_trials,
                                      RngSeed seed, std::size_t workers,
                                      Body body) {
  if (n_trials < 1) throw ContractError("n_trials must be >= 1");
  workers = std::max<std::size_t>(1, workers);
  if (workers == 1) {
    std::vector<std::uint64_t> counts(n_bins, 0);
    Rng rng(seed);
    body(rng, n_trials, counts);
    return counts;
  }
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(n_bins, 0));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t base = n_trials / workers;
    const std::uint64_t extra = n_trials % workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t count = base + (w < extra ? 1 : 0);
      pool.emplace_back([&, w, count] {
        Rng rng(seed.substream(w));
        body(rng, count, partial[w]);
      });
    }
  }
  std::vector<std::uint64_t> counts(n_bins, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < n_bins; ++i) counts[i] += part[i];
  }
  return counts;
}

}  // namespace

HiddenInteraction sample_lambda(std::size_t n, Rng& rng) {
  if (n < 2) throw DimensionError("sample_lambda: n must be >= 2");
  RealVector b(static_cast<Eigen::Index>(n));
  fill_lambda(b.data(), n, rng);
  return Barycentric(std::move(b));
}

std::size_t classify(const HiddenInteraction& lambda, const Barycentric& p) {
  validate_probabilities(p, lambda.dim());
  return argmin_ratio(lambda.weights().data(), p.weights().data(), p.dim()).index;
}

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : blocks_(std::move(blocks)) {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  class_of_.assign(n, unset);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].empty()) {
      throw ContractError("partition block " + std::to_string(k + 1) + " is empty");
    }
    for (std::size_t i : blocks_[k]) {
      if (i >= n) {
        throw ContractError("partition index " + std::to_string(i + 1) +
                            " is out of range 1.." + std::to_string(n));
      }
      if (class_of_[i] != unset) {
        throw ContractError("partition has duplicate index " + std::to_string(i + 1));
      }
      class_of_[i] = k;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] == unset) {
      throw ContractError("partition does not cover index " + std::to_string(i + 1));
    }
  }
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return Partition(n, std::move(blocks));
}

Barycentric Partition::fuse(const Barycentric& p) const {
  if (p.dim() != dim()) throw DimensionError("Partition::fuse: dimension mismatch");
  RealVector out = RealVector::Zero(static_cast<Eigen::Index>(blocks_.size()));
  for (std::size_t i = 0; i < p.dim(); ++i) {
    out(static_cast<Eigen::Index>(class_of_[i])) += p[i];
  }
  return Barycentric(std::move(out));
}

MeasurementOutcome measure_once(const DensityMatrix& d, const MeasurementBasis& b,
                                Rng& rng) {
  const Barycentric p = born_probabilities(d, b);
  HiddenInteraction lambda = sample_lambda(b.dim(), rng);
  const std::size_t i = classify(lambda, p);
  return {i, DensityMatrix(b.projector(i)), std::move(lambda)};
}

DensityMatrix lueders_update(const DensityMatrix& d, const MeasurementBasis& b,
                             const std::vector<std::size_t>& block) {
  if (d.dim() != b.dim()) throw DimensionError("lueders_update: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(b.dim());
  ComplexMatrix proj = ComplexMatrix::Zero(n, n);
  for (std::size_t i : block) proj += b.projector(i);
  ComplexMatrix post = proj * d.matrix() * proj;
  const double tr = post.trace().real();
  if (!(tr > 0.0)) {
    throw ContractError("Lueders update onto a zero-probability block");
  }
  post /= tr;
  return DensityMatrix(std::move(post));
}

DegenerateOutcome measure_degenerate(const DensityMatrix& d,
                                     const MeasurementBasis& b,
                                     const Partition& partition, Rng& rng) {
  if (partition.dim() != b.dim()) {
    throw ContractError("partition covers " + std::to_string(partition.dim()) +
                        " outcomes, basis has " + std::to_string(b.dim()));
  }
  const Barycentric p = born_probabilities(d, b);
  HiddenInteraction lambda = sample_lambda(b.dim(), rng);
  const std::size_t i = classify(lambda, p);
  const std::size_t k = partition.class_of(i);
  return {k, i, lueders_update(d, b, partition.block(k)), std::move(lambda)};
}

TrialReport make_report(const Barycentric& exact, std::vector<std::uint64_t> counts) {
  if (counts.size() != exact.dim()) {
    throw DimensionError("make_report: counts and probabilities differ in size");
  }
  TrialReport r;
  r.exact_probs = exact;
  r.counts = std::move(counts);
  for (auto c : r.counts) r.n_trials += c;
  const auto n = static_cast<double>(r.n_trials);
  r.empirical_freqs.resize(r.counts.size());
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    const double freq = static_cast<double>(r.counts[i]) / n;
    r.empirical_freqs[i] = freq;
    r.max_abs_deviation = std::max(r.max_abs_deviation, std::abs(freq - exact[i]));
    if (exact[i] > 0.0) {
      const double expected = n * exact[i];
      const double diff = static_cast<double>(r.counts[i]) - expected;
      r.chi_square += diff * diff / expected;
    }
  }
  return r;
}

TrialReport run_trials(const DensityMatrix& d, const MeasurementBasis& b,
                       std::uint64_t n_trials, RngSeed seed, std::size_t workers) {
  const Barycentric p = born_probabilities(d, b);
  const std::size_t n = b.dim();
  validate_probabilities(p, n);
  const double* pw = p.weights().data();
  auto counts = run_sliced(
      n, n_trials, seed, workers,
      [&](Rng& rng, std::uint64_t count, std::vector<std::uint64_t>& out) {
        std::vector<double> lambda(n);
        for (std::uint64_t t = 0; t < count; ++t) {
          fill_lambda(lambda.data(), n, rng);
          ++out[argmin_ratio(lambda.data(), pw, n).index];
        }
      });
  return make_report(p, std::move(counts));
}

TrialReport run_degenerate_trials(const DensityMatrix& d, const MeasurementBasis& b,
                                  const Partition& partition,
                                  std::uint64_t n_trials, RngSeed seed,
                                  std::size_t workers) {
  if (partition.dim() != b.dim()) {
    throw ContractError("partition does not match the basis dimension");
  }
  const Barycentric p = born_probabilities(d, b);
  const std::size_t n = b.dim();
  validate_probabilities(p, n);
  const double* pw = p.weights().data();
  auto counts = run_sliced(
      partition.size(), n_trials, seed, workers,
      [&](Rng& rng, std::uint64_t count, std::vector<std::uint64_t>& out) {
        std::vector<double> lambda(n);
        for (std::uint64_t t = 0; t < count; ++t) {
          fill_lambda(lambda.data(), n, rng);
          ++out[partition.class_of(argmin_ratio(lambda.data(), pw, n).index)];
        }
      });
  return make_report(partition.fuse(p), std::move(counts));
}

namespace {

// Affine-coefficient solvers for each candidate region A_i, whose vertex
// list is the simplex vertices with n_i replaced by r_par.
class RegionMembership {
 public:
  RegionMembership(const MeasurementSimplex& s, const Barycentric& rpar)
      : vertices_(s.vertex_matrix()) {
    const std::size_t n = s.dim();
    if (rpar.dim() != n) throw DimensionError("oracle: dimension mismatch");
    validate_probabilities(rpar, n);
    if (rpar.weights().minCoeff() <= 0.0) {
      throw ContractError("oracle requires r_par strictly inside the simplex");
    }
    const RealVector rpar_point = vertices_ * rpar.weights();
    const auto rows = vertices_.rows() + 1;
    const auto cols = static_cast<Eigen::Index>(n);
    for (std::size_t i = 0; i < n; ++i) {
      RealMatrix a(rows, cols);
      a.topRows(vertices_.rows()) = vertices_;
      a.block(0, static_cast<Eigen::Index>(i), vertices_.rows(), 1) = rpar_point;
      a.row(rows - 1).setOnes();
      solvers_.emplace_back(a);
    }
    rhs_.resize(rows);
    rhs_(rows - 1) = 1.0;
  }

  std::size_t size() const { return solvers_.size(); }

  /// Smallest affine coefficient of lambda over each region's vertex set.
  void min_coefficients(const RealVector& lambda, std::vector<double>& out) {
    rhs_.head(vertices_.rows()) = vertices_ * lambda;
    for (std::size_t i = 0; i < solvers_.size(); ++i) {
      out[i] = solvers_[i].solve(rhs_).minCoeff();
    }
  }

 private:
  RealMatrix vertices_;
  std::vector<Eigen::ColPivHouseholderQR<RealMatrix>> solvers_;
  RealVector rhs_;
};

struct OracleVerdict {
  std::size_t region;
  bool boundary;
};

OracleVerdict oracle_classify(const std::vector<double>& min_coef) {
  std::size_t claims = 0;
  std::size_t strict = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < min_coef.size(); ++i) {
    if (min_coef[i] >= -kOracleTolerance) ++claims;
    if (min_coef[i] > kOracleTolerance) ++strict;
    if (min_coef[i] > min_coef[best]) best = i;
  }
  if (claims == 0) {
    throw OracleInconsistency("sample is claimed by no sub-region");
  }
  if (strict > 1) {
    throw OracleInconsistency("sample lies strictly inside two sub-regions");
  }
  return {best, claims > 1};
}

}  // namespace

OracleReport geometric_hit_count_oracle(const MeasurementSimplex& s,
                                        const Barycentric& rpar,
                                        std::uint64_t n_samples, Rng& rng) {
  RegionMembership regions(s, rpar);
  const std::size_t n = s.dim();
  OracleReport report;
  report.n_samples = n_samples;
  report.hits.assign(n, 0);
  std::vector<double> min_coef(n);
  RealVector lambda(static_cast<Eigen::Index>(n));
  for (std::uint64_t t = 0; t < n_samples; ++t) {
    fill_lambda(lambda.data(), n, rng);
    regions.min_coefficients(lambda, min_coef);
    const auto verdict = oracle_classify(min_coef);
    ++report.hits[verdict.region];
    if (verdict.boundary) ++report.boundary_samples;
  }
  report.fractions.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.fractions[i] = n_samples == 0
                              ? 0.0
                              : static_cast<double>(report.hits[i]) /
                                    static_cast<double>(n_samples);
  }
  return report;
}

OracleComparison compare_oracle_to_argmin(const MeasurementSimplex& s,
                                          const Barycentric& rpar,
                                          std::uint64_t n_samples, Rng& rng) {
  RegionMembership regions(s, rpar);
  const std::size_t n = s.dim();
  OracleComparison cmp;
  cmp.n_samples = n_samples;
  std::vector<double> min_coef(n);
  RealVector lambda(static_cast<Eigen::Index>(n));
  for (std::uint64_t t = 0; t < n_samples; ++t) {
    fill_lambda(lambda.data(), n, rng);
    regions.min_coefficients(lambda, min_coef);
    const auto verdict = oracle_classify(min_coef);
    const auto pick = argmin_ratio(lambda.data(), rpar.weights().data(), n);
    const bool tie = pick.second - pick.best <= kOracleTolerance;
    if (tie) ++cmp.ties;
    if (verdict.region == pick.index) {
      ++cmp.agreements;
    } else if (!tie) {
      ++cmp.disagreements;
    }
  }
  return cmp;
}

}  // namespace ebr
