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

#include "ebr/random_states.hpp"

#include <random>

#include "ebr/error.hpp"

namespace ebr {

namespace {

ComplexVector gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = normal(rng.engine());
    const double im = normal(rng.engine());
    v(k) = complex(re, im);
  }
  return v;
}

}  // namespace

Ket random_ket(std::size_t n, Rng& rng) {
  if (n < 2) throw DimensionError("random_ket: n must be >= 2");
  ComplexVector v = gaussian_vector(n, rng);
  v.normalize();
  return Ket(std::move(v));
}

DensityMatrix random_mixture(std::size_t n, Rng& rng) {
  if (n < 2) throw DimensionError("random_mixture: n must be >= 2");
  std::uniform_int_distribution<std::size_t> rank_dist(1, n);
  const std::size_t rank = rank_dist(rng.engine());
  std::vector<double> w(rank);
  double total = 0.0;
  for (auto& x : w) {
    x = rng.exponential();
    total += x;
  }
  const auto dim = static_cast<Eigen::Index>(n);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < rank; ++k) {
    m += (w[k] / total) * ket_to_density(random_ket(n, rng)).matrix();
  }
  // Restore exact Hermitian symmetry lost to rounding in the sum.
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m));
}

std::vector<ComplexVector> random_orthonormal_kets(std::size_t n, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(n);
  ComplexMatrix z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) z.col(c) = gaussian_vector(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  std::vector<ComplexVector> kets;
  kets.reserve(n);
  for (Eigen::Index c = 0; c < dim; ++c) kets.push_back(q.col(c));
  return kets;
}

}  // namespace ebr
