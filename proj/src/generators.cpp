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

#include "ebr/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ebr/error.hpp"

namespace ebr {

GeneratorSet::GeneratorSet(std::size_t dim, std::vector<ComplexMatrix> matrices)
    : dim_(dim), matrices_(std::move(matrices)) {
  if (dim_ < 2) {
    throw DimensionError("generator set dimension must be >= 2, got " +
                         std::to_string(dim_));
  }
  if (matrices_.size() != dim_ * dim_ - 1) {
    throw DimensionError("generator set of dimension " + std::to_string(dim_) +
                         " needs " + std::to_string(dim_ * dim_ - 1) +
                         " matrices, got " + std::to_string(matrices_.size()));
  }
  for (const auto& m : matrices_) {
    if (static_cast<std::size_t>(m.rows()) != dim_ ||
        static_cast<std::size_t>(m.cols()) != dim_) {
      throw DimensionError("generator matrix has wrong shape");
    }
  }
}

GeneratorFamilyCounts generator_family_counts(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  return {pairs, pairs, n - 1};
}

GeneratorSet build_generators(std::size_t n) {
  if (n < 2) {
    throw DimensionError("build_generators: n must be >= 2, got " +
                         std::to_string(n));
  }
  const auto dim = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> out;
  out.reserve(n * n - 1);

  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = j + 1; k < dim; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      out.push_back(std::move(m));
    }
  }
  const complex i_unit(0.0, 1.0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = j + 1; k < dim; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      m(j, k) = -i_unit;
      m(k, j) = i_unit;
      out.push_back(std::move(m));
    }
  }
  for (Eigen::Index k = 1; k < dim; ++k) {
    const double scale = std::sqrt(2.0 / static_cast<double>(k * (k + 1)));
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index l = 0; l < k; ++l) m(l, l) = scale;
    m(k, k) = -scale * static_cast<double>(k);
    out.push_back(std::move(m));
  }
  return GeneratorSet(n, std::move(out));
}

GeneratorReport verify_generator_set(const GeneratorSet& g, double tolerance) {
  double herm = 0.0;
  double tr = 0.0;
  double ortho = 0.0;
  const std::size_t count = g.size();
  for (std::size_t i = 0; i < count; ++i) {
    herm = std::max(herm, hermiticity_residual(g[i]));
    tr = std::max(tr, std::abs(g[i].trace()));
    for (std::size_t j = i; j < count; ++j) {
      // Tr(AB) = sum_kl A_kl B_lk
      const complex t = (g[i].transpose().cwiseProduct(g[j])).sum();
      const double expected = (i == j) ? 2.0 : 0.0;
      ortho = std::max(ortho, std::abs(t - expected));
    }
  }
  return {
      {"hermiticity", herm, herm <= tolerance},
      {"trace", tr, tr <= tolerance},
      {"orthonormality", ortho, ortho <= tolerance},
  };
}

ComplexMatrix casimir_sum(const GeneratorSet& g) {
  const auto dim = static_cast<Eigen::Index>(g.dim());
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& m : g.matrices()) sum += m * m;
  return sum;
}

}  // namespace ebr
