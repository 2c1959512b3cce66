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
#include <vector>

#include "ebr/linalg.hpp"

namespace ebr {

/// An ordered determination of the N^2-1 generators of SU(N), normalized so
/// that Tr(L_i L_j) = 2 delta_ij.
///
/// Sets produced by build_generators() use the generalized Gell-Mann
/// construction in this order:
///
///   1. symmetric   S_jk = |j><k| + |k><j|        for j < k, lexicographic
///   2. antisymmetric A_jk = -i|j><k| + i|k><j|   for j < k, lexicographic
///   3. diagonal    D_k = sqrt(2/(k(k+1))) diag(1,...,1,-k,0,...,0), k = 1..N-1
///
/// For N = 2 this is (sigma_x, sigma_y, sigma_z). For N = 3 the textbook
/// Gell-Mann numbering lambda_1..lambda_8 maps onto indices
///   lambda_1 -> 0, lambda_4 -> 1, lambda_6 -> 2,
///   lambda_2 -> 3, lambda_5 -> 4, lambda_7 -> 5,
///   lambda_3 -> 6, lambda_8 -> 7.
///
/// The constructor does not enforce the algebraic invariants so that broken
/// sets can be inspected with verify_generator_set(). It only checks that the
/// count and shapes are consistent with `dim`.
class GeneratorSet {
 public:
  GeneratorSet(std::size_t dim, std::vector<ComplexMatrix> matrices);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return matrices_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<ComplexMatrix>& matrices() const { return matrices_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> matrices_;
};

/// Generalized Gell-Mann matrices for dimension n. Throws DimensionError for
/// n < 2.
GeneratorSet build_generators(std::size_t n);

/// Number of generators in each family of the construction above.
struct GeneratorFamilyCounts {
  std::size_t symmetric;
  std::size_t antisymmetric;
  std::size_t diagonal;
};
GeneratorFamilyCounts generator_family_counts(std::size_t n);

struct InvariantCheck {
  const char* name;
  double max_residual;
  bool passed;
};

struct GeneratorReport {
  InvariantCheck hermiticity;
  InvariantCheck trace;
  InvariantCheck orthonormality;

  bool passed() const {
    return hermiticity.passed && trace.passed && orthonormality.passed;
  }
};

inline constexpr double kGeneratorTolerance = 1e-12;

GeneratorReport verify_generator_set(const GeneratorSet& g,
                                     double tolerance = kGeneratorTolerance);

/// sum_i L_i^2, which equals 2(N^2-1)/N times the identity for a valid set.
ComplexMatrix casimir_sum(const GeneratorSet& g);

}  // namespace ebr
