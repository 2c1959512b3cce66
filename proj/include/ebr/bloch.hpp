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

#include "ebr/generators.hpp"
#include "ebr/linalg.hpp"

namespace ebr {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-12;
// Eigen-solvers leave small negative residuals on boundary states.
inline constexpr double kEigenvalueTolerance = 1e-10;
inline constexpr double kPurityTolerance = 1e-10;

/// Unit-normalized state vector. Construction never renormalizes.
class Ket {
 public:
  /// Throws NormalizationError if |sum |psi_k|^2 - 1| > kNormTolerance, and
  /// DimensionError for fewer than two amplitudes.
  explicit Ket(ComplexVector amplitudes);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// N x N complex matrix intended to be a quantum state.
///
/// The plain constructor only checks squareness: matrices reconstructed from
/// arbitrary Bloch vectors may lie outside the state region and are still
/// representable. Use checked() when the input must be a valid state.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix entries);

  /// Throws ContractError unless the matrix is Hermitian, has unit trace and
  /// is positive semidefinite (to the tolerances above).
  static DensityMatrix checked(ComplexMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const ComplexMatrix& matrix() const { return entries_; }

 private:
  ComplexMatrix entries_;
};

struct StateDiagnostics {
  double hermiticity_residual;
  double trace_residual;
  double min_eigenvalue;

  bool valid() const {
    return hermiticity_residual <= kHermiticityTolerance &&
           trace_residual <= kTraceTolerance &&
           min_eigenvalue >= -kEigenvalueTolerance;
  }
};

StateDiagnostics diagnose(const DensityMatrix& d);

/// Real coordinates in the generalized Bloch ball of dimension N^2-1.
class BlochVector {
 public:
  BlochVector(std::size_t dim, RealVector coords);

  std::size_t dim() const { return dim_; }
  const RealVector& coords() const { return coords_; }
  double norm() const { return coords_.norm(); }

 private:
  std::size_t dim_;
  RealVector coords_;
};

/// sqrt(N(N-1)/2)
double bloch_scale(std::size_t n);

/// |psi><psi|
DensityMatrix ket_to_density(const Ket& psi);

/// r_j = N/(2 c_N) Tr(d L_j). Throws DimensionError on mismatch and
/// ContractError if a coordinate has an imaginary part above 1e-12.
BlochVector to_bloch(const DensityMatrix& d, const GeneratorSet& g);

/// D(r) = (I + c_N r.L)/N. No validity check.
DensityMatrix from_bloch(const BlochVector& r, const GeneratorSet& g);

struct StateValidity {
  bool valid;
  double min_eigenvalue;
};

/// Whether from_bloch(r) is positive semidefinite.
StateValidity is_valid_state(const BlochVector& r, const GeneratorSet& g);

/// Tr(d^2)
double purity(const DensityMatrix& d);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace ebr
