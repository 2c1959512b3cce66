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

#include "ebr/bloch.hpp"
#include "ebr/generators.hpp"
#include "ebr/linalg.hpp"

namespace ebr {

inline constexpr double kOrthonormalityTolerance = 1e-12;
inline constexpr double kInsideTolerance = 1e-12;
inline constexpr double kAffineHullTolerance = 1e-9;

/// N orthonormal kets a_1..a_N.
class MeasurementBasis {
 public:
  /// Throws BasisError unless |<a_i|a_j> - delta_ij| <= 1e-12 for all i, j.
  explicit MeasurementBasis(std::vector<ComplexVector> kets);

  static MeasurementBasis canonical(std::size_t n);

  std::size_t dim() const { return kets_.size(); }
  const ComplexVector& ket(std::size_t i) const { return kets_[i]; }
  const std::vector<ComplexVector>& kets() const { return kets_; }

  /// |a_i><a_i|
  ComplexMatrix projector(std::size_t i) const;

 private:
  std::vector<ComplexVector> kets_;
};

/// Weights of a point against the vertices of a simplex. Weights always sum
/// to one when produced by this library; they may be negative for points
/// outside the simplex.
class Barycentric {
 public:
  explicit Barycentric(RealVector weights) : weights_(std::move(weights)) {}

  std::size_t dim() const { return static_cast<std::size_t>(weights_.size()); }
  const RealVector& weights() const { return weights_; }
  double operator[](std::size_t i) const {
    return weights_(static_cast<Eigen::Index>(i));
  }
  double sum() const { return weights_.sum(); }

  /// All weights >= -tol.
  bool is_inside(double tol = kInsideTolerance) const {
    return weights_.size() > 0 && weights_.minCoeff() >= -tol;
  }

 private:
  RealVector weights_;
};

/// The (N-1)-simplex spanned by the Bloch vectors n_i of the basis
/// projectors, together with an orthonormal frame of its affine hull.
///
/// Frame columns come from Gram-Schmidt on the edges n_i - n_N, i = 1..N-1,
/// in that order.
class MeasurementSimplex {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<BlochVector>& vertices() const { return vertices_; }
  const BlochVector& vertex(std::size_t i) const { return vertices_[i]; }
  const BlochVector& centroid() const { return centroid_; }
  /// (N^2-1) x (N-1), orthonormal columns.
  const RealMatrix& frame() const { return frame_; }
  /// Lebesgue measure of the simplex in the embedding's Euclidean metric.
  double total_measure() const { return total_measure_; }

  /// Vertices as columns, (N^2-1) x N.
  RealMatrix vertex_matrix() const;

 private:
  friend MeasurementSimplex basis_to_simplex(const MeasurementBasis&,
                                             const GeneratorSet&);
  MeasurementSimplex() = default;

  std::size_t dim_ = 0;
  std::vector<BlochVector> vertices_;
  BlochVector centroid_{2, RealVector::Zero(3)};
  RealMatrix frame_;
  // Edges n_i - n_N in frame coordinates, LU-factorized for barycentric
  // solves.
  Eigen::PartialPivLU<RealMatrix> edge_solver_;
  double total_measure_ = 0.0;

  friend Barycentric barycentric_of(const BlochVector&,
                                    const MeasurementSimplex&);
};

/// Volume of the k-simplex whose edge vectors (from a common apex) are the k
/// columns of `edges`: sqrt(det(E^T E))/k!.
double simplex_measure(const RealMatrix& edges);

MeasurementSimplex basis_to_simplex(const MeasurementBasis& b,
                                    const GeneratorSet& g);

/// Orthogonal projection of r onto the affine hull of the simplex. Throws
/// GeometryError if the projection of r falls outside the closed simplex,
/// which cannot happen for a valid state.
BlochVector project_onto_simplex(const BlochVector& r,
                                 const MeasurementSimplex& s);

/// Throws GeometryError if the point is further than 1e-9 from the affine
/// hull.
Barycentric barycentric_of(const BlochVector& point, const MeasurementSimplex& s);

/// p_i = Tr(d |a_i><a_i|).
Barycentric born_probabilities(const DensityMatrix& d, const MeasurementBasis& b);

/// mu(A_i) for the sub-simplexes A_i = conv({n_j : j != i} u {rpar}). Throws
/// GeometryError if rpar lies outside the simplex.
std::vector<double> subregion_measures(const BlochVector& rpar,
                                       const MeasurementSimplex& s);

}  // namespace ebr
