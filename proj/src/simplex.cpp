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

#include "ebr/simplex.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ebr/error.hpp"

namespace ebr {

namespace {

// A valid state always projects into the closed simplex; anything beyond
// this is a geometry bug, not rounding.
constexpr double kProjectionInsideTolerance = 1e-10;

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

MeasurementBasis::MeasurementBasis(std::vector<ComplexVector> kets)
    : kets_(std::move(kets)) {
  const std::size_t n = kets_.size();
  if (n < 2) throw DimensionError("measurement basis needs at least two kets");
  for (const auto& k : kets_) {
    if (static_cast<std::size_t>(k.size()) != n) {
      throw DimensionError("basis ket length must equal the number of kets");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const complex ip = kets_[i].dot(kets_[j]);  // <a_i|a_j>
      const double expected = (i == j) ? 1.0 : 0.0;
      const double err = std::abs(ip - expected);
      if (!(err <= kOrthonormalityTolerance)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "basis is not orthonormal: |<a_" << i + 1 << "|a_" << j + 1
            << "> - " << expected << "| = " << err;
        throw BasisError(msg.str());
      }
    }
  }
}

MeasurementBasis MeasurementBasis::canonical(std::size_t n) {
  if (n < 2) throw DimensionError("measurement basis needs at least two kets");
  std::vector<ComplexVector> kets;
  kets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    kets.push_back(ComplexVector::Unit(static_cast<Eigen::Index>(n),
                                       static_cast<Eigen::Index>(i)));
  }
  return MeasurementBasis(std::move(kets));
}

ComplexMatrix MeasurementBasis::projector(std::size_t i) const {
  return kets_[i] * kets_[i].adjoint();
}

RealMatrix MeasurementSimplex::vertex_matrix() const {
  const auto rows = static_cast<Eigen::Index>(dim_ * dim_ - 1);
  RealMatrix v(rows, static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    v.col(static_cast<Eigen::Index>(i)) = vertices_[i].coords();
  }
  return v;
}

double simplex_measure(const RealMatrix& edges) {
  const auto k = static_cast<std::size_t>(edges.cols());
  if (k == 0) return 1.0;
  // sqrt(det(E^T E)) = |det R| for E = QR; avoids squaring the condition
  // number of nearly flat sub-simplexes.
  Eigen::HouseholderQR<RealMatrix> qr(edges);
  const RealMatrix& r = qr.matrixQR();
  double det = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    det *= std::abs(r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));
  }
  return det / factorial(k);
}

MeasurementSimplex basis_to_simplex(const MeasurementBasis& b,
                                    const GeneratorSet& g) {
  require_dim(b.dim(), g.dim(), "basis_to_simplex");
  const std::size_t n = b.dim();
  const auto rows = static_cast<Eigen::Index>(n * n - 1);
  const auto k = static_cast<Eigen::Index>(n - 1);

  MeasurementSimplex s;
  s.dim_ = n;
  s.vertices_.reserve(n);
  RealVector centroid = RealVector::Zero(rows);
  for (std::size_t i = 0; i < n; ++i) {
    s.vertices_.push_back(to_bloch(DensityMatrix(b.projector(i)), g));
    centroid += s.vertices_.back().coords();
  }
  s.centroid_ = BlochVector(n, centroid / static_cast<double>(n));

  const RealVector& apex = s.vertices_.back().coords();
  RealMatrix edges(rows, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    edges.col(i) = s.vertices_[static_cast<std::size_t>(i)].coords() - apex;
  }

  // Modified Gram-Schmidt, edge order preserved.
  s.frame_ = edges;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      s.frame_.col(i) -= s.frame_.col(j).dot(s.frame_.col(i)) * s.frame_.col(j);
    }
    const double len = s.frame_.col(i).norm();
    if (len < 1e-8) throw GeometryError("measurement simplex is degenerate");
    s.frame_.col(i) /= len;
  }

  s.edge_solver_.compute(s.frame_.transpose() * edges);
  s.total_measure_ = simplex_measure(edges);
  return s;
}

Barycentric barycentric_of(const BlochVector& point,
                           const MeasurementSimplex& s) {
  require_dim(point.dim(), s.dim(), "barycentric_of");
  const RealVector offset = point.coords() - s.vertices_.back().coords();
  const RealVector y = s.frame_.transpose() * offset;
  const double residual = (offset - s.frame_ * y).norm();
  if (!(residual <= kAffineHullTolerance)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "point is off the simplex affine hull (distance " << residual << ")";
    throw GeometryError(msg.str());
  }
  const RealVector c = s.edge_solver_.solve(y);
  RealVector w(static_cast<Eigen::Index>(s.dim()));
  w.head(c.size()) = c;
  w(c.size()) = 1.0 - c.sum();
  return Barycentric(std::move(w));
}

BlochVector project_onto_simplex(const BlochVector& r,
                                 const MeasurementSimplex& s) {
  require_dim(r.dim(), s.dim(), "project_onto_simplex");
  const RealVector& apex = s.vertex(s.dim() - 1).coords();
  const RealMatrix& f = s.frame();
  BlochVector out(r.dim(), apex + f * (f.transpose() * (r.coords() - apex)));
  const Barycentric w = barycentric_of(out, s);
  if (!w.is_inside(kProjectionInsideTolerance)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "projection lies outside the measurement simplex (min weight "
        << w.weights().minCoeff() << "); input is not a valid state";
    throw GeometryError(msg.str());
  }
  return out;
}

Barycentric born_probabilities(const DensityMatrix& d,
                               const MeasurementBasis& b) {
  require_dim(d.dim(), b.dim(), "born_probabilities");
  RealVector p(static_cast<Eigen::Index>(b.dim()));
  for (std::size_t i = 0; i < b.dim(); ++i) {
    // Tr(d |a><a|) = <a|d|a>
    const complex v = b.ket(i).dot(d.matrix() * b.ket(i));
    if (std::abs(v.imag()) > 1e-12) {
      throw ContractError("born_probabilities: <a|d|a> is not real");
    }
    p(static_cast<Eigen::Index>(i)) = v.real();
  }
  return Barycentric(std::move(p));
}

std::vector<double> subregion_measures(const BlochVector& rpar,
                                       const MeasurementSimplex& s) {
  const Barycentric w = barycentric_of(rpar, s);
  if (!w.is_inside()) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "subregion_measures: point is outside the simplex (min weight "
        << w.weights().minCoeff() << ")";
    throw GeometryError(msg.str());
  }
  const std::size_t n = s.dim();
  const auto rows = static_cast<Eigen::Index>(n * n - 1);
  std::vector<double> out(n);
  RealMatrix edges(rows, static_cast<Eigen::Index>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      edges.col(col++) = s.vertex(j).coords() - rpar.coords();
    }
    out[i] = simplex_measure(edges);
  }
  return out;
}

}  // namespace ebr
