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

#include "ebr/bloch.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ebr/error.hpp"

namespace ebr {

Ket::Ket(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw DimensionError("ket needs at least two amplitudes");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "ket is not normalized: sum |psi_k|^2 = " << norm2;
    throw NormalizationError(msg.str());
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 2) {
    throw DimensionError("density matrix must be square with dimension >= 2");
  }
}

double min_eigenvalue(const ComplexMatrix& m) {
  // Symmetrize so that rounding asymmetry does not leak into the solver.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

StateDiagnostics diagnose(const DensityMatrix& d) {
  const auto& m = d.matrix();
  return {hermiticity_residual(m), std::abs(m.trace() - 1.0), min_eigenvalue(m)};
}

DensityMatrix DensityMatrix::checked(ComplexMatrix entries) {
  DensityMatrix d(std::move(entries));
  const auto diag = diagnose(d);
  if (!diag.valid()) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "not a valid density matrix (hermiticity residual "
        << diag.hermiticity_residual << ", trace residual "
        << diag.trace_residual << ", min eigenvalue " << diag.min_eigenvalue
        << ")";
    throw ContractError(msg.str());
  }
  return d;
}

BlochVector::BlochVector(std::size_t dim, RealVector coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 2 || static_cast<std::size_t>(coords_.size()) != dim_ * dim_ - 1) {
    throw DimensionError("Bloch vector for dimension " + std::to_string(dim_) +
                         " needs " + std::to_string(dim_ * dim_ - 1) +
                         " coordinates");
  }
}

double bloch_scale(std::size_t n) {
  const auto x = static_cast<double>(n);
  return std::sqrt(x * (x - 1.0) / 2.0);
}

DensityMatrix ket_to_density(const Ket& psi) {
  const auto& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

BlochVector to_bloch(const DensityMatrix& d, const GeneratorSet& g) {
  if (d.dim() != g.dim()) {
    throw DimensionError("to_bloch: density matrix has dimension " +
                         std::to_string(d.dim()) + ", generators " +
                         std::to_string(g.dim()));
  }
  const auto n = d.dim();
  const double factor = static_cast<double>(n) / (2.0 * bloch_scale(n));
  const ComplexMatrix dt = d.matrix().transpose();
  RealVector r(static_cast<Eigen::Index>(g.size()));
  for (std::size_t j = 0; j < g.size(); ++j) {
    const complex t = dt.cwiseProduct(g[j]).sum();
    if (std::abs(t.imag()) > 1e-12) {
      throw ContractError("to_bloch: Tr(d L_" + std::to_string(j) +
                          ") is not real; input is not Hermitian");
    }
    r(static_cast<Eigen::Index>(j)) = factor * t.real();
  }
  return BlochVector(n, std::move(r));
}

DensityMatrix from_bloch(const BlochVector& r, const GeneratorSet& g) {
  if (r.dim() != g.dim()) {
    throw DimensionError("from_bloch: dimension mismatch");
  }
  const auto n = static_cast<Eigen::Index>(r.dim());
  const double cn = bloch_scale(r.dim());
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (std::size_t j = 0; j < g.size(); ++j) {
    m += (cn * r.coords()(static_cast<Eigen::Index>(j))) * g[j];
  }
  m /= static_cast<double>(n);
  return DensityMatrix(std::move(m));
}

StateValidity is_valid_state(const BlochVector& r, const GeneratorSet& g) {
  const double lo = min_eigenvalue(from_bloch(r, g).matrix());
  return {lo >= -kEigenvalueTolerance, lo};
}

double purity(const DensityMatrix& d) {
  const auto& m = d.matrix();
  // Tr(d^2) = sum_kl d_kl d_lk = sum_kl |d_kl|^2 for Hermitian d.
  return (m.transpose().cwiseProduct(m)).sum().real();
}

}  // namespace ebr
