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

#include "gtest/gtest.h"

#include "ebr/error.hpp"
#include "ebr/random_states.hpp"

using namespace ebr;

namespace {

// Volume from pairwise distances alone (Cayley-Menger), independent of the
// QR route used by simplex_measure.
double cayley_menger_measure(const std::vector<RealVector>& pts) {
  const auto m = static_cast<Eigen::Index>(pts.size());
  const auto k = m - 1;
  RealMatrix cm = RealMatrix::Ones(m + 1, m + 1);
  cm(0, 0) = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      cm(i + 1, j + 1) = (pts[static_cast<std::size_t>(i)] -
                          pts[static_cast<std::size_t>(j)])
                             .squaredNorm();
    }
  }
  double fact = 1.0;
  for (Eigen::Index i = 2; i <= k; ++i) fact *= static_cast<double>(i);
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
  const double v2 = sign * cm.determinant() / (std::pow(2.0, k) * fact * fact);
  return std::sqrt(std::max(0.0, v2));
}

ComplexVector vec(std::initializer_list<complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (auto a : amps) v(i++) = a;
  return v;
}

DensityMatrix pure(const ComplexVector& v) { return ket_to_density(Ket(v)); }

const ComplexVector kPsi532 = vec({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)});

}  // namespace

TEST(MeasurementBasis, RejectsNonOrthonormal) {
  EXPECT_THROW(MeasurementBasis({vec({1, 0}), vec({1, 0})}), BasisError);
  EXPECT_THROW(MeasurementBasis({vec({1, 0}), vec({0, 2})}), BasisError);
  EXPECT_THROW(MeasurementBasis({vec({1, 0}), vec({0, 1, 0})}), DimensionError);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NO_THROW(MeasurementBasis({vec({h, h}), vec({h, -h})}));
}

TEST(Simplex, GeometryForDimensionsTwoToSix) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = build_generators(n);
    const auto s = basis_to_simplex(MeasurementBasis::canonical(n), g);
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(s.vertex(i).norm(), 1.0, 1e-10);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_NEAR(s.vertex(i).coords().dot(s.vertex(j).coords()), -1.0 / (nn - 1.0),
                    1e-10);
        EXPECT_NEAR((s.vertex(i).coords() - s.vertex(j).coords()).norm(),
                    std::sqrt(2.0 * nn / (nn - 1.0)), 1e-10);
      }
    }
    // Regular k-simplex with edge a: a^k/k! sqrt((k+1)/2^k).
    const double k = nn - 1.0;
    const double a = std::sqrt(2.0 * nn / (nn - 1.0));
    EXPECT_NEAR(s.total_measure(),
                std::pow(a, k) / std::tgamma(k + 1.0) * std::sqrt((k + 1.0) / std::pow(2.0, k)),
                1e-12);
    std::vector<RealVector> pts;
    for (const auto& v : s.vertices()) pts.push_back(v.coords());
    EXPECT_NEAR(s.total_measure(), cayley_menger_measure(pts), 1e-10);

    const RealMatrix ftf = s.frame().transpose() * s.frame();
    EXPECT_LE((ftf - RealMatrix::Identity(ftf.rows(), ftf.cols())).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Simplex, QutritTriangleArea) {
  const auto s = basis_to_simplex(MeasurementBasis::canonical(3), build_generators(3));
  EXPECT_NEAR(s.total_measure(), 3.0 * std::sqrt(3.0) / 4.0, 1e-10);
}

TEST(Simplex, QubitSegment) {
  const auto s = basis_to_simplex(MeasurementBasis::canonical(2), build_generators(2));
  EXPECT_NEAR(s.total_measure(), 2.0, 1e-12);
  EXPECT_NEAR(s.vertex(0).coords().dot(s.vertex(1).coords()), -1.0, 1e-12);
}

TEST(Simplex, RandomBasisKeepsGeometry) {
  Rng rng({5, 0});
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto s = basis_to_simplex(MeasurementBasis(random_orthonormal_kets(n, rng)),
                                    build_generators(n));
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        EXPECT_NEAR(s.vertex(i).coords().dot(s.vertex(j).coords()), -1.0 / (nn - 1.0),
                    1e-10);
      }
    }
  }
}

TEST(Projection, Examples) {
  const auto g2 = build_generators(2);
  const auto s2 = basis_to_simplex(MeasurementBasis::canonical(2), g2);
  const double h = 1.0 / std::sqrt(2.0);
  const auto rpar = project_onto_simplex(to_bloch(pure(vec({h, h})), g2), s2);
  EXPECT_LE(rpar.coords().norm(), 1e-12);

  const auto g3 = build_generators(3);
  const auto s3 = basis_to_simplex(MeasurementBasis::canonical(3), g3);
  // Idempotent on simplex points.
  const auto c = project_onto_simplex(s3.centroid(), s3);
  EXPECT_LE((c.coords() - s3.centroid().coords()).norm(), 1e-12);
  const auto v = project_onto_simplex(s3.vertex(1), s3);
  EXPECT_LE((v.coords() - s3.vertex(1).coords()).norm(), 1e-12);

  const auto r = project_onto_simplex(to_bloch(pure(kPsi532), g3), s3);
  ComplexMatrix reduced = ComplexMatrix::Zero(3, 3);
  reduced.diagonal() << 0.5, 0.3, 0.2;
  const auto expected = to_bloch(DensityMatrix(reduced), g3);
  EXPECT_LE((r.coords() - expected.coords()).norm(), 1e-10);
  const auto w = barycentric_of(r, s3);
  EXPECT_NEAR(w[0], 0.5, 1e-12);
  EXPECT_NEAR(w[1], 0.3, 1e-12);
  EXPECT_NEAR(w[2], 0.2, 1e-12);
}

TEST(Projection, RejectsNonStatesProjectingOutside) {
  const auto g3 = build_generators(3);
  const auto s3 = basis_to_simplex(MeasurementBasis::canonical(3), g3);
  // -2 n_1 lies on the affine line through the centroid but outside the
  // triangle.
  EXPECT_THROW(project_onto_simplex(BlochVector(3, -2.0 * s3.vertex(0).coords()), s3),
               GeometryError);
}

TEST(Barycentric, VertexCentroidAndOffHull) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = build_generators(n);
    const auto s = basis_to_simplex(MeasurementBasis::canonical(n), g);
    const auto w = barycentric_of(s.vertex(1), s);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(w[i], i == 1 ? 1.0 : 0.0, 1e-12);
    const auto wc = barycentric_of(s.centroid(), s);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(wc[i], 1.0 / static_cast<double>(n), 1e-12);
    }
    EXPECT_TRUE(wc.is_inside());
    EXPECT_NEAR(wc.sum(), 1.0, 1e-12);
  }
  const auto g3 = build_generators(3);
  const auto s3 = basis_to_simplex(MeasurementBasis::canonical(3), g3);
  RealVector off = s3.centroid().coords();
  off(0) += 0.1;  // symmetric off-diagonal direction is orthogonal to the hull
  EXPECT_THROW(barycentric_of(BlochVector(3, off), s3), GeometryError);
  // On the hull but outside the triangle: negative weight.
  const auto w = barycentric_of(BlochVector(3, -s3.vertex(0).coords()), s3);
  EXPECT_FALSE(w.is_inside());
  EXPECT_NEAR(w[0], -1.0 / 3.0, 1e-12);
}

TEST(BornProbabilities, Examples) {
  const auto b3 = MeasurementBasis::canonical(3);
  const auto p1 = born_probabilities(pure(vec({1, 0, 0})), b3);
  EXPECT_EQ(p1[0], 1.0);
  EXPECT_EQ(p1[1], 0.0);
  const double t = 1.0 / std::sqrt(3.0);
  const auto pu = born_probabilities(pure(vec({t, t, t})), b3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(pu[i], 1.0 / 3.0, 1e-15);

  const double theta = M_PI / 3.0;
  const auto pq = born_probabilities(
      pure(vec({std::cos(theta / 2), std::sin(theta / 2)})), MeasurementBasis::canonical(2));
  EXPECT_NEAR(pq[0], 0.75, 1e-15);
  EXPECT_NEAR(pq[1], 0.25, 1e-15);

  // Cross-check against the measure-ratio route.
  const auto g2 = build_generators(2);
  const auto s2 = basis_to_simplex(MeasurementBasis::canonical(2), g2);
  const auto rpar = project_onto_simplex(
      to_bloch(pure(vec({std::cos(theta / 2), std::sin(theta / 2)})), g2), s2);
  const auto mu = subregion_measures(rpar, s2);
  EXPECT_NEAR(mu[0] / s2.total_measure(), 0.75, 1e-12);
  EXPECT_NEAR(mu[1] / s2.total_measure(), 0.25, 1e-12);

  EXPECT_THROW(born_probabilities(pure(vec({1, 0})), b3), DimensionError);
}

TEST(BornProbabilities, ArbitraryBasis) {
  // |+>, |-> basis: <+|0>^2 = 1/2.
  const double h = 1.0 / std::sqrt(2.0);
  const MeasurementBasis pm({vec({h, h}), vec({h, -h})});
  const auto p = born_probabilities(pure(vec({1, 0})), pm);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
}

TEST(SubregionMeasures, Examples) {
  const auto g3 = build_generators(3);
  const auto s3 = basis_to_simplex(MeasurementBasis::canonical(3), g3);
  const double total = 3.0 * std::sqrt(3.0) / 4.0;

  const auto mc = subregion_measures(s3.centroid(), s3);
  for (double m : mc) EXPECT_NEAR(m, total / 3.0, 1e-12);

  const auto mv = subregion_measures(s3.vertex(0), s3);
  EXPECT_NEAR(mv[0], total, 1e-12);
  EXPECT_NEAR(mv[1], 0.0, 1e-12);
  EXPECT_NEAR(mv[2], 0.0, 1e-12);

  const auto rpar = project_onto_simplex(to_bloch(pure(kPsi532), g3), s3);
  const auto m = subregion_measures(rpar, s3);
  const double weights[3] = {0.5, 0.3, 0.2};
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<RealVector> pts = {rpar.coords()};
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) pts.push_back(s3.vertex(j).coords());
    }
    const double heron = cayley_menger_measure(pts);
    EXPECT_NEAR(m[i], heron, 1e-12);
    EXPECT_NEAR(heron / total, weights[i], 1e-10);
    EXPECT_NEAR(m[i] / s3.total_measure(), weights[i], 1e-10);
  }

  EXPECT_THROW(subregion_measures(BlochVector(3, -s3.vertex(0).coords()), s3),
               GeometryError);
}

class SimplexProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SimplexProperties, ProjectionAndMeasureRatios) {
  const std::size_t n = GetParam();
  const auto g = build_generators(n);
  Rng rng({99, n});
  const MeasurementBasis basis(random_orthonormal_kets(n, rng));
  const auto s = basis_to_simplex(basis, g);
  for (int t = 0; t < 1000; ++t) {
    const DensityMatrix d = ket_to_density(random_ket(n, rng));
    const auto rpar = project_onto_simplex(to_bloch(d, g), s);
    const auto p = born_probabilities(d, basis);

    ComplexMatrix reduced = ComplexMatrix::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) reduced += p[j] * basis.projector(j);
    EXPECT_LE((to_bloch(DensityMatrix(reduced), g).coords() - rpar.coords()).norm(),
              1e-10);

    const auto w = barycentric_of(rpar, s);
    EXPECT_TRUE(w.is_inside());
    const auto mu = subregion_measures(rpar, s);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(mu[i] / s.total_measure(), p[i], 1e-9);
      EXPECT_NEAR(w[i], p[i], 1e-10);
      sum += mu[i];
    }
    EXPECT_NEAR(sum, s.total_measure(), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, SimplexProperties, ::testing::Values(2, 3, 4, 5, 6));
