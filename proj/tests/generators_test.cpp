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

#include <cmath>

#include "gtest/gtest.h"

#include "ebr/error.hpp"

using namespace ebr;

namespace {

const complex I(0.0, 1.0);

ComplexMatrix mat2(complex a, complex b, complex c, complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(Generators, RejectsSmallDimension) {
  EXPECT_THROW(build_generators(0), DimensionError);
  EXPECT_THROW(build_generators(1), DimensionError);
}

TEST(Generators, PauliForQubit) {
  const auto g = build_generators(2);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_TRUE(g[0].isApprox(mat2(0, 1, 1, 0)));
  EXPECT_TRUE(g[1].isApprox(mat2(0, -I, I, 0)));
  EXPECT_TRUE(g[2].isApprox(mat2(1, 0, 0, -1)));
}

TEST(Generators, GellMannForQutrit) {
  // Textbook lambda_1..lambda_8, placed at the documented indices.
  const double s3 = 1.0 / std::sqrt(3.0);
  std::vector<ComplexMatrix> lam(8, ComplexMatrix::Zero(3, 3));
  lam[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  lam[1] << 0, -I, 0, I, 0, 0, 0, 0, 0;
  lam[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
  lam[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  lam[4] << 0, 0, -I, 0, 0, 0, I, 0, 0;
  lam[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  lam[6] << 0, 0, 0, 0, 0, -I, 0, I, 0;
  lam[7] << s3, 0, 0, 0, s3, 0, 0, 0, -2 * s3;
  const std::size_t index_of[8] = {0, 3, 6, 1, 4, 2, 5, 7};

  const auto g = build_generators(3);
  ASSERT_EQ(g.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_TRUE(g[index_of[k]].isApprox(lam[k], 1e-14)) << "lambda_" << k + 1;
  }
}

TEST(Generators, InvariantsHoldUpToEight) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = build_generators(n);
    EXPECT_EQ(g.size(), n * n - 1);
    const auto report = verify_generator_set(g);
    EXPECT_TRUE(report.passed()) << "n=" << n;
    EXPECT_LE(report.hermiticity.max_residual, 1e-12);
    EXPECT_LE(report.trace.max_residual, 1e-12);
    EXPECT_LE(report.orthonormality.max_residual, 1e-12);
  }
}

TEST(Generators, FamilyCounts) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto c = generator_family_counts(n);
    EXPECT_EQ(c.symmetric, n * (n - 1) / 2);
    EXPECT_EQ(c.antisymmetric, n * (n - 1) / 2);
    EXPECT_EQ(c.diagonal, n - 1);
    EXPECT_EQ(c.symmetric + c.antisymmetric + c.diagonal, n * n - 1);

    // Families are real-symmetric, imaginary-antisymmetric and diagonal, in
    // that order.
    const auto g = build_generators(n);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < c.symmetric; ++k, ++idx) {
      EXPECT_TRUE(g[idx].imag().isZero());
      EXPECT_TRUE(g[idx].diagonal().isZero());
    }
    for (std::size_t k = 0; k < c.antisymmetric; ++k, ++idx) {
      EXPECT_TRUE(g[idx].real().isZero());
    }
    for (std::size_t k = 0; k < c.diagonal; ++k, ++idx) {
      ComplexMatrix off = g[idx];
      off.diagonal().setZero();
      EXPECT_TRUE(off.isZero());
    }
  }
}

TEST(Generators, CasimirIdentity) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = build_generators(n);
    const auto dim = static_cast<Eigen::Index>(n);
    const double c = 2.0 * static_cast<double>(n * n - 1) / static_cast<double>(n);
    const ComplexMatrix diff = casimir_sum(g) - c * ComplexMatrix::Identity(dim, dim);
    EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
  }
}

TEST(Generators, ScaledMatrixFailsOrthonormality) {
  auto mats = build_generators(3).matrices();
  mats[4] *= 2.0;
  const auto report = verify_generator_set(GeneratorSet(3, mats));
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(report.hermiticity.passed);
  EXPECT_TRUE(report.trace.passed);
  // Tr((2L)(2L)) = 8 against the expected 2.
  EXPECT_NEAR(report.orthonormality.max_residual, 6.0, 1e-12);
}

TEST(Generators, NonHermitianPerturbationDetected) {
  auto mats = build_generators(3).matrices();
  mats[0](0, 1) += complex(0.0, 1e-6);
  mats[0](1, 0) += complex(0.0, 1e-6);
  const auto report = verify_generator_set(GeneratorSet(3, mats));
  EXPECT_FALSE(report.hermiticity.passed);
  EXPECT_NEAR(report.hermiticity.max_residual, 2e-6, 1e-15);
}

TEST(Generators, ConstructorChecksShape) {
  auto mats = build_generators(3).matrices();
  mats.pop_back();
  EXPECT_THROW(GeneratorSet(3, mats), DimensionError);
}
