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

#include "ebr/bloch.hpp"
#include "ebr/rng.hpp"

namespace ebr {

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
Ket random_ket(std::size_t n, Rng& rng);

/// Convex combination of between 1 and n random ket projectors with
/// uniformly distributed (Dirichlet(1,...,1)) weights.
DensityMatrix random_mixture(std::size_t n, Rng& rng);

/// Random basis: the columns of a Haar-random unitary.
std::vector<ComplexVector> random_orthonormal_kets(std::size_t n, Rng& rng);

}  // namespace ebr
