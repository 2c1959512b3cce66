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

#include <string>

#include "json.hpp"

#include "ebr/bloch.hpp"
#include "ebr/collapse.hpp"
#include "ebr/generators.hpp"
#include "ebr/sampler.hpp"
#include "ebr/simplex.hpp"

namespace ebr::io {

using json = nlohmann::json;

/// x rounded to 12 significant digits; non-finite values pass through.
double round12(double x);

/// [[ [re,im], ... ], ...]
json matrix_to_json(const ComplexMatrix& m);
/// Inverse of matrix_to_json. `field` is used in ValidationError messages.
ComplexMatrix matrix_from_json(const json& j, const std::string& field);

/// [[re,im], ...]
json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j, const std::string& field);

json real_vector_to_json(const RealVector& v);

/// {"dim": N, "matrices": [...]}
json to_json(const GeneratorSet& g);
GeneratorSet generators_from_json(const json& j);

/// {"ket": [[re,im],...]} or {"density": [[[re,im],...],...]}. The state is
/// validated (normalization, Hermiticity, trace, positivity); errors name the
/// field under `field` (e.g. "state.ket").
DensityMatrix state_from_json(const json& j, const std::string& field = "state");

/// {"dim", "vertices", "centroid", "total_measure"}
json to_json(const MeasurementSimplex& s);

/// {"n_trials", "exact_probs", "counts", "empirical_freqs", "chi_square",
///  "max_abs_deviation"}
json to_json(const TrialReport& r);

/// Header plus one row per outcome:
/// outcome,exact_prob,count,empirical_freq,abs_deviation
std::string to_csv(const TrialReport& r);

/// {"outcome", "class" (degenerate only), "lambda", "stages": [{"label",
///  "bloch", "density"}, ...]}. Outcome and class are one-based.
json to_json(const ProcessTrace& t);

json to_json(const OracleComparison& c);

}  // namespace ebr::io
