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

#include "ebr/json_io.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "ebr/error.hpp"
#include "ebr/random_states.hpp"

using namespace ebr;
using ebr::io::json;

TEST(JsonIo, Round12) {
  EXPECT_EQ(io::round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(io::round12(3.0 * std::sqrt(3.0) / 4.0), 1.29903810568);
  EXPECT_EQ(io::round12(-1e-17), -1e-17);
  EXPECT_EQ(std::signbit(io::round12(-0.0)), false);
}

TEST(JsonIo, GeneratorDumpRoundTrips) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = build_generators(n);
    const json j = io::to_json(g);
    EXPECT_EQ(j["dim"], n);
    EXPECT_EQ(j["matrices"].size(), n * n - 1);
    const auto back = io::generators_from_json(json::parse(j.dump()));
    ASSERT_EQ(back.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      // Entries are written with 12 significant digits.
      EXPECT_LE((back[i] - g[i]).cwiseAbs().maxCoeff(), 1e-11);
    }
  }
  const json pauli_y = io::to_json(build_generators(2))["matrices"][1];
  EXPECT_EQ(pauli_y.dump(), "[[[0.0,0.0],[0.0,-1.0]],[[0.0,1.0],[0.0,0.0]]]");
}

TEST(JsonIo, StateFromKetAndDensity) {
  const auto d = io::state_from_json(json::parse(R"({"ket": [[1,0],[0,0]]})"));
  EXPECT_EQ(d.dim(), 2u);
  EXPECT_EQ(d.matrix()(0, 0), complex(1.0, 0.0));

  const auto m = io::state_from_json(
      json::parse(R"({"density": [[[0.5,0],[0,0.5]],[[0,-0.5],[0.5,0]]]})"));
  EXPECT_NEAR(purity(m), 1.0, 1e-15);
}

TEST(JsonIo, StateErrorsNameTheField) {
  try {
    io::state_from_json(json::parse(R"({"ket": [[0.9486832980505138,0],[0,0]]})"));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "state.ket");
  }
  try {
    io::state_from_json(json::parse(R"({"density": [[[1,0],[0,0]],[[0,0],[1,0]]]})"));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "state.density");
  }
  EXPECT_THROW(io::state_from_json(json::parse(R"({"ket": [[1,0]], "density": []})")),
               ValidationError);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"ket": [[1,0,3],[0,0]]})")),
               ValidationError);
}

TEST(JsonIo, TrialReportSchema) {
  const auto b = MeasurementBasis::canonical(2);
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v(2);
  v << h, h;
  const auto r = run_trials(ket_to_density(Ket(v)), b, 1000, {1, 0});
  const json j = io::to_json(r);
  for (const char* key : {"n_trials", "exact_probs", "counts", "empirical_freqs",
                          "chi_square", "max_abs_deviation"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["exact_probs"][0], 0.5);
  EXPECT_EQ(j["n_trials"], 1000);

  const std::string csv = io::to_csv(r);
  EXPECT_EQ(csv.rfind("outcome,exact_prob,count,empirical_freq,abs_deviation\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("\n1,0.5,"), std::string::npos);
}

TEST(JsonIo, GeometryAndTrace) {
  const auto g = build_generators(3);
  const auto b = MeasurementBasis::canonical(3);
  const json geo = io::to_json(basis_to_simplex(b, g));
  EXPECT_EQ(geo["vertices"].size(), 3u);
  EXPECT_EQ(geo["vertices"][0].size(), 8u);
  EXPECT_EQ(geo["total_measure"], 1.29903810568);

  ComplexVector v(3);
  v << std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2);
  const auto t = run_measurement(ket_to_density(Ket(v)), b, g, Partition(3, {{0}, {1, 2}}),
                                 {3, 0});
  const json jt = io::to_json(t);
  EXPECT_EQ(jt["stages"].size(), 4u);
  EXPECT_EQ(jt["stages"][3]["label"], "purified");
  EXPECT_TRUE(jt.contains("class"));
  EXPECT_GE(jt["outcome"].get<int>(), 1);
}
