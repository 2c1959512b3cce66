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
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ebr/error.hpp"

namespace ebr::io {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back({round12(m(i, k).real()), round12(m(i, k).imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(field, "expected a complex number [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(field, "expected a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ValidationError(row_field, "expected " + std::to_string(n) +
                                           " entries (matrix must be square)");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  row_field + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back({round12(v(i).real()), round12(v(i).imag())});
  }
  return out;
}

ComplexVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(field, "expected a non-empty array of [re, im]");
  }
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        complex_from_json(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

json real_vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(round12(v(i)));
  return out;
}

json to_json(const GeneratorSet& g) {
  json mats = json::array();
  for (const auto& m : g.matrices()) mats.push_back(matrix_to_json(m));
  return {{"dim", g.dim()}, {"matrices", std::move(mats)}};
}

GeneratorSet generators_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned()) {
    throw ValidationError("dim", "expected a positive integer");
  }
  if (!j.contains("matrices") || !j["matrices"].is_array()) {
    throw ValidationError("matrices", "expected an array of matrices");
  }
  std::vector<ComplexMatrix> mats;
  for (std::size_t i = 0; i < j["matrices"].size(); ++i) {
    mats.push_back(matrix_from_json(j["matrices"][i],
                                    "matrices[" + std::to_string(i) + "]"));
  }
  try {
    return GeneratorSet(j["dim"].get<std::size_t>(), std::move(mats));
  } catch (const DimensionError& e) {
    throw ValidationError("matrices", e.what());
  }
}

DensityMatrix state_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) {
    throw ValidationError(field, "expected an object with \"ket\" or \"density\"");
  }
  const bool has_ket = j.contains("ket");
  const bool has_density = j.contains("density");
  if (has_ket == has_density) {
    throw ValidationError(field, "exactly one of \"ket\" or \"density\" is required");
  }
  if (has_ket) {
    const std::string f = field + ".ket";
    ComplexVector v = vector_from_json(j["ket"], f);
    try {
      return ket_to_density(Ket(std::move(v)));
    } catch (const Error& e) {
      throw ValidationError(f, e.what());
    }
  }
  const std::string f = field + ".density";
  ComplexMatrix m = matrix_from_json(j["density"], f);
  try {
    return DensityMatrix::checked(std::move(m));
  } catch (const Error& e) {
    throw ValidationError(f, e.what());
  }
}

json to_json(const MeasurementSimplex& s) {
  json vertices = json::array();
  for (const auto& v : s.vertices()) vertices.push_back(real_vector_to_json(v.coords()));
  return {{"dim", s.dim()},
          {"vertices", std::move(vertices)},
          {"centroid", real_vector_to_json(s.centroid().coords())},
          {"total_measure", round12(s.total_measure())}};
}

json to_json(const TrialReport& r) {
  json freqs = json::array();
  for (double f : r.empirical_freqs) freqs.push_back(round12(f));
  return {{"n_trials", r.n_trials},
          {"exact_probs", real_vector_to_json(r.exact_probs.weights())},
          {"counts", r.counts},
          {"empirical_freqs", std::move(freqs)},
          {"chi_square", round12(r.chi_square)},
          {"max_abs_deviation", round12(r.max_abs_deviation)}};
}

std::string to_csv(const TrialReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "outcome,exact_prob,count,empirical_freq,abs_deviation\n";
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    const double p = round12(r.exact_probs[i]);
    out << i + 1 << ',' << p << ',' << r.counts[i] << ','
        << round12(r.empirical_freqs[i]) << ','
        << round12(std::abs(r.empirical_freqs[i] - r.exact_probs[i])) << '\n';
  }
  return out.str();
}

json to_json(const ProcessTrace& t) {
  json stages = json::array();
  for (const auto& s : t.stages) {
    stages.push_back({{"label", s.label},
                      {"bloch", real_vector_to_json(s.bloch.coords())},
                      {"density", matrix_to_json(s.density.matrix())}});
  }
  json out = {{"outcome", t.outcome + 1},
              {"lambda", real_vector_to_json(t.lambda.weights())},
              {"stages", std::move(stages)}};
  if (t.class_index) out["class"] = *t.class_index + 1;
  return out;
}

json to_json(const OracleComparison& c) {
  return {{"samples", c.n_samples},
          {"agreements", c.agreements},
          {"disagreements", c.disagreements},
          {"ties", c.ties}};
}

}  // namespace ebr::io
