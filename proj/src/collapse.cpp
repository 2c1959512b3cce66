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

#include "ebr/collapse.hpp"

#include "ebr/error.hpp"

namespace ebr {

DensityMatrix reduce_state(const DensityMatrix& d, const MeasurementBasis& b) {
  if (d.dim() != b.dim()) throw DimensionError("reduce_state: dimension mismatch");
  const Barycentric p = born_probabilities(d, b);
  const auto n = static_cast<Eigen::Index>(b.dim());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < b.dim(); ++j) out += p[j] * b.projector(j);
  return DensityMatrix(std::move(out));
}

const TraceStage* ProcessTrace::stage(const std::string& label) const {
  for (const auto& s : stages) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

ProcessTrace run_measurement(const DensityMatrix& d, const MeasurementBasis& b,
                             const GeneratorSet& g,
                             const std::optional<Partition>& partition,
                             RngSeed seed) {
  if (d.dim() != b.dim() || d.dim() != g.dim()) {
    throw DimensionError("run_measurement: dimension mismatch");
  }
  (void)DensityMatrix::checked(d.matrix());

  ProcessTrace trace;
  auto push = [&](const char* label, DensityMatrix m) {
    BlochVector r = to_bloch(m, g);
    trace.stages.push_back({label, std::move(r), std::move(m)});
  };

  push("initial", d);
  push("reduced", reduce_state(d, b));

  Rng rng(seed);
  if (!partition) {
    auto result = measure_once(d, b, rng);
    trace.outcome = result.outcome;
    trace.lambda = std::move(result.lambda);
    push("collapsed", std::move(result.post_state));
    return trace;
  }

  auto result = measure_degenerate(d, b, *partition, rng);
  trace.outcome = result.outcome;
  trace.class_index = result.class_index;
  trace.lambda = std::move(result.lambda);

  // Born weights restricted to the block and renormalized: the point of the
  // block's face that the purified state projects onto.
  const Barycentric p = born_probabilities(d, b);
  const auto& block = partition->block(result.class_index);
  double mass = 0.0;
  for (std::size_t i : block) mass += p[i];
  const auto n = static_cast<Eigen::Index>(b.dim());
  ComplexMatrix collapsed = ComplexMatrix::Zero(n, n);
  for (std::size_t i : block) collapsed += (p[i] / mass) * b.projector(i);
  push("collapsed", DensityMatrix(std::move(collapsed)));
  push("purified", std::move(result.post_state));
  return trace;
}

}  // namespace ebr
