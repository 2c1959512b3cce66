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

#include "ebr/rng.hpp"

#include <array>

namespace ebr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_engine(RngSeed s) {
  const std::array<std::uint32_t, 4> words = {
      static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
      static_cast<std::uint32_t>(s.stream),
      static_cast<std::uint32_t>(s.stream >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

RngSeed RngSeed::substream(std::uint64_t index) const {
  return {seed, splitmix64(stream ^ splitmix64(index + 1))};
}

Rng::Rng(RngSeed seed) : engine_(make_engine(seed)) {}

}  // namespace ebr
