// Copyright 2026 The nlq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded random instances for the randomized suites.
//
// std::mt19937_64 is fully specified by the standard, the distributions in
// <random> are not, so uniform and normal deviates are derived here directly
// from the engine output. Same seed, same numbers, on every platform.

#include <cstdint>
#include <random>

#include "nlq/qmath.hpp"
#include "nlq/states.hpp"

namespace nlq {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal (Box-Muller, cosine branch only).
  double normal();
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// Uniform point on the unit sphere.
RealTriple random_unit_axis(SeededRng& rng);
/// spin_unitary with a uniformly random axis and angle in [0, 2 pi).
ComplexMatrix random_spin_unitary(SeededRng& rng);
/// Normalized complex Gaussian vector.
ComplexVector random_normalized(SeededRng& rng, std::size_t dim);
ComplexMatrix random_rank1_projector(SeededRng& rng);
/// 1 to 4 branches; each branch is a random product or a random 4-vector.
Ensemble random_ensemble(SeededRng& rng);

}  // namespace nlq
