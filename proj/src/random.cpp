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

#include "nlq/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace nlq {

double SeededRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SeededRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int SeededRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

RealTriple random_unit_axis(SeededRng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  RealTriple axis{r * std::cos(phi), r * std::sin(phi), z};
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  for (double& a : axis) a /= n;
  return axis;
}

ComplexMatrix random_spin_unitary(SeededRng& rng) {
  const RealTriple axis = random_unit_axis(rng);
  return spin_unitary(axis, 2.0 * std::numbers::pi * rng.uniform());
}

ComplexVector random_normalized(SeededRng& rng, std::size_t dim) {
  ComplexVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = rng.normal();
    v[i] = Complex(re, rng.normal());
  }
  return v.normalized();
}

ComplexMatrix random_rank1_projector(SeededRng& rng) { return projector_from_vector(random_normalized(rng, 2)); }

Ensemble random_ensemble(SeededRng& rng) {
  const int count = rng.integer(1, 4);
  std::vector<double> weights;
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    weights.push_back(0.05 + rng.uniform());
    total += weights.back();
  }
  std::vector<Branch> branches;
  for (int i = 0; i < count; ++i) {
    const bool product = rng.uniform() < 0.5;
    ComplexVector v = product ? tensor(random_normalized(rng, 2), random_normalized(rng, 2))
                              : random_normalized(rng, 4);
    branches.emplace_back(std::min(1.0, weights[i] / total), PureComposite(v.normalized()));
  }
  return Ensemble(std::move(branches));
}

}  // namespace nlq
