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

#include <cstddef>
#include <cstdint>

#include "nlq/qmath.hpp"
#include "nlq/states.hpp"

namespace nlq {

/// U_S (x) V_R, the evolution of non-interacting S and R.
class ProductUnitary {
 public:
  /// Both factors must be 2x2 and unitary to 1e-12.
  ProductUnitary(ComplexMatrix u_s, ComplexMatrix v_r);

  static ProductUnitary identity();

  const ComplexMatrix& u_s() const { return u_s_; }
  const ComplexMatrix& v_r() const { return v_r_; }
  ComplexMatrix joint() const { return tensor(u_s_, v_r_); }

 private:
  ComplexMatrix u_s_;
  ComplexMatrix v_r_;
};

/// Maps every branch vector by U_S (x) V_R; weights are unchanged.
Ensemble evolve(const Ensemble& e, const ProductUnitary& uv);

/// Tr_S[U^dagger P U rho] for a projector P on S.
double heisenberg_probability(const ComplexMatrix& p, const ProductUnitary& uv, const Ensemble& e);

struct NoSignallingReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// |joint_probability_total - Tr_S[P rho]|
  double measurement_deviation = 0.0;
  /// Heisenberg probability under V_R versus an independent V_R'.
  double remote_dynamics_deviation = 0.0;
  /// Heisenberg picture versus Schroedinger picture on the evolved ensemble.
  double picture_deviation = 0.0;
  /// Measure R, then evolve: operator identity (UV)^dag P (UV) = U^dag P U
  /// and the outcome-summed probability against Tr_S[U^dag P U rho].
  double interposed_deviation = 0.0;

  double max_deviation() const;
};

/// Randomized check of the linear no-influence identities. Trial 0 is a
/// fixed all-identity instance; trials 1..n-1 are drawn from `seed`.
/// Throws ArgumentError for trials == 0.
NoSignallingReport no_signalling_suite(std::size_t trials, std::uint64_t seed);

}  // namespace nlq
