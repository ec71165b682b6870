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

// Mean-value dynamics of a spin 1/2 precessing about the 3-axis.
//
// With H = eps <Sigma_3> Sigma_3 the Bloch vector obeys
//
//   d/dt s1 = -2 eps s3 s2,   d/dt s2 = 2 eps s3 s1,   d/dt s3 = 0,
//
// i.e. precession at the state-dependent rate 2 eps s3. FixedPrecession is
// the linear counterpart: the same rotation at a rate that does not depend
// on the state. Both laws share the closed-form solution and the RK4
// integrator, which is what allows a scenario to swap one for the other.

#include <span>
#include <variant>
#include <vector>

#include "nlq/states.hpp"

namespace nlq {

struct NonlinearParams {
  double epsilon = 1.0;
};

struct FixedPrecession {
  double omega = 1.0;
};

using PrecessionLaw = std::variant<NonlinearParams, FixedPrecession>;

/// How an ensemble's S mean values enter the dynamics.
enum class EvolutionPolicy {
  /// Evolve the reduced S Bloch vector of the whole ensemble.
  AggregateMeans,
  /// Evolve each (product) branch's S Bloch vector, then weight-average.
  BranchMeans,
};

class Trajectory {
 public:
  /// Requires equal lengths and strictly increasing times.
  Trajectory(std::vector<double> times, std::vector<BlochVector> points);

  const std::vector<double>& times() const { return times_; }
  const std::vector<BlochVector>& points() const { return points_; }
  std::size_t size() const { return times_.size(); }

 private:
  std::vector<double> times_;
  std::vector<BlochVector> points_;
};

/// 0, dt, 2 dt, ... with a final shortened step landing exactly on t_max.
/// t_max == 0 yields {0}. Throws ArgumentError unless dt > 0, t_max >= 0 and
/// (dt <= t_max or t_max == 0).
std::vector<double> time_grid(double t_max, double dt);

/// Angular precession rate about the 3-axis for state b.
double precession_rate(const BlochVector& b, const PrecessionLaw& law);

BlochVector eom_rhs(const BlochVector& b, const PrecessionLaw& law);

BlochVector closed_form(const BlochVector& b0, const PrecessionLaw& law, double t);

Trajectory closed_form_trajectory(const BlochVector& b0, const PrecessionLaw& law, std::span<const double> times);

/// Classical RK4 on eom_rhs over time_grid(t_max, dt).
Trajectory integrate_rk4(const BlochVector& b0, const PrecessionLaw& law, double t_max, double dt);

/// Throws NotProduct for an entangled branch under BranchMeans and
/// ArgumentError for an empty time grid.
Trajectory evolve_ensemble(const Ensemble& e, EvolutionPolicy policy, const PrecessionLaw& law,
                           std::span<const double> times);

/// Pointwise sum_k w_k T_k. All trajectories must share one time grid.
Trajectory weighted_average(std::span<const double> weights, std::span<const Trajectory> trajectories);

/// max_t |a.s2(t) - b.s2(t)| over a shared grid.
double max_s2_difference(const Trajectory& a, const Trajectory& b);
/// max_t |a(t) - b(t)| (Euclidean) over a shared grid.
double max_bloch_distance(const Trajectory& a, const Trajectory& b);

}  // namespace nlq
