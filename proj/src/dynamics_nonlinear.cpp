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

#include "nlq/dynamics_nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "nlq/errors.hpp"

namespace nlq {
namespace {

void require_shared_grid(const Trajectory& a, const Trajectory& b) {
  if (a.times() != b.times()) throw ArgumentError("trajectories do not share a time grid");
}

void require_finite_law(const PrecessionLaw& law) {
  const double v = std::visit(
      [](const auto& l) {
        if constexpr (std::is_same_v<std::decay_t<decltype(l)>, NonlinearParams>) {
          return l.epsilon;
        } else {
          return l.omega;
        }
      },
      law);
  if (!std::isfinite(v)) throw ArgumentError("precession parameter must be finite");
}

}  // namespace

Trajectory::Trajectory(std::vector<double> times, std::vector<BlochVector> points)
    : times_(std::move(times)), points_(std::move(points)) {
  if (times_.size() != points_.size()) throw ArgumentError("trajectory: times and points differ in length");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw ArgumentError("trajectory: times must be strictly increasing");
  }
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ArgumentError("time step must be positive");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ArgumentError("t_max must be nonnegative");
  if (t_max == 0.0) return {0.0};
  if (dt > t_max) throw ArgumentError("time step exceeds t_max");

  // Times are k * dt, never accumulated, so grids are reproducible.
  const auto full_steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  std::vector<double> grid;
  grid.reserve(full_steps + 2);
  for (std::size_t k = 0; k <= full_steps; ++k) grid.push_back(static_cast<double>(k) * dt);
  if (std::abs(grid.back() - t_max) <= 1e-9 * dt) {
    grid.back() = t_max;
  } else {
    grid.push_back(t_max);
  }
  return grid;
}

double precession_rate(const BlochVector& b, const PrecessionLaw& law) {
  if (const auto* nl = std::get_if<NonlinearParams>(&law)) return 2.0 * nl->epsilon * b.s3;
  return std::get<FixedPrecession>(law).omega;
}

BlochVector eom_rhs(const BlochVector& b, const PrecessionLaw& law) {
  const double rate = precession_rate(b, law);
  return {-rate * b.s2, rate * b.s1, 0.0};
}

BlochVector closed_form(const BlochVector& b0, const PrecessionLaw& law, double t) {
  // s3 is conserved, so the rate fixed by the initial state holds throughout.
  const double angle = precession_rate(b0, law) * t;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {b0.s1 * c - b0.s2 * s, b0.s2 * c + b0.s1 * s, b0.s3};
}

Trajectory closed_form_trajectory(const BlochVector& b0, const PrecessionLaw& law, std::span<const double> times) {
  require_finite_law(law);
  std::vector<BlochVector> points;
  points.reserve(times.size());
  for (double t : times) points.push_back(closed_form(b0, law, t));
  return Trajectory({times.begin(), times.end()}, std::move(points));
}

Trajectory integrate_rk4(const BlochVector& b0, const PrecessionLaw& law, double t_max, double dt) {
  require_finite_law(law);
  std::vector<double> grid = time_grid(t_max, dt);
  std::vector<BlochVector> points;
  points.reserve(grid.size());
  points.push_back(b0);
  BlochVector y = b0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double h = grid[i] - grid[i - 1];
    const BlochVector k1 = eom_rhs(y, law);
    const BlochVector k2 = eom_rhs(y + (h / 2.0) * k1, law);
    const BlochVector k3 = eom_rhs(y + (h / 2.0) * k2, law);
    const BlochVector k4 = eom_rhs(y + h * k3, law);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    points.push_back(y);
  }
  return Trajectory(std::move(grid), std::move(points));
}

Trajectory evolve_ensemble(const Ensemble& e, EvolutionPolicy policy, const PrecessionLaw& law,
                           std::span<const double> times) {
  if (times.empty()) throw ArgumentError("evolve_ensemble: empty time grid");
  if (policy == EvolutionPolicy::AggregateMeans) return closed_form_trajectory(reduced_bloch_S(e), law, times);

  std::vector<double> weights;
  std::vector<Trajectory> branches;
  for (const auto& b : e.branches()) {
    weights.push_back(b.weight());
    branches.push_back(closed_form_trajectory(conditional_bloch_S(b), law, times));
  }
  return weighted_average(weights, branches);
}

Trajectory weighted_average(std::span<const double> weights, std::span<const Trajectory> trajectories) {
  if (weights.size() != trajectories.size() || trajectories.empty()) {
    throw ArgumentError("weighted_average: need one weight per trajectory and at least one trajectory");
  }
  const Trajectory& first = trajectories.front();
  std::vector<BlochVector> points(first.size());
  for (std::size_t k = 0; k < trajectories.size(); ++k) {
    require_shared_grid(first, trajectories[k]);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = points[i] + weights[k] * trajectories[k].points()[i];
  }
  return Trajectory(first.times(), std::move(points));
}

double max_s2_difference(const Trajectory& a, const Trajectory& b) {
  require_shared_grid(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.points()[i].s2 - b.points()[i].s2));
  return worst;
}

double max_bloch_distance(const Trajectory& a, const Trajectory& b) {
  require_shared_grid(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a.points()[i] - b.points()[i]).norm());
  return worst;
}

}  // namespace nlq
