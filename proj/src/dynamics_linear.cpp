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

#include "nlq/dynamics_linear.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nlq/errors.hpp"
#include "nlq/measurement.hpp"
#include "nlq/random.hpp"

namespace nlq {
namespace {

struct Trial {
  Ensemble ensemble;
  MeasurementBasis basis;
  ComplexMatrix proposition;
  ProductUnitary uv;
  ComplexMatrix other_v;
};

Trial identity_trial() {
  const Ensemble e({Branch(1.0, PureComposite(tensor(spin_up(), ket_alpha())))});
  return {e, MeasurementBasis::from_vectors({ket_alpha(), ket_beta()}), projector_from_vector(spin_up()),
          ProductUnitary::identity(), ComplexMatrix::identity(2)};
}

Trial random_trial(SeededRng& rng) {
  Ensemble e = random_ensemble(rng);
  const ComplexMatrix q = random_rank1_projector(rng);
  MeasurementBasis basis({q, ComplexMatrix::identity(2) - q});
  ComplexMatrix p = random_rank1_projector(rng);
  ComplexMatrix u = random_spin_unitary(rng);
  ComplexMatrix v = random_spin_unitary(rng);
  ComplexMatrix v2 = random_spin_unitary(rng);
  return {std::move(e), std::move(basis), std::move(p), ProductUnitary(std::move(u), std::move(v)),
          std::move(v2)};
}

}  // namespace

ProductUnitary::ProductUnitary(ComplexMatrix u_s, ComplexMatrix v_r) : u_s_(std::move(u_s)), v_r_(std::move(v_r)) {
  if (u_s_.dim() != 2 || v_r_.dim() != 2 || !is_unitary(u_s_) || !is_unitary(v_r_)) {
    throw ArgumentError("ProductUnitary: both factors must be 2x2 unitaries");
  }
}

ProductUnitary ProductUnitary::identity() {
  return ProductUnitary(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
}

Ensemble evolve(const Ensemble& e, const ProductUnitary& uv) {
  const ComplexMatrix joint = uv.joint();
  std::vector<Branch> out;
  out.reserve(e.size());
  for (const auto& b : e.branches()) out.emplace_back(b.weight(), PureComposite(joint * b.state().vector()));
  return Ensemble(std::move(out));
}

double heisenberg_probability(const ComplexMatrix& p, const ProductUnitary& uv, const Ensemble& e) {
  if (p.dim() != 2 || !is_projector(p)) throw ArgumentError("heisenberg_probability: P is not a 2x2 projector");
  const ComplexMatrix evolved = dagger(uv.u_s()) * p * uv.u_s();
  return mean_value(evolved, partial_trace_R(density_of(e)));
}

double NoSignallingReport::max_deviation() const {
  return std::max({measurement_deviation, remote_dynamics_deviation, picture_deviation, interposed_deviation});
}

NoSignallingReport no_signalling_suite(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("no_signalling_suite: trials must be at least 1");
  NoSignallingReport report;
  report.trials = trials;
  report.seed = seed;

  SeededRng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Trial t = i == 0 ? identity_trial() : random_trial(rng);
    const ComplexMatrix rho = partial_trace_R(density_of(t.ensemble));
    const ComplexMatrix p_lifted = tensor(t.proposition, ComplexMatrix::identity(2));

    const double static_prob = mean_value(t.proposition, rho);
    report.measurement_deviation =
        std::max(report.measurement_deviation,
                 std::abs(joint_probability_total(t.proposition, t.ensemble, t.basis) - static_prob));

    const double heis = heisenberg_probability(t.proposition, t.uv, t.ensemble);
    const ProductUnitary swapped(t.uv.u_s(), t.other_v);
    report.remote_dynamics_deviation =
        std::max(report.remote_dynamics_deviation,
                 std::abs(heis - heisenberg_probability(t.proposition, swapped, t.ensemble)));

    const double schroedinger = mean_value(p_lifted, density_of(evolve(t.ensemble, t.uv)));
    report.picture_deviation = std::max(report.picture_deviation, std::abs(heis - schroedinger));

    const ComplexMatrix joint = t.uv.joint();
    const ComplexMatrix lhs = dagger(joint) * p_lifted * joint;
    const ComplexMatrix rhs = tensor(dagger(t.uv.u_s()) * t.proposition * t.uv.u_s(), ComplexMatrix::identity(2));
    double interposed = 0.0;
    for (const auto& outcome : measure_all(t.ensemble, t.basis)) {
      interposed += outcome.probability * mean_value(p_lifted, density_of(evolve(outcome.post_state, t.uv)));
    }
    report.interposed_deviation =
        std::max({report.interposed_deviation, max_abs_diff(lhs, rhs), std::abs(interposed - heis)});
  }
  return report;
}

}  // namespace nlq
