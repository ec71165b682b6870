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

#include "nlq/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nlq/errors.hpp"

namespace nlq {
namespace {

double weight_sum(std::span<const WeightedVector> ws) {
  double sum = 0.0;
  for (const auto& w : ws) {
    if (!(w.weight >= 0.0 && w.weight <= 1.0)) throw ArgumentError("mixture weight outside [0, 1]");
    sum += w.weight;
  }
  return sum;
}

void require_single_spin_state(const ComplexVector& v, const char* what) {
  if (v.dim() != 2 || !v.is_normalized()) {
    throw ArgumentError(std::string(what) + " must be a normalized 2-vector");
  }
}

}  // namespace

ComplexVector spin_up() { return {1.0, 0.0}; }
ComplexVector spin_down() { return {0.0, 1.0}; }

std::pair<ComplexVector, ComplexVector> diag_eigenstates() {
  const double c = std::cos(std::numbers::pi / 8.0);
  const double s = std::sin(std::numbers::pi / 8.0);
  return {ComplexVector{c, s}, ComplexVector{s, -c}};
}

PureComposite::PureComposite(ComplexVector v) : vector_(std::move(v)) {
  if (vector_.dim() != 4) throw ArgumentError("composite state must be a 4-vector");
  if (!vector_.is_normalized()) {
    throw ArgumentError("composite state is not normalized (norm " + std::to_string(vector_.norm()) + ")");
  }
}

Branch::Branch(double weight, PureComposite state) : weight_(weight), state_(std::move(state)) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw ArgumentError("branch weight " + std::to_string(weight) + " outside [0, 1]");
  }
}

Ensemble::Ensemble(std::vector<Branch> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) throw ArgumentError("ensemble needs at least one branch");
  double sum = 0.0;
  for (const auto& b : branches_) sum += b.weight();
  if (std::abs(sum - 1.0) > kAlgebraTol) {
    throw ArgumentError("ensemble weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

double BlochVector::norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

BlochVector operator+(const BlochVector& a, const BlochVector& b) {
  return {a.s1 + b.s1, a.s2 + b.s2, a.s3 + b.s3};
}

BlochVector operator-(const BlochVector& a, const BlochVector& b) {
  return {a.s1 - b.s1, a.s2 - b.s2, a.s3 - b.s3};
}

BlochVector operator*(double s, const BlochVector& b) { return {s * b.s1, s * b.s2, s * b.s3}; }

double max_abs_diff(const BlochVector& a, const BlochVector& b) {
  return std::max({std::abs(a.s1 - b.s1), std::abs(a.s2 - b.s2), std::abs(a.s3 - b.s3)});
}

BlochVector bloch_of(const ComplexMatrix& rho) {
  if (rho.dim() != 2) throw ArgumentError("bloch_of: density matrix must be 2x2");
  return {mean_value(pauli(1), rho), mean_value(pauli(2), rho), mean_value(pauli(3), rho)};
}

ComplexMatrix density_of(const Ensemble& e) {
  ComplexMatrix pi(4);
  for (const auto& b : e.branches()) pi = pi + Complex(b.weight()) * outer(b.state().vector(), b.state().vector());
  return pi;
}

BlochVector reduced_bloch_S(const Ensemble& e) {
  const ComplexMatrix pi = density_of(e);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return {mean_value(tensor(pauli(1), id), pi), mean_value(tensor(pauli(2), id), pi),
          mean_value(tensor(pauli(3), id), pi)};
}

BlochVector conditional_bloch_S(const Branch& b) {
  const ComplexVector& v = b.state().vector();
  const BlochVector bloch = bloch_of(partial_trace_R(outer(v, v)));
  if (std::abs(bloch.norm() - 1.0) > kProductTol) {
    throw NotProduct("branch is entangled: reduced S Bloch norm " + std::to_string(bloch.norm()));
  }
  return bloch;
}

Ensemble make_product_uncorrelated(std::span<const WeightedVector> rho_branches,
                                   std::span<const WeightedVector> mu_branches) {
  if (std::abs(weight_sum(rho_branches) - 1.0) > kAlgebraTol ||
      std::abs(weight_sum(mu_branches) - 1.0) > kAlgebraTol) {
    throw ArgumentError("make_product_uncorrelated: each weight set must sum to 1");
  }
  std::vector<Branch> branches;
  for (const auto& s : rho_branches) {
    require_single_spin_state(s.vector, "S vector");
    for (const auto& r : mu_branches) {
      require_single_spin_state(r.vector, "R vector");
      const double w = s.weight * r.weight;
      if (w > 0.0) branches.emplace_back(w, PureComposite(tensor(s.vector, r.vector)));
    }
  }
  return Ensemble(std::move(branches));
}

Ensemble make_classical_correlated(double p, const ComplexVector& sA, const ComplexVector& rA,
                                   const ComplexVector& sB, const ComplexVector& rB) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("make_classical_correlated: p outside [0, 1]");
  require_single_spin_state(sA, "sA");
  require_single_spin_state(sB, "sB");
  require_single_spin_state(rA, "rA");
  require_single_spin_state(rB, "rB");
  if (std::abs(inner(rA, rB)) > kAlgebraTol) {
    throw ArgumentError("make_classical_correlated: R vectors are not orthogonal");
  }
  std::vector<Branch> branches;
  if (p > 0.0) branches.emplace_back(p, PureComposite(tensor(sA, rA)));
  if (p < 1.0) branches.emplace_back(1.0 - p, PureComposite(tensor(sB, rB)));
  return Ensemble(std::move(branches));
}

PureComposite singlet() {
  const Complex h = 1.0 / std::numbers::sqrt2;
  return PureComposite(h * tensor(spin_up(), spin_down()) - h * tensor(spin_down(), spin_up()));
}

}  // namespace nlq
