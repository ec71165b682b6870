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

// Preparation-aware states of S(x)R.
//
// An Ensemble is the full preparation record: an ordered list of weighted
// pure composite states. Two ensembles with the same density matrix are
// still different values, and nonlinear dynamics can tell them apart, so
// nothing in here ever collapses an Ensemble to its density matrix
// implicitly.

#include <span>
#include <utility>
#include <vector>

#include "nlq/qmath.hpp"

namespace nlq {

/// Tolerance used to decide that a branch's S marginal is pure.
inline constexpr double kProductTol = 1e-9;

ComplexVector spin_up();
ComplexVector spin_down();
/// R-side labels. R is a two-level system with alpha, beta as its basis.
inline ComplexVector ket_alpha() { return spin_up(); }
inline ComplexVector ket_beta() { return spin_down(); }

/// Eigenvectors of (Sigma_1 + Sigma_3)/sqrt(2) for eigenvalues +1 and -1,
/// each with its first nonzero component real and positive.
std::pair<ComplexVector, ComplexVector> diag_eigenstates();

class PureComposite {
 public:
  /// Requires a 4-vector of unit norm (1e-12).
  explicit PureComposite(ComplexVector v);

  const ComplexVector& vector() const { return vector_; }

 private:
  ComplexVector vector_;
};

class Branch {
 public:
  /// Requires weight in [0, 1].
  Branch(double weight, PureComposite state);

  double weight() const { return weight_; }
  const PureComposite& state() const { return state_; }

 private:
  double weight_;
  PureComposite state_;
};

class Ensemble {
 public:
  /// Requires a nonempty branch list whose weights sum to 1 (1e-12).
  explicit Ensemble(std::vector<Branch> branches);

  const std::vector<Branch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }

 private:
  std::vector<Branch> branches_;
};

struct BlochVector {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double norm() const;
  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

BlochVector operator+(const BlochVector& a, const BlochVector& b);
BlochVector operator-(const BlochVector& a, const BlochVector& b);
BlochVector operator*(double s, const BlochVector& b);
/// Largest componentwise absolute difference.
double max_abs_diff(const BlochVector& a, const BlochVector& b);

/// Bloch vector (<Sigma_1>, <Sigma_2>, <Sigma_3>) of a 2x2 density matrix.
BlochVector bloch_of(const ComplexMatrix& rho);

/// One weighted vector of a single-subsystem mixture.
struct WeightedVector {
  double weight;
  ComplexVector vector;
};

/// Composite density matrix, sum_k w_k |psi_k><psi_k|.
ComplexMatrix density_of(const Ensemble& e);

/// Bloch vector of Tr_R density_of(e).
BlochVector reduced_bloch_S(const Ensemble& e);

/// Bloch vector of the S factor of a product branch. Throws NotProduct when
/// the branch's reduced S state is not pure to within kProductTol.
BlochVector conditional_bloch_S(const Branch& b);

/// rho (x) mu as the ensemble of all pairs (w_i v_j, s_i (x) r_j).
Ensemble make_product_uncorrelated(std::span<const WeightedVector> rho_branches,
                                   std::span<const WeightedVector> mu_branches);

/// {(p, sA (x) rA), (1 - p, sB (x) rB)} with rA orthogonal to rB.
/// Zero-weight branches are left out, so p = 0 or 1 gives one branch.
Ensemble make_classical_correlated(double p, const ComplexVector& sA, const ComplexVector& rA,
                                   const ComplexVector& sB, const ComplexVector& rB);

/// Total-spin-zero state (|up down> - |down up>)/sqrt(2).
PureComposite singlet();

}  // namespace nlq
