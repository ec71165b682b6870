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

// Projective measurement on one factor of S(x)R with Lueders collapse.
//
// Collapse works branch by branch: every pure branch is projected,
// renormalized and reweighted by its projected norm, so the post-measurement
// value is still an Ensemble. Its density matrix equals the Lueders update
// E Pi E / Tr[E Pi E] of the input's density matrix.

#include <cstddef>
#include <string>
#include <vector>

#include "nlq/qmath.hpp"
#include "nlq/states.hpp"

namespace nlq {

/// Probability (or projected branch weight) at or below which an outcome
/// counts as impossible and a branch is dropped.
inline constexpr double kZeroProbability = 1e-12;

enum class Subsystem { S, R };

/// op (x) 1 for Subsystem::S, 1 (x) op for Subsystem::R.
ComplexMatrix lift(const ComplexMatrix& op, Subsystem slot);

class MeasurementBasis {
 public:
  MeasurementBasis() = default;
  /// Stores the projectors as given; use validate_basis to check them.
  explicit MeasurementBasis(std::vector<ComplexMatrix> projectors)
      : projectors_(std::move(projectors)) {}

  /// Rank-1 projectors onto each of the given (normalized) vectors.
  static MeasurementBasis from_vectors(const std::vector<ComplexVector>& vectors);

  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }
  std::size_t size() const { return projectors_.size(); }

 private:
  std::vector<ComplexMatrix> projectors_;
};

struct BasisViolation {
  enum class Kind { Dimension, Hermiticity, Idempotence, Orthogonality, Completeness };
  Kind kind;
  std::size_t first;   // index of the offending projector
  std::size_t second;  // partner index for Orthogonality, else == first
  double magnitude;    // max entrywise deviation

  std::string describe() const;
};

struct BasisReport {
  std::vector<BasisViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks E_j E_k = delta_jk E_k and sum_k E_k = 1 for 2x2 projectors.
BasisReport validate_basis(const MeasurementBasis& b, double tol = kAlgebraTol);

double outcome_probability(const Ensemble& e, const ComplexMatrix& projector,
                           Subsystem on = Subsystem::R);

/// Post-measurement ensemble for outcome `projector`. Throws
/// ImpossibleOutcome if the outcome probability is at most kZeroProbability.
Ensemble collapse(const Ensemble& e, const ComplexMatrix& projector, Subsystem on = Subsystem::R);

struct OutcomeBranch {
  std::size_t outcome_index;
  double probability;
  Ensemble post_state;
};

/// One OutcomeBranch per projector with nonzero probability, in basis
/// order. Throws ArgumentError for an invalid basis.
std::vector<OutcomeBranch> measure_all(const Ensemble& e, const MeasurementBasis& b,
                                       Subsystem on = Subsystem::R);

/// sum_k Prob(E_k) Tr[(P (x) 1) Pi_k] for P on S and the basis on R.
/// For linear quantum mechanics this always equals Tr_S[P rho].
double joint_probability_total(const ComplexMatrix& p, const Ensemble& e, const MeasurementBasis& b);

}  // namespace nlq
