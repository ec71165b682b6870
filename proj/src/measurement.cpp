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

#include "nlq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlq/errors.hpp"

namespace nlq {
namespace {

void require_projector(const ComplexMatrix& e) {
  if (e.dim() != 2 || !is_projector(e)) throw ArgumentError("measurement operator is not a 2x2 projector");
}

const char* kind_name(BasisViolation::Kind k) {
  switch (k) {
    case BasisViolation::Kind::Dimension:
      return "dimension";
    case BasisViolation::Kind::Hermiticity:
      return "hermiticity";
    case BasisViolation::Kind::Idempotence:
      return "idempotence";
    case BasisViolation::Kind::Orthogonality:
      return "orthogonality";
    case BasisViolation::Kind::Completeness:
      return "completeness";
  }
  return "unknown";
}

}  // namespace

ComplexMatrix lift(const ComplexMatrix& op, Subsystem slot) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return slot == Subsystem::S ? tensor(op, id) : tensor(id, op);
}

MeasurementBasis MeasurementBasis::from_vectors(const std::vector<ComplexVector>& vectors) {
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(vectors.size());
  for (const auto& v : vectors) projectors.push_back(projector_from_vector(v));
  return MeasurementBasis(std::move(projectors));
}

std::string BasisViolation::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << " violation at E_" << first;
  if (kind == Kind::Orthogonality) os << ", E_" << second;
  os << " (magnitude " << magnitude << ")";
  return os.str();
}

std::string BasisReport::describe() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.describe();
  }
  return out;
}

BasisReport validate_basis(const MeasurementBasis& b, double tol) {
  using Kind = BasisViolation::Kind;
  BasisReport report;
  const auto& es = b.projectors();
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (es[k].dim() != 2) {
      report.violations.push_back({Kind::Dimension, k, k, 0.0});
    }
  }
  if (!report.ok()) return report;

  ComplexMatrix sum(2);
  for (std::size_t j = 0; j < es.size(); ++j) {
    sum = sum + es[j];
    if (double d = max_abs_diff(es[j], dagger(es[j])); d > tol) {
      report.violations.push_back({Kind::Hermiticity, j, j, d});
    }
    for (std::size_t k = 0; k < es.size(); ++k) {
      const ComplexMatrix expected = j == k ? es[k] : ComplexMatrix(2);
      const double d = max_abs_diff(es[j] * es[k], expected);
      if (d <= tol) continue;
      if (j == k) {
        report.violations.push_back({Kind::Idempotence, j, j, d});
      } else if (j < k) {
        report.violations.push_back({Kind::Orthogonality, j, k, d});
      }
    }
  }
  if (double d = max_abs_diff(sum, ComplexMatrix::identity(2)); d > tol) {
    report.violations.push_back({Kind::Completeness, 0, 0, d});
  }
  return report;
}

double outcome_probability(const Ensemble& e, const ComplexMatrix& projector, Subsystem on) {
  require_projector(projector);
  const double prob = mean_value(lift(projector, on), density_of(e));
  if (prob < -kAlgebraTol || prob > 1.0 + kAlgebraTol) {
    throw InternalConsistencyError("outcome probability " + std::to_string(prob) + " outside [0, 1]");
  }
  return std::clamp(prob, 0.0, 1.0);
}

Ensemble collapse(const Ensemble& e, const ComplexMatrix& projector, Subsystem on) {
  require_projector(projector);
  const ComplexMatrix lifted = lift(projector, on);

  struct Projected {
    double weight;
    ComplexVector vector;
  };
  std::vector<Projected> kept;
  double total = 0.0;
  for (const auto& b : e.branches()) {
    ComplexVector v = lifted * b.state().vector();
    const double w = b.weight() * v.norm() * v.norm();
    if (w <= kZeroProbability) continue;
    total += w;
    kept.push_back({w, v.normalized()});
  }
  if (total <= kZeroProbability) throw ImpossibleOutcome("measurement outcome has zero probability");

  std::vector<Branch> branches;
  branches.reserve(kept.size());
  for (auto& k : kept) branches.emplace_back(std::min(1.0, k.weight / total), PureComposite(std::move(k.vector)));
  return Ensemble(std::move(branches));
}

std::vector<OutcomeBranch> measure_all(const Ensemble& e, const MeasurementBasis& b, Subsystem on) {
  if (const BasisReport report = validate_basis(b); !report.ok()) {
    throw ArgumentError("invalid measurement basis: " + report.describe());
  }
  std::vector<OutcomeBranch> outcomes;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double prob = outcome_probability(e, b.projectors()[k], on);
    if (prob <= kZeroProbability) continue;
    outcomes.push_back({k, prob, collapse(e, b.projectors()[k], on)});
  }
  return outcomes;
}

double joint_probability_total(const ComplexMatrix& p, const Ensemble& e, const MeasurementBasis& b) {
  if (p.dim() != 2 || !is_projector(p)) throw ArgumentError("joint_probability_total: P is not a 2x2 projector");
  const ComplexMatrix p_lifted = lift(p, Subsystem::S);
  double total = 0.0;
  for (const auto& outcome : measure_all(e, b, Subsystem::R)) {
    total += outcome.probability * mean_value(p_lifted, density_of(outcome.post_state));
  }
  return total;
}

}  // namespace nlq
