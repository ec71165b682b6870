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

// Dense complex linear algebra for a spin-1/2 S, a two-level R and the
// composite S(x)R. Only dimensions 2 and 4 exist.
//
// Conventions used everywhere in nlq:
//   - |up> = (1, 0), |down> = (0, 1); Sigma_3 is diagonal.
//   - Composite index = 2 * s + r, i.e. S is the left (slow) Kronecker factor.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace nlq {

using Complex = std::complex<double>;
using RealTriple = std::array<double, 3>;

/// Tolerance for algebraic identities on closed-form paths.
inline constexpr double kAlgebraTol = 1e-12;

class ComplexVector {
 public:
  /// Zero vector of the given dimension (2 or 4).
  explicit ComplexVector(std::size_t dim);
  ComplexVector(std::initializer_list<Complex> entries);

  std::size_t dim() const { return dim_; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  double norm() const;
  ComplexVector normalized() const;
  bool is_normalized(double tol = kAlgebraTol) const;

  friend ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
  friend ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
  friend ComplexVector operator*(Complex s, const ComplexVector& v);

 private:
  std::size_t dim_;
  std::array<Complex, 4> data_{};
};

/// <a|b>, antilinear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension (2 or 4).
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major construction; the row count fixes the dimension.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
  friend ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_;
  std::array<Complex, 16> data_{};
};

/// Standard Pauli matrix Sigma_axis, axis in {1, 2, 3}.
ComplexMatrix pauli(int axis);

ComplexMatrix dagger(const ComplexMatrix& m);

/// Kronecker product A (x) B of two 2x2 matrices, A acting on S.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
/// Kronecker product of two 2-vectors, s (x) r.
ComplexVector tensor(const ComplexVector& s, const ComplexVector& r);

Complex trace(const ComplexMatrix& m);

/// Tr_R of a composite operator; the result acts on S.
ComplexMatrix partial_trace_R(const ComplexMatrix& pi);
/// Tr_S of a composite operator; the result acts on R.
ComplexMatrix partial_trace_S(const ComplexMatrix& pi);

/// Re Tr[A rho]. Throws InternalConsistencyError if the imaginary part of
/// the trace exceeds 1e-10.
double mean_value(const ComplexMatrix& a, const ComplexMatrix& rho);

/// exp(-i angle/2 n.Sigma) for a unit axis n.
ComplexMatrix spin_unitary(const RealTriple& axis, double angle);

/// |v><v| for a normalized v.
ComplexMatrix projector_from_vector(const ComplexVector& v);

/// |a><b|
ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);

bool is_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kAlgebraTol);
bool is_unitary(const ComplexMatrix& m, double tol = kAlgebraTol);
bool is_projector(const ComplexMatrix& m, double tol = kAlgebraTol);
/// Hermitian, unit trace, nonnegative real diagonal.
bool is_density(const ComplexMatrix& m, double tol = kAlgebraTol);

}  // namespace nlq
