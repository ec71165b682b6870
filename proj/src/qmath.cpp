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

#include "nlq/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlq/errors.hpp"

namespace nlq {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kImagResidueTol = 1e-10;

void require_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw ArgumentError("dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw ArgumentError(std::string(op) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

// ComplexVector --------------------------------------------------------------

ComplexVector::ComplexVector(std::size_t dim) : dim_(dim) { require_dim(dim); }

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : dim_(entries.size()) {
  require_dim(dim_);
  std::size_t i = 0;
  for (const Complex& z : entries) {
    if (!finite(z)) throw ArgumentError("non-finite vector entry");
    data_[i++] = z;
  }
}

double ComplexVector::norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += std::norm(data_[i]);
  return std::sqrt(sum);
}

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw ArgumentError("cannot normalize a zero vector");
  return Complex(1.0 / n) * *this;
}

bool ComplexVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim_, b.dim_, "vector +");
  ComplexVector out(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim_, b.dim_, "vector -");
  ComplexVector out(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

ComplexVector operator*(Complex s, const ComplexVector& v) {
  ComplexVector out(v.dim_);
  for (std::size_t i = 0; i < v.dim_; ++i) out.data_[i] = s * v.data_[i];
  return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

// ComplexMatrix --------------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  require_dim(dim_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ArgumentError("matrix rows must all have length " + std::to_string(dim_));
    std::size_t c = 0;
    for (const Complex& z : row) {
      if (!finite(z)) throw ArgumentError("non-finite matrix entry");
      (*this)(r, c++) = z;
    }
    ++r;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix +");
  ComplexMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix -");
  ComplexMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix *");
  const std::size_t n = a.dim_;
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += a(r, k) * b(k, c);
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  ComplexMatrix out(m.dim_);
  for (std::size_t i = 0; i < m.dim_ * m.dim_; ++i) out.data_[i] = s * m.data_[i];
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  require_same_dim(m.dim_, v.dim(), "matrix-vector *");
  ComplexVector out(v.dim());
  for (std::size_t r = 0; r < m.dim_; ++r) {
    Complex sum{};
    for (std::size_t c = 0; c < m.dim_; ++c) sum += m(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.dim_ == b.dim_ &&
         std::equal(a.data_.begin(), a.data_.begin() + a.dim_ * a.dim_, b.data_.begin());
}

// Free operations ------------------------------------------------------------

ComplexMatrix pauli(int axis) {
  switch (axis) {
    case 1:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case 2:
      return {{0.0, -kI}, {kI, 0.0}};
    case 3:
      return {{1.0, 0.0}, {0.0, -1.0}};
    default:
      throw ArgumentError("pauli axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
}

ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out(c, r) = std::conj(m(r, c));
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw ArgumentError("tensor: both factors must be 2x2");
  ComplexMatrix out(4);
  for (std::size_t sr = 0; sr < 2; ++sr) {
    for (std::size_t sc = 0; sc < 2; ++sc) {
      for (std::size_t rr = 0; rr < 2; ++rr) {
        for (std::size_t rc = 0; rc < 2; ++rc) out(2 * sr + rr, 2 * sc + rc) = a(sr, sc) * b(rr, rc);
      }
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& s, const ComplexVector& r) {
  if (s.dim() != 2 || r.dim() != 2) throw ArgumentError("tensor: both factors must be 2-vectors");
  ComplexVector out(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[2 * i + j] = s[i] * r[j];
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex sum{};
  for (std::size_t i = 0; i < m.dim(); ++i) sum += m(i, i);
  return sum;
}

ComplexMatrix partial_trace_R(const ComplexMatrix& pi) {
  if (pi.dim() != 4) throw ArgumentError("partial_trace_R: operand must be 4x4");
  ComplexMatrix out(2);
  for (std::size_t sr = 0; sr < 2; ++sr) {
    for (std::size_t sc = 0; sc < 2; ++sc) out(sr, sc) = pi(2 * sr, 2 * sc) + pi(2 * sr + 1, 2 * sc + 1);
  }
  return out;
}

ComplexMatrix partial_trace_S(const ComplexMatrix& pi) {
  if (pi.dim() != 4) throw ArgumentError("partial_trace_S: operand must be 4x4");
  ComplexMatrix out(2);
  for (std::size_t rr = 0; rr < 2; ++rr) {
    for (std::size_t rc = 0; rc < 2; ++rc) out(rr, rc) = pi(rr, rc) + pi(2 + rr, 2 + rc);
  }
  return out;
}

double mean_value(const ComplexMatrix& a, const ComplexMatrix& rho) {
  require_same_dim(a.dim(), rho.dim(), "mean_value");
  // Tr[A rho] without forming the product.
  Complex sum{};
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t k = 0; k < a.dim(); ++k) sum += a(r, k) * rho(k, r);
  }
  if (std::abs(sum.imag()) > kImagResidueTol) {
    throw InternalConsistencyError("mean_value: imaginary residue " + std::to_string(sum.imag()) +
                                   " exceeds tolerance");
  }
  return sum.real();
}

ComplexMatrix spin_unitary(const RealTriple& axis, double angle) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!std::isfinite(angle) || std::abs(n - 1.0) > kAlgebraTol) {
    throw ArgumentError("spin_unitary: axis must be a finite unit vector");
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const ComplexMatrix n_sigma =
      Complex(axis[0]) * pauli(1) + Complex(axis[1]) * pauli(2) + Complex(axis[2]) * pauli(3);
  return Complex(c) * ComplexMatrix::identity(2) + (-kI * s) * n_sigma;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "outer");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a[r] * std::conj(b[c]);
  }
  return out;
}

ComplexMatrix projector_from_vector(const ComplexVector& v) {
  if (!v.is_normalized()) throw ArgumentError("projector_from_vector: vector is not normalized");
  return outer(v, v);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool is_finite(const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (!finite(m(r, c))) return false;
    }
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return max_abs_diff(m, dagger(m)) <= tol; }

bool is_unitary(const ComplexMatrix& m, double tol) {
  return max_abs_diff(dagger(m) * m, ComplexMatrix::identity(m.dim())) <= tol;
}

bool is_projector(const ComplexMatrix& m, double tol) {
  return is_hermitian(m, tol) && max_abs_diff(m * m, m) <= tol;
}

bool is_density(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol) || std::abs(trace(m) - Complex(1.0)) > tol) return false;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m(i, i).real() < -tol) return false;
  }
  return true;
}

}  // namespace nlq
