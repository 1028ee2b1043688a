// Copyright 2026 The muc-cpinf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MUC_MATRIX_HPP
#define MUC_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "muc/error.hpp"

namespace muc {

using Complex = std::complex<double>;

/// Largest number of payload entries a dense matrix may hold.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 16;

/// Dense complex matrix, row-major. A morphism A -> B is stored as a
/// dim(B) x dim(A) matrix (column convention), so diagrammatic composition
/// f;g is the product g * f.
class DenseMatrix {
public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_size(rows, cols))
      throw ShapeMismatch("entry count " + std::to_string(data_.size()) +
                          " does not match " + std::to_string(rows) + "x" +
                          std::to_string(cols));
  }

  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_)
        throw ShapeMismatch("ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1.0;
    return m;
  }

  static DenseMatrix zeros(std::size_t rows, std::size_t cols) {
    return DenseMatrix(rows, cols);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows != 0 && cols > kMaxDenseEntries / rows)
      throw ShapeMismatch("dense payload " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " exceeds 2^16 entries");
    return rows * cols;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("product of " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " and " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{})
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

inline DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("sum of differently shaped matrices");
  DenseMatrix out = a;
  auto o = out.entries();
  auto e = b.entries();
  for (std::size_t i = 0; i < o.size(); ++i)
    o[i] += e[i];
  return out;
}

inline DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("difference of differently shaped matrices");
  DenseMatrix out = a;
  auto o = out.entries();
  auto e = b.entries();
  for (std::size_t i = 0; i < o.size(); ++i)
    o[i] -= e[i];
  return out;
}

inline DenseMatrix operator*(Complex s, const DenseMatrix &a) {
  DenseMatrix out = a;
  for (auto &x : out.entries())
    x *= s;
  return out;
}

/// Conjugate transpose.
inline DenseMatrix mat_dagger(const DenseMatrix &f) {
  DenseMatrix out(f.cols(), f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      out(j, i) = std::conj(f(i, j));
  return out;
}

inline DenseMatrix mat_transpose(const DenseMatrix &f) {
  DenseMatrix out(f.cols(), f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      out(j, i) = f(i, j);
  return out;
}

inline DenseMatrix mat_kron(const DenseMatrix &f, const DenseMatrix &g) {
  DenseMatrix out(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i1 = 0; i1 < f.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
      const Complex s = f(i1, j1);
      if (s == Complex{})
        continue;
      for (std::size_t i2 = 0; i2 < g.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < g.cols(); ++j2)
          out(i1 * g.rows() + i2, j1 * g.cols() + j2) = s * g(i2, j2);
    }
  return out;
}

/// Permutation P with P (x (x) y) = y (x) x for x in C^a, y in C^b.
inline DenseMatrix commutation_perm(std::size_t a, std::size_t b) {
  DenseMatrix p(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      p(j * a + i, i * b + j) = 1.0;
  return p;
}

/// Column sum_i e_i (x) e_i : C -> C^a (x) C^a.
inline DenseMatrix bell_unit(std::size_t a) {
  DenseMatrix v(a * a, 1);
  for (std::size_t i = 0; i < a; ++i)
    v(i * a + i, 0) = 1.0;
  return v;
}

inline DenseMatrix bell_counit(std::size_t a) {
  return mat_transpose(bell_unit(a));
}

inline double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("comparison of " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " with " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  double d = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i)
    d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

inline double max_abs(const DenseMatrix &a) {
  double d = 0.0;
  for (const auto &x : a.entries())
    d = std::max(d, std::abs(x));
  return d;
}

inline Complex trace(const DenseMatrix &a) {
  if (!a.is_square())
    throw ShapeMismatch("trace of non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i)
    t += a(i, i);
  return t;
}

inline bool is_hermitian(const DenseMatrix &a, double tol = 1e-9) {
  if (!a.is_square())
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
        return false;
  return true;
}

/// Rows [first, first + count) as a separate matrix.
inline DenseMatrix row_block(const DenseMatrix &a, std::size_t first,
                             std::size_t count) {
  if (first + count > a.rows())
    throw ShapeMismatch("row block out of range");
  DenseMatrix out(count, a.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(first + i, j);
  return out;
}

/// Stack equally wide matrices on top of each other.
inline DenseMatrix stack_rows(std::span<const DenseMatrix> blocks) {
  if (blocks.empty())
    return {};
  std::size_t rows = 0;
  const std::size_t cols = blocks.front().cols();
  for (const auto &b : blocks) {
    if (b.cols() != cols)
      throw ShapeMismatch("stacked blocks differ in width");
    rows += b.rows();
  }
  DenseMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

/// Trace out the leading factor of C^u (x) C^b on a (u*b) x (u*b) operator.
inline DenseMatrix partial_trace_first(const DenseMatrix &x, std::size_t u) {
  if (!x.is_square() || u == 0 || x.rows() % u != 0)
    throw ShapeMismatch("partial trace over a factor of dimension " +
                        std::to_string(u) + " of a " +
                        std::to_string(x.rows()) + "x" +
                        std::to_string(x.cols()) + " operator");
  const std::size_t b = x.rows() / u;
  DenseMatrix out(b, b);
  for (std::size_t k = 0; k < u; ++k)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        out(i, j) += x(k * b + i, k * b + j);
  return out;
}

/// Channel action of a Kraus body f : C^a -> C^u (x) C^b (ancilla first):
/// rho |-> Tr_U(f rho f^dagger).
inline DenseMatrix apply_channel(const DenseMatrix &body,
                                 std::size_t ancilla_dim,
                                 const DenseMatrix &rho) {
  if (ancilla_dim == 0 || body.rows() % ancilla_dim != 0)
    throw ShapeMismatch("body rows " + std::to_string(body.rows()) +
                        " not divisible by ancilla dimension " +
                        std::to_string(ancilla_dim));
  if (!rho.is_square() || rho.rows() != body.cols())
    throw ShapeMismatch("density of size " + std::to_string(rho.rows()) +
                        "x" + std::to_string(rho.cols()) +
                        " for channel on dimension " +
                        std::to_string(body.cols()));
  if (!is_hermitian(rho))
    throw NotHermitian("density matrix");
  return partial_trace_first(body * rho * mat_dagger(body), ancilla_dim);
}

} // namespace muc

#endif // MUC_MATRIX_HPP
