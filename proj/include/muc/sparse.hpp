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

#ifndef MUC_SPARSE_HPP
#define MUC_SPARSE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>

#include "muc/finiteness.hpp"
#include "muc/matrix.hpp"

namespace muc::fmat {

/// Entries below this magnitude are not part of the support.
inline constexpr double kSupportCutoff = 1e-14;

/// Finiteness matrix src -> tgt with finite support, entries keyed (x, y)
/// with x in src and y in tgt. Composition is diagrammatic:
/// (M ; N)(x, z) = sum_y M(x, y) N(y, z).
class SparseMatrix {
public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using Entries = std::map<Key, Complex>;

  SparseMatrix(FinitenessSpace src, FinitenessSpace tgt, Entries entries)
      : src_(std::move(src)), tgt_(std::move(tgt)) {
    for (auto &[k, v] : entries)
      if (std::abs(v) >= kSupportCutoff)
        entries_.emplace(k, v);
    if (!check_finiteness_relation(support(), src_, tgt_))
      throw TypingError("support is not a finiteness relation");
  }

  static SparseMatrix identity(const FinitenessSpace &s) {
    if (!s.is_finite())
      throw UnsupportedInModel(
          "identity on a symbolic infinite space has infinite support");
    Entries e;
    for (std::uint64_t i = 0; i < s.carrier().size(); ++i)
      e.emplace(Key{i, i}, 1.0);
    return SparseMatrix(s, s, std::move(e));
  }

  const FinitenessSpace &src() const noexcept { return src_; }
  const FinitenessSpace &tgt() const noexcept { return tgt_; }
  const Entries &entries() const noexcept { return entries_; }

  Complex at(std::uint64_t x, std::uint64_t y) const {
    auto it = entries_.find(Key{x, y});
    return it == entries_.end() ? Complex{} : it->second;
  }

  Relation support() const {
    Relation r;
    r.reserve(entries_.size());
    for (const auto &[k, v] : entries_)
      r.push_back(k);
    return r;
  }

private:
  FinitenessSpace src_;
  FinitenessSpace tgt_;
  Entries entries_;
};

inline SparseMatrix fmat_compose(const SparseMatrix &m1,
                                 const SparseMatrix &m2) {
  if (!(m1.tgt() == m2.src()))
    throw SpaceMismatch("target of the first matrix is not the source of "
                        "the second");
  std::multimap<std::uint64_t, std::pair<std::uint64_t, Complex>> by_row;
  for (const auto &[k, v] : m2.entries())
    by_row.emplace(k.first, std::pair{k.second, v});
  SparseMatrix::Entries out;
  for (const auto &[k, v] : m1.entries()) {
    auto [lo, hi] = by_row.equal_range(k.second);
    for (auto it = lo; it != hi; ++it)
      out[{k.first, it->second.first}] += v * it->second.second;
  }
  return SparseMatrix(m1.src(), m2.tgt(), std::move(out));
}

/// Conjugate entries, transpose support, flip typing of both spaces.
inline SparseMatrix fmat_dagger(const SparseMatrix &m) {
  SparseMatrix::Entries out;
  for (const auto &[k, v] : m.entries())
    out.emplace(SparseMatrix::Key{k.second, k.first}, std::conj(v));
  return SparseMatrix(m.tgt().dagger(), m.src().dagger(), std::move(out));
}

/// Tensor of matrices on finite spaces, consistent with mat_kron.
inline SparseMatrix fmat_kron(const SparseMatrix &m, const SparseMatrix &n) {
  const auto src = finite_product(m.src(), n.src());
  const auto tgt = finite_product(m.tgt(), n.tgt());
  const std::uint64_t ns = n.src().carrier().size();
  const std::uint64_t nt = n.tgt().carrier().size();
  SparseMatrix::Entries out;
  for (const auto &[k1, v1] : m.entries())
    for (const auto &[k2, v2] : n.entries())
      out.emplace(SparseMatrix::Key{k1.first * ns + k2.first,
                                    k1.second * nt + k2.second},
                  v1 * v2);
  return SparseMatrix(src, tgt, std::move(out));
}

/// The inclusion Mat -> FMat on morphisms: a b x a matrix becomes a
/// finiteness matrix (a, P, P) -> (b, P, P).
inline SparseMatrix include_mat(const DenseMatrix &f) {
  SparseMatrix::Entries e;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (f(i, j) != Complex{})
        e.emplace(SparseMatrix::Key{j, i}, f(i, j));
  return SparseMatrix(FinitenessSpace::finite(f.cols()),
                      FinitenessSpace::finite(f.rows()), std::move(e));
}

/// Inverse of include_mat on finite spaces.
inline DenseMatrix to_dense(const SparseMatrix &m) {
  if (!m.src().is_finite() || !m.tgt().is_finite())
    throw UnsupportedInModel("dense view of a matrix on an infinite space");
  DenseMatrix out(m.tgt().carrier().size(), m.src().carrier().size());
  for (const auto &[k, v] : m.entries())
    out(k.second, k.first) = v;
  return out;
}

inline double max_abs_diff(const SparseMatrix &a, const SparseMatrix &b) {
  if (!(a.src() == b.src()) || !(a.tgt() == b.tgt()))
    throw ShapeMismatch("finiteness matrices between different spaces");
  double d = 0.0;
  for (const auto &[k, v] : a.entries())
    d = std::max(d, std::abs(v - b.at(k.first, k.second)));
  for (const auto &[k, v] : b.entries())
    d = std::max(d, std::abs(v - a.at(k.first, k.second)));
  return d;
}

} // namespace muc::fmat

#endif // MUC_SPARSE_HPP
