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

#ifndef MUC_MODELS_FMAT_MODEL_HPP
#define MUC_MODELS_FMAT_MODEL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "muc/finiteness.hpp"
#include "muc/model.hpp"
#include "muc/models/mat_model.hpp"
#include "muc/sparse.hpp"

namespace muc {

/// Interpretation of an FMat object as a finiteness space.
inline fmat::FinitenessSpace fmat_space(const ObjectExpr &a) {
  using K = ObjectExpr::Kind;
  switch (a.kind()) {
  case K::Base:
    if (const auto *s = std::get_if<fmat::FinitenessSpace>(&a.atom()))
      return *s;
    throw TypingError("base object " + a.to_string() +
                      " is not a finiteness space");
  case K::Tensor:
  case K::Par:
    return fmat::finite_product(fmat_space(a.left()), fmat_space(a.right()));
  case K::TensorUnit:
  case K::ParUnit:
    return fmat::FinitenessSpace::finite(1);
  case K::Dagger:
  case K::Dual:
    return fmat_space(a.inner()).dagger();
  }
  throw TypingError("malformed object");
}

/// Sparse matrix with the given spaces and the entries of a dense matrix in
/// column convention (row = target index).
inline fmat::SparseMatrix sparse_from_dense(const fmat::FinitenessSpace &src,
                                            const fmat::FinitenessSpace &tgt,
                                            const DenseMatrix &m) {
  if (!src.is_finite() || !tgt.is_finite() ||
      src.carrier().size() != m.cols() || tgt.carrier().size() != m.rows())
    throw ShapeMismatch("dense payload does not fit the finiteness spaces");
  fmat::SparseMatrix::Entries e;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != Complex{})
        e.emplace(fmat::SparseMatrix::Key{j, i}, m(i, j));
  return fmat::SparseMatrix(src, tgt, std::move(e));
}

/// The fragment of finiteness matrices used here, with Mat as its unitary
/// category and the inclusion as M. Structural maps live on finite spaces;
/// symbolic infinite spaces only carry finitely supported random maps.
class FMatModel : public Model {
public:
  std::string id() const override { return "fmat"; }
  double default_tolerance() const override { return 1e-9; }

  Morphism make(const ObjectExpr &dom, const ObjectExpr &cod,
                fmat::SparseMatrix m) const {
    if (!(m.src() == fmat_space(dom)) || !(m.tgt() == fmat_space(cod)))
      throw SpaceMismatch("payload spaces do not match " + dom.to_string() +
                          " -> " + cod.to_string());
    return Morphism(id(), dom, cod, std::move(m));
  }

  Morphism identity(const ObjectExpr &a) const override {
    return make(a, a, fmat::SparseMatrix::identity(fmat_space(a)));
  }

  Morphism structural(StructuralMap m,
                      std::span<const ObjectExpr> args) const override {
    const auto sig = signature_of(m, args);
    const auto src = fmat_space(sig.dom);
    const auto tgt = fmat_space(sig.cod);
    if (!src.is_finite() || !tgt.is_finite())
      throw UnsupportedInModel(std::string(info(m).name) +
                               " on a symbolic infinite space");
    DenseMatrix payload;
    switch (m) {
    case StructuralMap::SymTensor:
    case StructuralMap::SymPar:
      payload = commutation_perm(size(args[0]), size(args[1]));
      break;
    case StructuralMap::DualUnit:
      payload = bell_unit(size(args[0]));
      break;
    case StructuralMap::DualCounit:
      payload = bell_counit(size(args[0]));
      break;
    default:
      payload = DenseMatrix::identity(src.carrier().size());
    }
    return make(sig.dom, sig.cod, sparse_from_dense(src, tgt, payload));
  }
  using Model::structural;

  Morphism tensor(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return make(otimes(f.dom(), g.dom()), otimes(f.cod(), g.cod()),
                fmat::fmat_kron(f.sparse(), g.sparse()));
  }

  Morphism par(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return make(oplus(f.dom(), g.dom()), oplus(f.cod(), g.cod()),
                fmat::fmat_kron(f.sparse(), g.sparse()));
  }

  Morphism dagger(const Morphism &f) const override {
    check_model(f);
    return make(dag(f.cod()), dag(f.dom()), fmat::fmat_dagger(f.sparse()));
  }

  double deviation(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return fmat::max_abs_diff(f.sparse(), g.sparse());
  }

  ObjectExpr random_object(Rng &rng) const override {
    return ObjectExpr::space(fmat::FinitenessSpace::finite(rng.dim()));
  }

  ObjectExpr random_unitary_object(Rng &rng) const override {
    return unitary().random_object(rng);
  }

  // Small Gaussian-integer entries: products and sums stay exact, so
  // composition can be compared bit for bit.
  Morphism random_morphism(const ObjectExpr &dom, const ObjectExpr &cod,
                           Rng &rng) const override {
    const auto src = fmat_space(dom);
    const auto tgt = fmat_space(cod);
    const std::uint64_t ns = src.is_finite() ? src.carrier().size() : 6;
    const std::uint64_t nt = tgt.is_finite() ? tgt.carrier().size() : 6;
    fmat::SparseMatrix::Entries e;
    for (std::uint64_t x = 0; x < ns; ++x)
      for (std::uint64_t y = 0; y < nt; ++y)
        if (rng.coin(0.6))
          e.emplace(fmat::SparseMatrix::Key{x, y},
                    Complex(static_cast<double>(rng.integer(-2, 2)),
                            static_cast<double>(rng.integer(-2, 2))));
    return make(dom, cod, fmat::SparseMatrix(src, tgt, std::move(e)));
  }

  // Phased permutations: unitary with exact inverse.
  UnitaryPair random_unitary(const ObjectExpr &a, Rng &rng) const override {
    const std::size_t n = size(a);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
      perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    static const std::array<Complex, 4> kPhases{
        Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    DenseMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
      u(perm[j], j) = kPhases[static_cast<std::size_t>(rng.integer(0, 3))];
    const auto s = fmat_space(a);
    return {make(a, a, sparse_from_dense(s, s, u)),
            make(a, a, sparse_from_dense(s, s, mat_dagger(u)))};
  }

  std::optional<std::size_t>
  finite_dim(const ObjectExpr &a) const override {
    const auto s = fmat_space(a);
    if (!s.is_finite())
      return std::nullopt;
    return s.carrier().size();
  }
  std::optional<DenseMatrix> dense_payload(const Morphism &f) const override {
    check_model(f);
    if (!f.sparse().src().is_finite() || !f.sparse().tgt().is_finite())
      return std::nullopt;
    return fmat::to_dense(f.sparse());
  }
  Morphism from_dense(const ObjectExpr &dom, const ObjectExpr &cod,
                      const DenseMatrix &m) const override {
    return make(dom, cod, sparse_from_dense(fmat_space(dom), fmat_space(cod), m));
  }

  const Model &unitary() const override {
    static const MatModel kMat;
    return kMat;
  }

  ObjectExpr embed_object(const ObjectExpr &u) const override {
    using K = ObjectExpr::Kind;
    switch (u.kind()) {
    case K::Base:
      return ObjectExpr::space(fmat::FinitenessSpace::finite(mat_dim(u)));
    case K::Tensor:
      return otimes(embed_object(u.left()), embed_object(u.right()));
    case K::Par:
      return oplus(embed_object(u.left()), embed_object(u.right()));
    case K::TensorUnit:
    case K::ParUnit:
      return u;
    case K::Dagger:
      return dag(embed_object(u.inner()));
    case K::Dual:
      return dual(embed_object(u.inner()));
    }
    throw TypingError("malformed object");
  }

  Morphism embed(const Morphism &f) const override {
    if (f.model() != unitary().id())
      throw ModelMismatch("M is defined on Mat morphisms, got '" + f.model() +
                          "'");
    const auto dom = embed_object(f.dom());
    const auto cod = embed_object(f.cod());
    return make(dom, cod,
                sparse_from_dense(fmat_space(dom), fmat_space(cod), f.dense()));
  }

  /// Family constructor used for the typing checks; closes downward.
  virtual fmat::SetFamily family(std::vector<std::uint64_t> masks) const {
    return fmat::SetFamily::from_masks(std::move(masks), true);
  }

protected:
  Morphism compose_checked(const Morphism &f,
                           const Morphism &g) const override {
    return make(f.dom(), g.cod(), fmat::fmat_compose(f.sparse(), g.sparse()));
  }

private:
  static std::size_t size(const ObjectExpr &a) {
    const auto s = fmat_space(a);
    if (!s.is_finite())
      throw UnsupportedInModel("symbolic infinite space " + a.to_string());
    return s.carrier().size();
  }
};

} // namespace muc

#endif // MUC_MODELS_FMAT_MODEL_HPP
