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

#ifndef MUC_MODELS_MAT_MODEL_HPP
#define MUC_MODELS_MAT_MODEL_HPP

#include <string>

#include "muc/matrix.hpp"
#include "muc/model.hpp"

namespace muc {

/// Dimension of an object of Mat: products for both tensors, units are 1,
/// dagger and dual are stationary.
inline std::size_t mat_dim(const ObjectExpr &a) {
  using K = ObjectExpr::Kind;
  switch (a.kind()) {
  case K::Base:
    if (const auto *n = std::get_if<std::size_t>(&a.atom())) {
      if (*n == 0)
        throw TypingError("Mat objects have positive dimension");
      return *n;
    }
    throw TypingError("base object " + a.to_string() + " is not a dimension");
  case K::Tensor:
  case K::Par:
    return mat_dim(a.left()) * mat_dim(a.right());
  case K::TensorUnit:
  case K::ParUnit:
    return 1;
  case K::Dagger:
  case K::Dual:
    return mat_dim(a.inner());
  }
  throw TypingError("malformed object");
}

/// Finite complex matrices. Strict, compact, dagger stationary; the only
/// non-identity structural maps are the symmetries and the Bell duals.
class MatModel : public Model {
public:
  std::string id() const override { return "mat"; }
  double default_tolerance() const override { return 1e-9; }

  Morphism make(const ObjectExpr &dom, const ObjectExpr &cod,
                DenseMatrix m) const {
    if (m.rows() != mat_dim(cod) || m.cols() != mat_dim(dom))
      throw ShapeMismatch("payload is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " but the typing " +
                          dom.to_string() + " -> " + cod.to_string() +
                          " needs " + std::to_string(mat_dim(cod)) + "x" +
                          std::to_string(mat_dim(dom)));
    return Morphism(id(), dom, cod, std::move(m));
  }

  Morphism identity(const ObjectExpr &a) const override {
    return make(a, a, DenseMatrix::identity(mat_dim(a)));
  }

  Morphism structural(StructuralMap m,
                      std::span<const ObjectExpr> args) const override {
    const auto sig = signature_of(m, args);
    return make(sig.dom, sig.cod, structural_payload(m, args, sig));
  }
  using Model::structural;

  Morphism tensor(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return make(otimes(f.dom(), g.dom()), otimes(f.cod(), g.cod()),
                mat_kron(f.dense(), g.dense()));
  }

  Morphism par(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return make(oplus(f.dom(), g.dom()), oplus(f.cod(), g.cod()),
                mat_kron(f.dense(), g.dense()));
  }

  Morphism dagger(const Morphism &f) const override {
    check_model(f);
    return make(dag(f.cod()), dag(f.dom()), dagger_payload(f.dense()));
  }

  double deviation(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return max_abs_diff(f.dense(), g.dense());
  }

  ObjectExpr random_object(Rng &rng) const override {
    return ObjectExpr::dim(rng.dim());
  }
  ObjectExpr random_unitary_object(Rng &rng) const override {
    return random_object(rng);
  }

  Morphism random_morphism(const ObjectExpr &dom, const ObjectExpr &cod,
                           Rng &rng) const override {
    return make(dom, cod, rng.matrix(mat_dim(cod), mat_dim(dom)));
  }

  UnitaryPair random_unitary(const ObjectExpr &a, Rng &rng) const override {
    const DenseMatrix u = random_unitary_matrix(mat_dim(a), rng);
    return {make(a, a, u), make(a, a, mat_dagger(u))};
  }

  std::optional<std::size_t>
  finite_dim(const ObjectExpr &a) const override {
    return mat_dim(a);
  }
  std::optional<DenseMatrix> dense_payload(const Morphism &f) const override {
    check_model(f);
    return f.dense();
  }
  Morphism from_dense(const ObjectExpr &dom, const ObjectExpr &cod,
                      const DenseMatrix &m) const override {
    return make(dom, cod, m);
  }

  const Model &unitary() const override { return *this; }
  ObjectExpr embed_object(const ObjectExpr &u) const override { return u; }
  Morphism embed(const Morphism &f) const override {
    check_model(f);
    return f;
  }

protected:
  Morphism compose_checked(const Morphism &f,
                           const Morphism &g) const override {
    return make(f.dom(), g.cod(), g.dense() * f.dense());
  }

  virtual DenseMatrix structural_payload(StructuralMap m,
                                         std::span<const ObjectExpr> args,
                                         const Signature &sig) const {
    switch (m) {
    case StructuralMap::SymTensor:
    case StructuralMap::SymPar:
      return commutation_perm(mat_dim(args[0]), mat_dim(args[1]));
    case StructuralMap::DualUnit:
      return bell_unit(mat_dim(args[0]));
    case StructuralMap::DualCounit:
      return bell_counit(mat_dim(args[0]));
    default:
      return DenseMatrix::identity(mat_dim(sig.dom));
    }
  }

  virtual DenseMatrix dagger_payload(const DenseMatrix &m) const {
    return mat_dagger(m);
  }
};

} // namespace muc

#endif // MUC_MODELS_MAT_MODEL_HPP
