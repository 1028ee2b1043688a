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

#ifndef MUC_MODEL_HPP
#define MUC_MODEL_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "muc/morphism.hpp"
#include "muc/object.hpp"
#include "muc/rng.hpp"

namespace muc {

/// A unitary map together with its inverse, both as morphisms of a model.
struct UnitaryPair {
  Morphism forward;
  Morphism inverse;
};

/// A mixed unitary category M: U -> C presented by its ambient category C.
/// `unitary()` is the model of U and `embed` is the functor M.
class Model {
public:
  virtual ~Model() = default;

  virtual std::string id() const = 0;
  virtual double default_tolerance() const = 0;

  virtual Morphism identity(const ObjectExpr &a) const = 0;
  virtual Morphism structural(StructuralMap m,
                              std::span<const ObjectExpr> args) const = 0;
  virtual Morphism tensor(const Morphism &f, const Morphism &g) const = 0;
  virtual Morphism par(const Morphism &f, const Morphism &g) const = 0;
  virtual Morphism dagger(const Morphism &f) const = 0;

  /// Max deviation between parallel morphisms; ShapeMismatch otherwise.
  virtual double deviation(const Morphism &f, const Morphism &g) const = 0;

  /// True when the only morphisms are identities.
  virtual bool discrete() const { return false; }

  virtual ObjectExpr random_object(Rng &rng) const = 0;
  /// An object of the unitary category U.
  virtual ObjectExpr random_unitary_object(Rng &rng) const = 0;
  virtual Morphism random_morphism(const ObjectExpr &dom,
                                   const ObjectExpr &cod, Rng &rng) const = 0;
  /// A unitary automorphism of `a` with its inverse.
  virtual UnitaryPair random_unitary(const ObjectExpr &a, Rng &rng) const = 0;

  /// Dimension of an object when the model is finite-dimensional linear.
  virtual std::optional<std::size_t> finite_dim(const ObjectExpr &) const {
    return std::nullopt;
  }
  /// Column-convention matrix of a morphism, when there is one.
  virtual std::optional<DenseMatrix> dense_payload(const Morphism &) const {
    return std::nullopt;
  }
  virtual Morphism from_dense(const ObjectExpr &, const ObjectExpr &,
                              const DenseMatrix &) const {
    throw UnsupportedInModel("model '" + id() + "' has no matrix payloads");
  }

  virtual const Model &unitary() const = 0;
  virtual ObjectExpr embed_object(const ObjectExpr &u) const = 0;
  virtual Morphism embed(const Morphism &f) const = 0;

  Morphism compose(const Morphism &f, const Morphism &g) const {
    check_model(f);
    check_model(g);
    if (!(f.cod() == g.dom()))
      throw ShapeMismatch("cannot compose " + f.dom().to_string() + " -> " +
                          f.cod().to_string() + " with " +
                          g.dom().to_string() + " -> " + g.cod().to_string());
    return compose_checked(f, g);
  }

  /// Composite of a nonempty chain f1 ; f2 ; ... ; fn.
  Morphism chain(std::initializer_list<Morphism> fs) const {
    if (fs.size() == 0)
      throw ArityError("empty chain");
    auto it = fs.begin();
    Morphism out = *it;
    for (++it; it != fs.end(); ++it)
      out = compose(out, *it);
    return out;
  }

  Morphism structural(StructuralMap m,
                      std::initializer_list<ObjectExpr> args) const {
    return structural(m, std::span<const ObjectExpr>(args.begin(), args.size()));
  }

  Signature signature_of(StructuralMap m,
                         std::span<const ObjectExpr> args) const {
    return signature(m, args,
                     [this](const ObjectExpr &u) { return embed_object(u); });
  }

  bool equal_up_to(const Morphism &f, const Morphism &g, double tol) const {
    return deviation(f, g) <= tol;
  }

protected:
  virtual Morphism compose_checked(const Morphism &f,
                                   const Morphism &g) const = 0;

  void check_model(const Morphism &f) const {
    if (f.model() != id())
      throw ModelMismatch("morphism of model '" + f.model() +
                          "' used in model '" + id() + "'");
  }

  void check_same_model(const Morphism &f, const Morphism &g) const {
    check_model(f);
    check_model(g);
  }
};

} // namespace muc

#endif // MUC_MODEL_HPP
