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

#ifndef MUC_MODELS_CPLANE_MODEL_HPP
#define MUC_MODELS_CPLANE_MODEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "muc/cnum.hpp"
#include "muc/model.hpp"

namespace muc {

/// Interpretation of an object of the discrete category C: tensor and par
/// multiply, units are 1, dagger conjugates, dual inverts.
inline Complex cplane_value(const ObjectExpr &a) {
  using K = ObjectExpr::Kind;
  switch (a.kind()) {
  case K::Base:
    if (const auto *z = std::get_if<cplane::CNum>(&a.atom()))
      return z->value();
    throw TypingError("base object " + a.to_string() +
                      " is not a complex number");
  case K::Tensor:
  case K::Par:
    return cplane_value(a.left()) * cplane_value(a.right());
  case K::TensorUnit:
  case K::ParUnit:
    return 1.0;
  case K::Dagger:
    return std::conj(cplane_value(a.inner()));
  case K::Dual: {
    const Complex z = cplane_value(a.inner());
    if (z == Complex{})
      throw UnsupportedInModel("0 has no dual in the complex plane");
    return 1.0 / z;
  }
  }
  throw TypingError("malformed object");
}

/// The discrete isomix category on the complex numbers with the nonzero
/// reals as unitary objects. A structural map exists exactly when its two
/// endpoints have the same value.
class CplaneModel : public Model {
public:
  std::string id() const override { return "cplane"; }
  double default_tolerance() const override { return cplane::kRelTol; }

  Morphism make(const ObjectExpr &dom, const ObjectExpr &cod) const {
    const Complex d = cplane_value(dom);
    const Complex c = cplane_value(cod);
    if (!cplane::approx_equal(d, c))
      throw NoSuchMorphism(dom.to_string() + " = " + show(d) + " and " +
                           cod.to_string() + " = " + show(c) +
                           " are different objects");
    return Morphism(id(), dom, cod, CPair{cplane::CNum(d), cplane::CNum(c)});
  }

  Morphism identity(const ObjectExpr &a) const override { return make(a, a); }

  Morphism structural(StructuralMap m,
                      std::span<const ObjectExpr> args) const override {
    const auto sig = signature_of(m, args);
    if (m == StructuralMap::Unitary || m == StructuralMap::UnitaryInv ||
        is_functor_strength(m))
      for (const auto &a : args)
        if (!is_unitary_value(cplane_value(a)))
          throw UnsupportedInModel(a.to_string() +
                                   " is not a nonzero real number");
    return make(sig.dom, sig.cod);
  }
  using Model::structural;

  Morphism tensor(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return make(otimes(f.dom(), g.dom()), otimes(f.cod(), g.cod()));
  }

  Morphism par(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    return make(oplus(f.dom(), g.dom()), oplus(f.cod(), g.cod()));
  }

  Morphism dagger(const Morphism &f) const override {
    check_model(f);
    return make(dag(f.cod()), dag(f.dom()));
  }

  double deviation(const Morphism &f, const Morphism &g) const override {
    check_same_model(f, g);
    const auto &p = f.pair();
    const auto &q = g.pair();
    return std::max(rel_diff(p.dom.value(), q.dom.value()),
                    rel_diff(p.cod.value(), q.cod.value()));
  }

  bool discrete() const override { return true; }

  ObjectExpr random_object(Rng &rng) const override {
    return ObjectExpr::number(cplane::CNum(
        static_cast<double>(rng.integer(-3, 3)),
        static_cast<double>(rng.integer(-3, 3))));
  }

  // Powers of two keep duals exact.
  ObjectExpr random_unitary_object(Rng &rng) const override {
    static constexpr std::array<double, 4> kMagnitudes{0.5, 1.0, 2.0, 4.0};
    const double r = kMagnitudes[static_cast<std::size_t>(rng.integer(0, 3))];
    return ObjectExpr::number(cplane::CNum(rng.coin() ? r : -r));
  }

  Morphism random_morphism(const ObjectExpr &dom, const ObjectExpr &cod,
                           Rng &) const override {
    return make(dom, cod);
  }

  UnitaryPair random_unitary(const ObjectExpr &a, Rng &) const override {
    return {identity(a), identity(a)};
  }

  const Model &unitary() const override { return *this; }
  ObjectExpr embed_object(const ObjectExpr &u) const override { return u; }
  Morphism embed(const Morphism &f) const override {
    check_model(f);
    return f;
  }

  static bool is_unitary_value(Complex z) {
    return z.real() != 0.0 &&
           std::abs(z.imag()) <= cplane::kRelTol * std::abs(z.real());
  }

protected:
  Morphism compose_checked(const Morphism &f,
                           const Morphism &g) const override {
    return make(f.dom(), g.cod());
  }

private:
  static double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) /
           std::max({1.0, std::abs(a), std::abs(b)});
  }

  static std::string show(Complex z) {
    return std::to_string(z.real()) + (z.imag() < 0 ? "-" : "+") +
           std::to_string(std::abs(z.imag())) + "i";
  }
};

} // namespace muc

#endif // MUC_MODELS_CPLANE_MODEL_HPP
