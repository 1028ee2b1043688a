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

#ifndef MUC_LAWS_KIT_HPP
#define MUC_LAWS_KIT_HPP

#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "muc/model.hpp"
#include "muc/report.hpp"

namespace muc {

/// A catalog entry: an equation between two composites (or a small family
/// of them), evaluated on randomly sampled instances.
struct Law {
  std::string id;
  std::string anchor;
  std::size_t arity = 0;
  std::vector<std::string> models;
  std::function<TrialResult(const Model &, Rng &)> trial;

  /// Mutant fixtures ("mat~...") count as their base model.
  bool supports(const Model &m) const {
    const std::string id_ = m.id();
    const std::string base = id_.substr(0, id_.find('~'));
    for (const auto &x : models)
      if (x == base)
        return true;
    return false;
  }
};

namespace laws {

/// Shorthand for building composites inside one trial.
class Kit {
public:
  Kit(const Model &m, Rng &rng) : m_(m), rng_(rng) {}

  const Model &model() const { return m_; }
  Rng &rng() const { return rng_; }

  Morphism s(StructuralMap k, std::initializer_list<ObjectExpr> a) const {
    return m_.structural(k, a);
  }
  /// Structural map of the unitary category.
  Morphism us(StructuralMap k, std::initializer_list<ObjectExpr> a) const {
    return m_.unitary().structural(k, a);
  }
  Morphism id(const ObjectExpr &a) const { return m_.identity(a); }
  Morphism t(const Morphism &f, const Morphism &g) const {
    return m_.tensor(f, g);
  }
  Morphism p(const Morphism &f, const Morphism &g) const {
    return m_.par(f, g);
  }
  Morphism d(const Morphism &f) const { return m_.dagger(f); }
  Morphism c(std::initializer_list<Morphism> fs) const { return m_.chain(fs); }
  /// The functor M applied to a morphism of the unitary category.
  Morphism M(const Morphism &f) const { return m_.embed(f); }
  ObjectExpr M(const ObjectExpr &u) const { return m_.embed_object(u); }

  ObjectExpr obj() { return note(m_.random_object(rng_)); }
  /// Object with a linear dual (the zero of the complex plane has none).
  ObjectExpr dobj() {
    for (int i = 0; i < 64; ++i) {
      ObjectExpr a = m_.random_object(rng_);
      try {
        (void)m_.structural(StructuralMap::DualUnit, {a});
      } catch (const UnsupportedInModel &) {
        continue;
      }
      return note(a);
    }
    throw UnsupportedInModel("no dualizable object sampled in " + m_.id());
  }
  /// Object of the unitary category.
  ObjectExpr uobj() { return note(m_.random_unitary_object(rng_)); }
  /// Image under M of a unitary object.
  ObjectExpr mobj() { return M(uobj()); }

  /// Random morphism out of `dom`; in a discrete model it is the identity.
  Morphism mor(const ObjectExpr &dom) {
    const ObjectExpr cod = m_.discrete() ? dom : obj();
    return m_.random_morphism(dom, cod, rng_);
  }
  Morphism mor(const ObjectExpr &dom, const ObjectExpr &cod) {
    return m_.random_morphism(dom, cod, rng_);
  }
  /// Random morphism of the unitary category out of `dom`.
  Morphism umor(const ObjectExpr &dom) {
    const Model &u = m_.unitary();
    const ObjectExpr cod = u.discrete() ? dom : note(u.random_object(rng_));
    return u.random_morphism(dom, cod, rng_);
  }

  ObjectExpr note(ObjectExpr x) {
    if (!instance_.empty())
      instance_ += ", ";
    instance_ += x.to_string();
    return x;
  }
  /// Free-form note for the witness string.
  void tag(const std::string &s) {
    if (!instance_.empty())
      instance_ += ", ";
    instance_ += s;
  }
  const std::string &instance() const { return instance_; }

  /// Adds lhs = rhs. Both sides must have the same typing.
  void eq(const Morphism &lhs, const Morphism &rhs) {
    if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod()))
      throw TypingError("law sides differ in type: " + lhs.dom().to_string() +
                        " -> " + lhs.cod().to_string() + " vs " +
                        rhs.dom().to_string() + " -> " +
                        rhs.cod().to_string());
    dev_ = std::max(dev_, m_.deviation(lhs, rhs));
  }
  /// Adds a scalar defect (0 when the property holds).
  void defect(double x) { dev_ = std::max(dev_, x); }

  TrialResult result() const {
    return {dev_, instance_.empty() ? "objects: none" : "objects: " + instance_};
  }

private:
  const Model &m_;
  Rng &rng_;
  std::string instance_;
  double dev_ = 0.0;
};

using Body = std::function<void(Kit &)>;

inline Law make_law(std::string id, std::string anchor, std::size_t arity,
                    std::vector<std::string> models, Body body) {
  return Law{std::move(id), std::move(anchor), arity, std::move(models),
             [body = std::move(body)](const Model &m, Rng &rng) {
               Kit k(m, rng);
               body(k);
               return k.result();
             }};
}

inline const std::vector<std::string> kAllModels{"mat", "fmat", "cplane"};
inline const std::vector<std::string> kUnitaryModels{"mat", "cplane"};
inline const std::vector<std::string> kMatOnly{"mat"};

} // namespace laws
} // namespace muc

#endif // MUC_LAWS_KIT_HPP
