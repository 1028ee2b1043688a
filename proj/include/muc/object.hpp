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

#ifndef MUC_OBJECT_HPP
#define MUC_OBJECT_HPP

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <variant>

#include "muc/cnum.hpp"
#include "muc/finiteness.hpp"

namespace muc {

/// Model-specific content of a base object: a dimension (Mat), a complex
/// number (cplane) or a finiteness space (FMat).
using BaseAtom =
    std::variant<std::size_t, cplane::CNum, fmat::FinitenessSpace>;

/// Immutable syntax tree of objects. Equality is structural; no coherence
/// isomorphisms are quotiented out.
class ObjectExpr {
public:
  enum class Kind { Base, Tensor, Par, TensorUnit, ParUnit, Dagger, Dual };

  static ObjectExpr base(BaseAtom atom) {
    return ObjectExpr(std::make_shared<const Node>(Node{
        Kind::Base, std::move(atom), nullptr, nullptr}));
  }
  static ObjectExpr dim(std::size_t n) { return base(BaseAtom{n}); }
  static ObjectExpr number(cplane::CNum z) { return base(BaseAtom{z}); }
  static ObjectExpr space(fmat::FinitenessSpace s) {
    return base(BaseAtom{std::move(s)});
  }
  static ObjectExpr tensor(const ObjectExpr &l, const ObjectExpr &r) {
    return binary(Kind::Tensor, l, r);
  }
  static ObjectExpr par(const ObjectExpr &l, const ObjectExpr &r) {
    return binary(Kind::Par, l, r);
  }
  static ObjectExpr top() { return nullary(Kind::TensorUnit); }
  static ObjectExpr bottom() { return nullary(Kind::ParUnit); }
  static ObjectExpr dagger(const ObjectExpr &a) {
    return unary(Kind::Dagger, a);
  }
  static ObjectExpr dual(const ObjectExpr &a) { return unary(Kind::Dual, a); }

  Kind kind() const noexcept { return node_->kind; }
  const BaseAtom &atom() const { return node_->atom; }
  const ObjectExpr &left() const { return *node_->left; }
  const ObjectExpr &right() const { return *node_->right; }
  const ObjectExpr &inner() const { return *node_->left; }

  friend bool operator==(const ObjectExpr &a, const ObjectExpr &b) {
    if (a.node_ == b.node_)
      return true;
    if (a.kind() != b.kind())
      return false;
    switch (a.kind()) {
    case Kind::Base:
      return a.atom() == b.atom();
    case Kind::Tensor:
    case Kind::Par:
      return a.left() == b.left() && a.right() == b.right();
    case Kind::Dagger:
    case Kind::Dual:
      return a.inner() == b.inner();
    case Kind::TensorUnit:
    case Kind::ParUnit:
      return true;
    }
    return false;
  }

  std::string to_string() const {
    switch (kind()) {
    case Kind::Base:
      return atom_string(atom());
    case Kind::Tensor:
      return "(" + left().to_string() + " * " + right().to_string() + ")";
    case Kind::Par:
      return "(" + left().to_string() + " + " + right().to_string() + ")";
    case Kind::TensorUnit:
      return "T";
    case Kind::ParUnit:
      return "B";
    case Kind::Dagger:
      return inner().to_string() + "'";
    case Kind::Dual:
      return inner().to_string() + "^*";
    }
    return "?";
  }

private:
  struct Node {
    Kind kind;
    BaseAtom atom;
    std::shared_ptr<const ObjectExpr> left;
    std::shared_ptr<const ObjectExpr> right;
  };

  explicit ObjectExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static ObjectExpr nullary(Kind k) {
    return ObjectExpr(
        std::make_shared<const Node>(Node{k, BaseAtom{}, nullptr, nullptr}));
  }
  static ObjectExpr unary(Kind k, const ObjectExpr &a) {
    return ObjectExpr(std::make_shared<const Node>(
        Node{k, BaseAtom{}, std::make_shared<const ObjectExpr>(a), nullptr}));
  }
  static ObjectExpr binary(Kind k, const ObjectExpr &l, const ObjectExpr &r) {
    return ObjectExpr(std::make_shared<const Node>(
        Node{k, BaseAtom{}, std::make_shared<const ObjectExpr>(l),
             std::make_shared<const ObjectExpr>(r)}));
  }

  static std::string atom_string(const BaseAtom &a) {
    if (const auto *n = std::get_if<std::size_t>(&a))
      return std::to_string(*n);
    if (const auto *z = std::get_if<cplane::CNum>(&a)) {
      std::ostringstream os;
      os << "(" << z->re << (z->im < 0 ? "-" : "+") << std::abs(z->im)
         << "i)";
      return os.str();
    }
    const auto &s = std::get<fmat::FinitenessSpace>(a);
    if (s.is_finite())
      return "F" + std::to_string(s.carrier().size());
    return s.a().kind() == fmat::SetFamily::Kind::Fin ? "W_fin" : "W_all";
  }

  std::shared_ptr<const Node> node_;
};

// Short spellings used when writing down composite laws.
inline ObjectExpr otimes(const ObjectExpr &l, const ObjectExpr &r) {
  return ObjectExpr::tensor(l, r);
}
inline ObjectExpr oplus(const ObjectExpr &l, const ObjectExpr &r) {
  return ObjectExpr::par(l, r);
}
inline ObjectExpr dag(const ObjectExpr &a) { return ObjectExpr::dagger(a); }
inline ObjectExpr dual(const ObjectExpr &a) { return ObjectExpr::dual(a); }

} // namespace muc

#endif // MUC_OBJECT_HPP
