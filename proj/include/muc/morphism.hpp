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

#ifndef MUC_MORPHISM_HPP
#define MUC_MORPHISM_HPP

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "muc/matrix.hpp"
#include "muc/object.hpp"
#include "muc/sparse.hpp"

namespace muc {

/// Payload of a cplane morphism: the only maps are identities, recorded by
/// the interpreted endpoints.
struct CPair {
  cplane::CNum dom;
  cplane::CNum cod;
};

using Payload = std::variant<DenseMatrix, fmat::SparseMatrix, CPair>;

/// A model-tagged arrow. Immutable after construction.
class Morphism {
public:
  Morphism(std::string model, ObjectExpr dom, ObjectExpr cod, Payload payload)
      : model_(std::move(model)), dom_(std::move(dom)), cod_(std::move(cod)),
        payload_(std::move(payload)) {}

  const std::string &model() const noexcept { return model_; }
  const ObjectExpr &dom() const noexcept { return dom_; }
  const ObjectExpr &cod() const noexcept { return cod_; }
  const Payload &payload() const noexcept { return payload_; }

  const DenseMatrix &dense() const { return std::get<DenseMatrix>(payload_); }
  const fmat::SparseMatrix &sparse() const {
    return std::get<fmat::SparseMatrix>(payload_);
  }
  const CPair &pair() const { return std::get<CPair>(payload_); }

private:
  std::string model_;
  ObjectExpr dom_;
  ObjectExpr cod_;
  Payload payload_;
};

enum class StructuralMap {
  AssocTensor, AssocTensorInv, AssocPar, AssocParInv,
  UnitTensorL, UnitTensorLInv, UnitTensorR, UnitTensorRInv,
  UnitParL, UnitParLInv, UnitParR, UnitParRInv,
  SymTensor, SymPar,
  DistL, DistR,
  Mix, MixInv, Mixor, MixorInv,
  LaxTensor, LaxTensorInv, LaxPar, LaxParInv,
  LaxTop, LaxTopInv, LaxBottom, LaxBottomInv,
  Involutor, InvolutorInv,
  Unitary, UnitaryInv,
  DualUnit, DualCounit,
  Preservator, PreservatorInv,
  StrengthTensor, StrengthTensorInv, StrengthPar, StrengthParInv,
  StrengthTop, StrengthTopInv, StrengthBottom, StrengthBottomInv,
};

struct StructuralInfo {
  StructuralMap map;
  std::string_view name;
  std::size_t arity;
};

inline constexpr std::array kStructuralInfo{
    StructuralInfo{StructuralMap::AssocTensor, "a_tensor", 3},
    StructuralInfo{StructuralMap::AssocTensorInv, "a_tensor^-1", 3},
    StructuralInfo{StructuralMap::AssocPar, "a_par", 3},
    StructuralInfo{StructuralMap::AssocParInv, "a_par^-1", 3},
    StructuralInfo{StructuralMap::UnitTensorL, "u_tensor_L", 1},
    StructuralInfo{StructuralMap::UnitTensorLInv, "u_tensor_L^-1", 1},
    StructuralInfo{StructuralMap::UnitTensorR, "u_tensor_R", 1},
    StructuralInfo{StructuralMap::UnitTensorRInv, "u_tensor_R^-1", 1},
    StructuralInfo{StructuralMap::UnitParL, "u_par_L", 1},
    StructuralInfo{StructuralMap::UnitParLInv, "u_par_L^-1", 1},
    StructuralInfo{StructuralMap::UnitParR, "u_par_R", 1},
    StructuralInfo{StructuralMap::UnitParRInv, "u_par_R^-1", 1},
    StructuralInfo{StructuralMap::SymTensor, "c_tensor", 2},
    StructuralInfo{StructuralMap::SymPar, "c_par", 2},
    StructuralInfo{StructuralMap::DistL, "delta_L", 3},
    StructuralInfo{StructuralMap::DistR, "delta_R", 3},
    StructuralInfo{StructuralMap::Mix, "m", 0},
    StructuralInfo{StructuralMap::MixInv, "m^-1", 0},
    StructuralInfo{StructuralMap::Mixor, "mx", 2},
    StructuralInfo{StructuralMap::MixorInv, "mx^-1", 2},
    StructuralInfo{StructuralMap::LaxTensor, "lambda_tensor", 2},
    StructuralInfo{StructuralMap::LaxTensorInv, "lambda_tensor^-1", 2},
    StructuralInfo{StructuralMap::LaxPar, "lambda_par", 2},
    StructuralInfo{StructuralMap::LaxParInv, "lambda_par^-1", 2},
    StructuralInfo{StructuralMap::LaxTop, "lambda_top", 0},
    StructuralInfo{StructuralMap::LaxTopInv, "lambda_top^-1", 0},
    StructuralInfo{StructuralMap::LaxBottom, "lambda_bot", 0},
    StructuralInfo{StructuralMap::LaxBottomInv, "lambda_bot^-1", 0},
    StructuralInfo{StructuralMap::Involutor, "iota", 1},
    StructuralInfo{StructuralMap::InvolutorInv, "iota^-1", 1},
    StructuralInfo{StructuralMap::Unitary, "phi", 1},
    StructuralInfo{StructuralMap::UnitaryInv, "phi^-1", 1},
    StructuralInfo{StructuralMap::DualUnit, "eta", 1},
    StructuralInfo{StructuralMap::DualCounit, "epsilon", 1},
    StructuralInfo{StructuralMap::Preservator, "rho", 1},
    StructuralInfo{StructuralMap::PreservatorInv, "rho^-1", 1},
    StructuralInfo{StructuralMap::StrengthTensor, "m_tensor", 2},
    StructuralInfo{StructuralMap::StrengthTensorInv, "m_tensor^-1", 2},
    StructuralInfo{StructuralMap::StrengthPar, "n_par", 2},
    StructuralInfo{StructuralMap::StrengthParInv, "n_par^-1", 2},
    StructuralInfo{StructuralMap::StrengthTop, "m_top", 0},
    StructuralInfo{StructuralMap::StrengthTopInv, "m_top^-1", 0},
    StructuralInfo{StructuralMap::StrengthBottom, "n_bot", 0},
    StructuralInfo{StructuralMap::StrengthBottomInv, "n_bot^-1", 0},
};

inline const StructuralInfo &info(StructuralMap m) {
  return kStructuralInfo[static_cast<std::size_t>(m)];
}

/// True for the maps whose arguments are objects of the unitary category
/// and whose endpoints mention the functor M.
inline bool is_functor_strength(StructuralMap m) {
  switch (m) {
  case StructuralMap::Preservator:
  case StructuralMap::PreservatorInv:
  case StructuralMap::StrengthTensor:
  case StructuralMap::StrengthTensorInv:
  case StructuralMap::StrengthPar:
  case StructuralMap::StrengthParInv:
  case StructuralMap::StrengthTop:
  case StructuralMap::StrengthTopInv:
  case StructuralMap::StrengthBottom:
  case StructuralMap::StrengthBottomInv:
    return true;
  default:
    return false;
  }
}

struct Signature {
  ObjectExpr dom;
  ObjectExpr cod;
};

using ObjectMap = std::function<ObjectExpr(const ObjectExpr &)>;

/// Canonical domain and codomain of a structural map. `embed` interprets
/// the functor M on objects of the unitary category.
inline Signature signature(StructuralMap m, std::span<const ObjectExpr> args,
                           const ObjectMap &embed) {
  using S = StructuralMap;
  const auto &inf = info(m);
  if (args.size() != inf.arity)
    throw ArityError(std::string(inf.name) + " takes " +
                     std::to_string(inf.arity) + " objects, got " +
                     std::to_string(args.size()));
  auto flip = [](Signature s) { return Signature{s.cod, s.dom}; };
  const auto T = ObjectExpr::top();
  const auto B = ObjectExpr::bottom();
  switch (m) {
  case S::AssocTensor:
    return {otimes(args[0], otimes(args[1], args[2])),
            otimes(otimes(args[0], args[1]), args[2])};
  case S::AssocPar:
    return {oplus(args[0], oplus(args[1], args[2])),
            oplus(oplus(args[0], args[1]), args[2])};
  case S::UnitTensorL:
    return {otimes(T, args[0]), args[0]};
  case S::UnitTensorR:
    return {otimes(args[0], T), args[0]};
  case S::UnitParL:
    return {oplus(B, args[0]), args[0]};
  case S::UnitParR:
    return {oplus(args[0], B), args[0]};
  case S::SymTensor:
    return {otimes(args[0], args[1]), otimes(args[1], args[0])};
  case S::SymPar:
    return {oplus(args[0], args[1]), oplus(args[1], args[0])};
  case S::DistL:
    return {otimes(args[0], oplus(args[1], args[2])),
            oplus(otimes(args[0], args[1]), args[2])};
  case S::DistR:
    return {otimes(oplus(args[0], args[1]), args[2]),
            oplus(args[0], otimes(args[1], args[2]))};
  case S::Mix:
    return {B, T};
  case S::Mixor:
    return {otimes(args[0], args[1]), oplus(args[0], args[1])};
  case S::LaxTensor:
    return {otimes(dag(args[0]), dag(args[1])), dag(oplus(args[0], args[1]))};
  case S::LaxPar:
    return {oplus(dag(args[0]), dag(args[1])), dag(otimes(args[0], args[1]))};
  case S::LaxTop:
    return {T, dag(B)};
  case S::LaxBottom:
    return {B, dag(T)};
  case S::Involutor:
    return {args[0], dag(dag(args[0]))};
  case S::Unitary:
    return {args[0], dag(args[0])};
  case S::DualUnit:
    return {T, oplus(dual(args[0]), args[0])};
  case S::DualCounit:
    return {otimes(args[0], dual(args[0])), B};
  case S::Preservator:
    return {embed(dag(args[0])), dag(embed(args[0]))};
  case S::StrengthTensor:
    return {otimes(embed(args[0]), embed(args[1])),
            embed(otimes(args[0], args[1]))};
  case S::StrengthPar:
    return {embed(oplus(args[0], args[1])),
            oplus(embed(args[0]), embed(args[1]))};
  case S::StrengthTop:
    return {T, embed(T)};
  case S::StrengthBottom:
    return {embed(B), B};

  case S::AssocTensorInv:
    return flip(signature(S::AssocTensor, args, embed));
  case S::AssocParInv:
    return flip(signature(S::AssocPar, args, embed));
  case S::UnitTensorLInv:
    return flip(signature(S::UnitTensorL, args, embed));
  case S::UnitTensorRInv:
    return flip(signature(S::UnitTensorR, args, embed));
  case S::UnitParLInv:
    return flip(signature(S::UnitParL, args, embed));
  case S::UnitParRInv:
    return flip(signature(S::UnitParR, args, embed));
  case S::MixInv:
    return flip(signature(S::Mix, args, embed));
  case S::MixorInv:
    return flip(signature(S::Mixor, args, embed));
  case S::LaxTensorInv:
    return flip(signature(S::LaxTensor, args, embed));
  case S::LaxParInv:
    return flip(signature(S::LaxPar, args, embed));
  case S::LaxTopInv:
    return flip(signature(S::LaxTop, args, embed));
  case S::LaxBottomInv:
    return flip(signature(S::LaxBottom, args, embed));
  case S::InvolutorInv:
    return flip(signature(S::Involutor, args, embed));
  case S::UnitaryInv:
    return flip(signature(S::Unitary, args, embed));
  case S::PreservatorInv:
    return flip(signature(S::Preservator, args, embed));
  case S::StrengthTensorInv:
    return flip(signature(S::StrengthTensor, args, embed));
  case S::StrengthParInv:
    return flip(signature(S::StrengthPar, args, embed));
  case S::StrengthTopInv:
    return flip(signature(S::StrengthTop, args, embed));
  case S::StrengthBottomInv:
    return flip(signature(S::StrengthBottom, args, embed));
  }
  throw ArityError("unknown structural map");
}

} // namespace muc

#endif // MUC_MORPHISM_HPP
