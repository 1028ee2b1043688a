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

#ifndef MUC_LAWS_LDC_HPP
#define MUC_LAWS_LDC_HPP

#include <vector>

#include "muc/laws/kit.hpp"

namespace muc::laws {

/// Coherence laws of dagger isomix categories, unitary structure, unitary
/// duals and the mix functor M.
inline std::vector<Law> ldc_laws() {
  using S = StructuralMap;
  const ObjectExpr top = ObjectExpr::top();
  const ObjectExpr bot = ObjectExpr::bottom();
  std::vector<Law> out;

  // -- laxors and associators
  out.push_back(make_law(
      "DLDC1a", "a⊗ (λ⊗ ⊗ 1) λ⊗ = "
                "(1 ⊗ λ⊗) λ⊗ (a⊕⁻¹)†",
      3, kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj(), C = k.obj();
        k.eq(k.c({k.s(S::AssocTensor, {dag(A), dag(B), dag(C)}),
                  k.t(k.s(S::LaxTensor, {A, B}), k.id(dag(C))),
                  k.s(S::LaxTensor, {oplus(A, B), C})}),
             k.c({k.t(k.id(dag(A)), k.s(S::LaxTensor, {B, C})),
                  k.s(S::LaxTensor, {A, oplus(B, C)}),
                  k.d(k.s(S::AssocParInv, {A, B, C}))}));
      }));
  out.push_back(make_law(
      "DLDC1b", "a⊕ (λ⊕ ⊕ 1) λ⊕ = "
                "(1 ⊕ λ⊕) λ⊕ (a⊗⁻¹)†",
      3, kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj(), C = k.obj();
        k.eq(k.c({k.s(S::AssocPar, {dag(A), dag(B), dag(C)}),
                  k.p(k.s(S::LaxPar, {A, B}), k.id(dag(C))),
                  k.s(S::LaxPar, {otimes(A, B), C})}),
             k.c({k.p(k.id(dag(A)), k.s(S::LaxPar, {B, C})),
                  k.s(S::LaxPar, {A, otimes(B, C)}),
                  k.d(k.s(S::AssocTensorInv, {A, B, C}))}));
      }));

  // -- unit laxors and unitors
  out.push_back(make_law(
      "DLDC2a", "(λ⊤ ⊗ 1) λ⊗ = u⊗L (u⊕L)†", 1,
      kAllModels, [bot](Kit &k) {
        const auto A = k.obj();
        k.eq(k.c({k.t(k.s(S::LaxTop, {}), k.id(dag(A))),
                  k.s(S::LaxTensor, {bot, A})}),
             k.c({k.s(S::UnitTensorL, {dag(A)}),
                  k.d(k.s(S::UnitParL, {A}))}));
      }));
  out.push_back(make_law(
      "DLDC2b", "(λ⊥ ⊕ 1) λ⊕ = u⊕L (u⊗L)†", 1,
      kAllModels, [top](Kit &k) {
        const auto A = k.obj();
        k.eq(k.c({k.p(k.s(S::LaxBottom, {}), k.id(dag(A))),
                  k.s(S::LaxPar, {top, A})}),
             k.c({k.s(S::UnitParL, {dag(A)}),
                  k.d(k.s(S::UnitTensorL, {A}))}));
      }));
  out.push_back(make_law(
      "DLDC2c", "(1 ⊗ λ⊤) λ⊗ = u⊗R (u⊕R)†", 1,
      kAllModels, [bot](Kit &k) {
        const auto A = k.obj();
        k.eq(k.c({k.t(k.id(dag(A)), k.s(S::LaxTop, {})),
                  k.s(S::LaxTensor, {A, bot})}),
             k.c({k.s(S::UnitTensorR, {dag(A)}),
                  k.d(k.s(S::UnitParR, {A}))}));
      }));
  out.push_back(make_law(
      "DLDC2d", "(1 ⊕ λ⊥) λ⊕ = u⊕R (u⊗R)†", 1,
      kAllModels, [top](Kit &k) {
        const auto A = k.obj();
        k.eq(k.c({k.p(k.id(dag(A)), k.s(S::LaxBottom, {})),
                  k.s(S::LaxPar, {A, top})}),
             k.c({k.s(S::UnitParR, {dag(A)}),
                  k.d(k.s(S::UnitTensorR, {A}))}));
      }));

  // -- laxors and linear distributors
  out.push_back(make_law(
      "DLDC3a", "δL (λ⊗ ⊕ 1) λ⊕ = "
                "(1 ⊗ λ⊕) λ⊗ (δR)†",
      3, kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj(), C = k.obj();
        k.eq(k.c({k.s(S::DistL, {dag(A), dag(B), dag(C)}),
                  k.p(k.s(S::LaxTensor, {A, B}), k.id(dag(C))),
                  k.s(S::LaxPar, {oplus(A, B), C})}),
             k.c({k.t(k.id(dag(A)), k.s(S::LaxPar, {B, C})),
                  k.s(S::LaxTensor, {A, otimes(B, C)}),
                  k.d(k.s(S::DistR, {A, B, C}))}));
      }));
  out.push_back(make_law(
      "DLDC3b", "δR (1 ⊕ λ⊗) λ⊕ = "
                "(λ⊕ ⊗ 1) λ⊗ (δL)†",
      3, kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj(), C = k.obj();
        k.eq(k.c({k.s(S::DistR, {dag(A), dag(B), dag(C)}),
                  k.p(k.id(dag(A)), k.s(S::LaxTensor, {B, C})),
                  k.s(S::LaxPar, {A, oplus(B, C)})}),
             k.c({k.t(k.s(S::LaxPar, {A, B}), k.id(dag(C))),
                  k.s(S::LaxTensor, {otimes(A, B), C}),
                  k.d(k.s(S::DistL, {A, B, C}))}));
      }));

  // -- involutor
  out.push_back(make_law(
      "DLDC4a", "ι (λ⊗)† = (ι ⊕ ι) λ⊕", 2,
      kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj();
        k.eq(k.c({k.s(S::Involutor, {oplus(A, B)}),
                  k.d(k.s(S::LaxTensor, {A, B}))}),
             k.c({k.p(k.s(S::Involutor, {A}), k.s(S::Involutor, {B})),
                  k.s(S::LaxPar, {dag(A), dag(B)})}));
      }));
  out.push_back(make_law(
      "DLDC4b", "ι (λ⊕)† = (ι ⊗ ι) λ⊗", 2,
      kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj();
        k.eq(k.c({k.s(S::Involutor, {otimes(A, B)}),
                  k.d(k.s(S::LaxPar, {A, B}))}),
             k.c({k.t(k.s(S::Involutor, {A}), k.s(S::Involutor, {B})),
                  k.s(S::LaxTensor, {dag(A), dag(B)})}));
      }));
  out.push_back(make_law("DLDC5a", "ι (λ⊤)† = λ⊥", 0,
                         kAllModels, [bot](Kit &k) {
                           k.eq(k.c({k.s(S::Involutor, {bot}),
                                     k.d(k.s(S::LaxTop, {}))}),
                                k.s(S::LaxBottom, {}));
                         }));
  out.push_back(make_law("DLDC5b", "ι (λ⊥)† = λ⊤", 0,
                         kAllModels, [top](Kit &k) {
                           k.eq(k.c({k.s(S::Involutor, {top}),
                                     k.d(k.s(S::LaxBottom, {}))}),
                                k.s(S::LaxTop, {}));
                         }));
  out.push_back(make_law("DLDC6", "ι_{A†} = (ι_A⁻¹)†", 1, kAllModels,
                         [](Kit &k) {
                           const auto A = k.obj();
                           k.eq(k.s(S::Involutor, {dag(A)}),
                                k.d(k.s(S::InvolutorInv, {A})));
                         }));

  // -- symmetry
  out.push_back(make_law(
      "DLDC7a", "λ⊗ (c⊕)† = c⊗ λ⊗", 2,
      kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj();
        k.eq(k.c({k.s(S::LaxTensor, {A, B}), k.d(k.s(S::SymPar, {B, A}))}),
             k.c({k.s(S::SymTensor, {dag(A), dag(B)}),
                  k.s(S::LaxTensor, {B, A})}));
      }));
  out.push_back(make_law(
      "DLDC7b", "λ⊕ (c⊗)† = c⊕ λ⊕", 2, kAllModels,
      [](Kit &k) {
        const auto A = k.obj(), B = k.obj();
        k.eq(k.c({k.s(S::LaxPar, {A, B}), k.d(k.s(S::SymTensor, {B, A}))}),
             k.c({k.s(S::SymPar, {dag(A), dag(B)}),
                  k.s(S::LaxPar, {B, A})}));
      }));

  // -- mix
  out.push_back(make_law("DMIX", "m λ⊤ = λ⊥ m†", 0,
                         kAllModels, [](Kit &k) {
                           k.eq(k.c({k.s(S::Mix, {}), k.s(S::LaxTop, {})}),
                                k.c({k.s(S::LaxBottom, {}),
                                     k.d(k.s(S::Mix, {}))}));
                         }));
  out.push_back(make_law(
      "MXDAG", "mx_{A†,B†} λ⊕ = λ⊗ (mx_{A,B})†", 2,
      kAllModels, [](Kit &k) {
        const auto A = k.obj(), B = k.obj();
        k.eq(k.c({k.s(S::Mixor, {dag(A), dag(B)}), k.s(S::LaxPar, {A, B})}),
             k.c({k.s(S::LaxTensor, {A, B}), k.d(k.s(S::Mixor, {A, B}))}));
      }));
  out.push_back(make_law(
      "MXDEF",
      "(1 ⊗ u⊕L⁻¹)(1 ⊗ (m ⊕ 1)) δL (u⊗R ⊕ 1) = mx = "
      "(u⊕R⁻¹ ⊗ 1)((1 ⊕ m) ⊗ 1) δR (1 ⊕ u⊗L)",
      2, kAllModels, [top](Kit &k) {
        const auto A = k.obj(), B = k.obj();
        const auto mx = k.s(S::Mixor, {A, B});
        k.eq(k.c({k.t(k.id(A), k.s(S::UnitParLInv, {B})),
                  k.t(k.id(A), k.p(k.s(S::Mix, {}), k.id(B))),
                  k.s(S::DistL, {A, top, B}),
                  k.p(k.s(S::UnitTensorR, {A}), k.id(B))}),
             mx);
        k.eq(k.c({k.t(k.s(S::UnitParRInv, {A}), k.id(B)),
                  k.t(k.p(k.id(A), k.s(S::Mix, {})), k.id(B)),
                  k.s(S::DistR, {A, top, B}),
                  k.p(k.id(A), k.s(S::UnitTensorL, {B}))}),
             mx);
      }));

  // -- linear duals
  out.push_back(make_law(
      "SNAKE-L", "u⊗R⁻¹ (1 ⊗ η) δL (ε ⊕ 1) u⊕L = 1",
      1, kAllModels, [](Kit &k) {
        const auto A = k.dobj();
        k.eq(k.c({k.s(S::UnitTensorRInv, {A}),
                  k.t(k.id(A), k.s(S::DualUnit, {A})),
                  k.s(S::DistL, {A, dual(A), A}),
                  k.p(k.s(S::DualCounit, {A}), k.id(A)),
                  k.s(S::UnitParL, {A})}),
             k.id(A));
      }));
  out.push_back(make_law(
      "SNAKE-R", "u⊗L⁻¹ (η ⊗ 1) δR (1 ⊕ ε) u⊕R = 1",
      1, kAllModels, [](Kit &k) {
        const auto A = k.dobj();
        const auto As = dual(A);
        k.eq(k.c({k.s(S::UnitTensorLInv, {As}),
                  k.t(k.s(S::DualUnit, {A}), k.id(As)),
                  k.s(S::DistR, {As, A, As}),
                  k.p(k.id(As), k.s(S::DualCounit, {A})),
                  k.s(S::UnitParR, {As})}),
             k.id(As));
      }));

  // -- unitary structure
  out.push_back(make_law("U2", "φ_{A†} = ((φ_A)⁻¹)†", 1, kUnitaryModels,
                         [](Kit &k) {
                           const auto A = k.uobj();
                           k.eq(k.s(S::Unitary, {dag(A)}),
                                k.d(k.s(S::UnitaryInv, {A})));
                         }));
  out.push_back(make_law("U3", "φ_A φ_{A†} = ι_A", 1, kUnitaryModels,
                         [](Kit &k) {
                           const auto A = k.uobj();
                           k.eq(k.c({k.s(S::Unitary, {A}),
                                     k.s(S::Unitary, {dag(A)})}),
                                k.s(S::Involutor, {A}));
                         }));
  out.push_back(make_law("U4a", "λ⊥ (φ_⊤)⁻¹ = m", 0,
                         kUnitaryModels, [top](Kit &k) {
                           k.eq(k.c({k.s(S::LaxBottom, {}),
                                     k.s(S::UnitaryInv, {top})}),
                                k.s(S::Mix, {}));
                         }));
  out.push_back(make_law("U4b", "φ_⊥ (λ⊤)⁻¹ = m", 0,
                         kUnitaryModels, [bot](Kit &k) {
                           k.eq(k.c({k.s(S::Unitary, {bot}),
                                     k.s(S::LaxTopInv, {})}),
                                k.s(S::Mix, {}));
                         }));
  out.push_back(make_law(
      "U5a", "(φ_A ⊗ φ_B) λ⊗ = mx φ_{A⊕B}", 2,
      kUnitaryModels, [](Kit &k) {
        const auto A = k.uobj(), B = k.uobj();
        k.eq(k.c({k.t(k.s(S::Unitary, {A}), k.s(S::Unitary, {B})),
                  k.s(S::LaxTensor, {A, B}),
                  k.s(S::UnitaryInv, {oplus(A, B)})}),
             k.s(S::Mixor, {A, B}));
      }));
  out.push_back(make_law(
      "U5b", "φ_{A⊗B} (λ⊕)⁻¹ (φ_A⁻¹ ⊕ φ_B⁻¹) = mx", 2,
      kUnitaryModels, [](Kit &k) {
        const auto A = k.uobj(), B = k.uobj();
        k.eq(k.c({k.s(S::Unitary, {otimes(A, B)}),
                  k.s(S::LaxParInv, {A, B}),
                  k.p(k.s(S::UnitaryInv, {A}), k.s(S::UnitaryInv, {B}))}),
             k.s(S::Mixor, {A, B}));
      }));
  out.push_back(make_law(
      "UDUALa", "η (φ ⊕ φ) c⊕ = λ⊤ ε† λ⊕⁻¹",
      1, kUnitaryModels, [](Kit &k) {
        const auto X = k.uobj();
        const auto Xs = dual(X);
        k.eq(k.c({k.s(S::DualUnit, {X}),
                  k.p(k.s(S::Unitary, {Xs}), k.s(S::Unitary, {X})),
                  k.s(S::SymPar, {dag(Xs), dag(X)})}),
             k.c({k.s(S::LaxTop, {}), k.d(k.s(S::DualCounit, {X})),
                  k.s(S::LaxParInv, {X, Xs})}));
      }));
  out.push_back(make_law(
      "UDUALb", "(φ ⊗ φ) λ⊗ η† = c⊗ ε λ⊥",
      1, kUnitaryModels, [](Kit &k) {
        const auto X = k.uobj();
        const auto Xs = dual(X);
        k.eq(k.c({k.t(k.s(S::Unitary, {Xs}), k.s(S::Unitary, {X})),
                  k.s(S::LaxTensor, {Xs, X}), k.d(k.s(S::DualUnit, {X}))}),
             k.c({k.s(S::SymTensor, {Xs, X}), k.s(S::DualCounit, {X}),
                  k.s(S::LaxBottom, {})}));
      }));
  out.push_back(make_law(
      "UISO", "α φ_A α† = φ_A for unitary α : A → A", 1,
      kUnitaryModels, [](Kit &k) {
        const auto A = k.uobj();
        const auto alpha = k.model().random_unitary(A, k.rng());
        k.eq(k.s(S::Unitary, {A}),
             k.c({alpha.forward, k.s(S::Unitary, {A}),
                  k.d(alpha.forward)}));
        k.eq(k.c({alpha.forward, alpha.inverse}), k.id(A));
      }));

  // -- the mix functor M
  out.push_back(make_law(
      "MIXPRES", "mx_{MU,MV} = m⊗ M(mx) n⊕", 2, kAllModels,
      [](Kit &k) {
        const auto U = k.uobj(), V = k.uobj();
        k.eq(k.s(S::Mixor, {k.M(U), k.M(V)}),
             k.c({k.s(S::StrengthTensor, {U, V}),
                  k.M(k.us(S::Mixor, {U, V})),
                  k.s(S::StrengthPar, {U, V})}));
      }));
  out.push_back(make_law("FF-MIX", "M(m) = n⊥ m m⊤", 0, kAllModels,
                         [](Kit &k) {
                           k.eq(k.M(k.us(S::Mix, {})),
                                k.c({k.s(S::StrengthBottom, {}),
                                     k.s(S::Mix, {}),
                                     k.s(S::StrengthTop, {})}));
                         }));
  out.push_back(make_law("FF-ISOMIX", "m⁻¹ = m⊤ M(m⁻¹) n⊥", 0,
                         kAllModels, [](Kit &k) {
                           k.eq(k.s(S::MixInv, {}),
                                k.c({k.s(S::StrengthTop, {}),
                                     k.M(k.us(S::MixInv, {})),
                                     k.s(S::StrengthBottom, {})}));
                         }));
  out.push_back(make_law(
      "FF-FUNCT", "M(f g) = M(f) M(g), M(1) = 1", 2, kAllModels, [](Kit &k) {
        const Model &u = k.model().unitary();
        const auto U = k.uobj();
        const auto f = k.umor(U);
        const auto g = k.umor(f.cod());
        k.eq(k.M(u.compose(f, g)), k.c({k.M(f), k.M(g)}));
        k.eq(k.M(u.identity(U)), k.id(k.M(U)));
      }));
  out.push_back(make_law(
      "FF-NAT",
      "(Mf ⊗ Mg) m⊗ = m⊗ M(f ⊗ g), "
      "M(f ⊕ g) n⊕ = n⊕ (Mf ⊕ Mg)",
      2, kAllModels, [](Kit &k) {
        const Model &u = k.model().unitary();
        const auto U = k.uobj(), V = k.uobj();
        const auto f = k.umor(U);
        const auto g = k.umor(V);
        k.eq(k.c({k.t(k.M(f), k.M(g)),
                  k.s(S::StrengthTensor, {f.cod(), g.cod()})}),
             k.c({k.s(S::StrengthTensor, {U, V}), k.M(u.tensor(f, g))}));
        k.eq(k.c({k.M(u.par(f, g)), k.s(S::StrengthPar, {f.cod(), g.cod()})}),
             k.c({k.s(S::StrengthPar, {U, V}), k.p(k.M(f), k.M(g))}));
      }));
  out.push_back(make_law(
      "PRES", "ι (ρ_X)† = M(ι) ρ_{X†}", 1, kAllModels, [](Kit &k) {
        const auto X = k.uobj();
        k.eq(k.c({k.s(S::Involutor, {k.M(X)}),
                  k.d(k.s(S::Preservator, {X}))}),
             k.c({k.M(k.us(S::Involutor, {X})),
                  k.s(S::Preservator, {dag(X)})}));
      }));
  out.push_back(make_law(
      "PRES-NAT", "M(f†) ρ_X = ρ_Y M(f)†", 1, kAllModels, [](Kit &k) {
        const Model &u = k.model().unitary();
        const auto X = k.uobj();
        const auto f = k.umor(X);
        k.eq(k.c({k.M(u.dagger(f)), k.s(S::Preservator, {X})}),
             k.c({k.s(S::Preservator, {f.cod()}), k.d(k.M(f))}));
      }));
  out.push_back(make_law(
      "RHO-TPa",
      "m⊗ M(φ) ρ (m⊗)† = "
      "(M(φ) ⊗ M(φ)) (ρ ⊗ ρ) λ⊗ mx†",
      2, kAllModels, [](Kit &k) {
        const auto C = k.uobj(), D = k.uobj();
        const auto MC = k.M(C), MD = k.M(D);
        k.eq(k.c({k.s(S::StrengthTensor, {C, D}),
                  k.M(k.us(S::Unitary, {otimes(C, D)})),
                  k.s(S::Preservator, {otimes(C, D)}),
                  k.d(k.s(S::StrengthTensor, {C, D}))}),
             k.c({k.t(k.M(k.us(S::Unitary, {C})), k.M(k.us(S::Unitary, {D}))),
                  k.t(k.s(S::Preservator, {C}), k.s(S::Preservator, {D})),
                  k.s(S::LaxTensor, {MC, MD}), k.d(k.s(S::Mixor, {MC, MD}))}));
      }));
  out.push_back(make_law(
      "RHO-TPb",
      "n⊕⁻¹ M(φ) ρ = "
      "(M(φ) ⊕ M(φ)) (ρ ⊕ ρ) λ⊕ (mx⁻¹)† (n⊕)†",
      2, kAllModels, [](Kit &k) {
        const auto C = k.uobj(), D = k.uobj();
        const auto MC = k.M(C), MD = k.M(D);
        k.eq(k.c({k.s(S::StrengthParInv, {C, D}),
                  k.M(k.us(S::Unitary, {oplus(C, D)})),
                  k.s(S::Preservator, {oplus(C, D)})}),
             k.c({k.p(k.M(k.us(S::Unitary, {C})), k.M(k.us(S::Unitary, {D}))),
                  k.p(k.s(S::Preservator, {C}), k.s(S::Preservator, {D})),
                  k.s(S::LaxPar, {MC, MD}), k.d(k.s(S::MixorInv, {MC, MD})),
                  k.d(k.s(S::StrengthPar, {C, D}))}));
      }));

  // -- naturality
  out.push_back(make_law(
      "MXSLIDE-a", "mx⁻¹ (f ⊗ g) = (f ⊕ g) mx⁻¹", 2, kAllModels,
      [](Kit &k) {
        const auto A = k.mobj(), B = k.mobj();
        const auto f = k.model().discrete() ? k.id(A) : k.mor(A, k.mobj());
        const auto g = k.model().discrete() ? k.id(B) : k.mor(B, k.mobj());
        k.eq(k.c({k.s(S::MixorInv, {A, B}), k.t(f, g)}),
             k.c({k.p(f, g), k.s(S::MixorInv, {f.cod(), g.cod()})}));
      }));
  out.push_back(make_law(
      "MXSLIDE-b",
      "mx⁻¹_{U⊕V,W} (mx⁻¹_{U,V} ⊗ 1) = (mx⁻¹_{U,V} ⊕ 1) mx⁻¹_{U⊗V,W}",
      3, kAllModels, [](Kit &k) {
        const auto U = k.mobj(), V = k.mobj(), W = k.mobj();
        k.eq(k.c({k.s(S::MixorInv, {oplus(U, V), W}),
                  k.t(k.s(S::MixorInv, {U, V}), k.id(W))}),
             k.c({k.p(k.s(S::MixorInv, {U, V}), k.id(W)),
                  k.s(S::MixorInv, {otimes(U, V), W})}));
      }));
  out.push_back(make_law("IOTA-NAT", "ι_A f†† = f ι_B", 2, kAllModels,
                         [](Kit &k) {
                           const auto A = k.obj();
                           const auto f = k.mor(A);
                           k.eq(k.c({k.s(S::Involutor, {A}), k.d(k.d(f))}),
                                k.c({f, k.s(S::Involutor, {f.cod()})}));
                         }));
  out.push_back(make_law(
      "DAG-INV", "f†† = ι_A⁻¹ f ι_B", 2, kAllModels, [](Kit &k) {
        const auto A = k.obj();
        const auto f = k.mor(A);
        k.eq(k.d(k.d(f)), k.c({k.s(S::InvolutorInv, {A}), f,
                               k.s(S::Involutor, {f.cod()})}));
      }));
  out.push_back(make_law(
      "DAG-FUNCT", "(f g)† = g† f†, 1† = 1", 3, kAllModels, [](Kit &k) {
        const auto A = k.obj();
        const auto f = k.mor(A);
        const auto g = k.mor(f.cod());
        k.eq(k.d(k.c({f, g})), k.c({k.d(g), k.d(f)}));
        k.eq(k.d(k.id(A)), k.id(dag(A)));
      }));
  return out;
}

} // namespace muc::laws

#endif // MUC_LAWS_LDC_HPP
