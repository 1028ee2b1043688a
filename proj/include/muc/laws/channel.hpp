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

#ifndef MUC_LAWS_CHANNEL_HPP
#define MUC_LAWS_CHANNEL_HPP

#include <vector>

#include "muc/cpinf/environment.hpp"
#include "muc/cpinf/kraus.hpp"
#include "muc/laws/kit.hpp"
#include "muc/models/cplane_model.hpp"

namespace muc::laws {

namespace detail {

using cpinf::KrausMorphism;

inline bool is_cplane(const Model &m) {
  return dynamic_cast<const CplaneModel *>(&m) != nullptr;
}

/// Random Kraus map out of `a`. In the complex plane the codomain is forced
/// by the ancilla: (=, r) : c -> c / r.
/// With `small`, matrix ancillas have dimension at most 2 so that nested
/// composites stay within the dense size limit.
inline KrausMorphism kraus_from(Kit &k, const ObjectExpr &a,
                                bool small = false) {
  const Model &m = k.model();
  const ObjectExpr u =
      small && !is_cplane(m)
          ? k.note(ObjectExpr::dim(static_cast<std::size_t>(
                k.rng().integer(1, 2))))
          : k.uobj();
  if (is_cplane(m)) {
    const Complex r = cplane_value(m.embed_object(u));
    const ObjectExpr b = k.note(ObjectExpr::number(cplane::CNum(
        cplane_value(a) / r)));
    return cpinf::kraus_new(m, m.random_morphism(a, oplus(m.embed_object(u), b),
                                                 k.rng()),
                            u);
  }
  return cpinf::random_kraus(m, a, k.obj(), u, k.rng());
}

inline KrausMorphism kraus_any(Kit &k, bool small = false) {
  return kraus_from(k, k.obj(), small);
}

/// Channel distance: Choi distance for matrix models, 0/1 in the complex
/// plane where the decision is a closed form.
inline double dist(const Model &m, const KrausMorphism &k1,
                   const KrausMorphism &k2) {
  if (is_cplane(m))
    return cpinf::equiv_decide(m, k1, k2) ? 0.0 : 1.0;
  return cpinf::channel_distance(m, k1, k2);
}

inline DenseMatrix random_density(std::size_t n, Rng &rng) {
  const DenseMatrix g = rng.gaussian_matrix(n, n);
  DenseMatrix rho = g * mat_dagger(g);
  return Complex(1.0 / trace(rho).real()) * rho;
}

} // namespace detail

/// Laws of the channel category built from Kraus maps.
inline std::vector<Law> channel_laws() {
  using detail::dist;
  using detail::kraus_any;
  using detail::kraus_from;
  using S = StructuralMap;
  namespace cp = cpinf;
  std::vector<Law> out;

  out.push_back(make_law(
      "CPI-ASSOC", "(k1 k2) k3 ~ k1 (k2 k3)", 3, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const auto k2 = kraus_from(k, k1.cod());
        const auto k3 = kraus_from(k, k2.cod());
        k.defect(dist(m, cp::kraus_compose(m, cp::kraus_compose(m, k1, k2), k3),
                      cp::kraus_compose(m, k1, cp::kraus_compose(m, k2, k3))));
      }));
  out.push_back(make_law(
      "CPI-IDL", "1 k ~ k", 1, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        k.defect(dist(
            m, cp::kraus_compose(m, cp::kraus_identity(m, k1.dom()), k1), k1));
      }));
  out.push_back(make_law(
      "CPI-IDR", "k 1 ~ k", 1, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        k.defect(dist(
            m, cp::kraus_compose(m, k1, cp::kraus_identity(m, k1.cod())), k1));
      }));
  out.push_back(make_law(
      "CPI-WELLDEF",
      "k1 ~ k1′, k2 ~ k2′ implies k1 k2 ~ k1′ k2′ and k1 ⊗ k2 ~ k1′ ⊗ k2′",
      2, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const auto k2 = kraus_from(k, k1.cod());
        const auto k1v = cp::unitary_variant(m, k1, k.rng());
        const auto k2v = cp::unitary_variant(m, k2, k.rng());
        k.defect(dist(m, cp::kraus_compose(m, k1, k2),
                      cp::kraus_compose(m, k1v, k2v)));
        k.defect(dist(m, cp::kraus_tensor(m, k1, k2),
                      cp::kraus_tensor(m, k1v, k2v)));
        k.defect(dist(m, cp::kraus_par(m, k1, k2), cp::kraus_par(m, k1v, k2v)));
      }));
  out.push_back(make_law(
      "CPI-UEQUIV",
      "(f (M(α) ⊕ 1), U) ~ (f, U) for unitary α; isometric padding",
      1, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        k.defect(dist(m, cp::unitary_variant(m, k1, k.rng()), k1));
        if (!detail::is_cplane(m)) {
          const auto extra = static_cast<std::size_t>(k.rng().integer(1, 2));
          k.defect(dist(m, cp::isometric_padding(m, k1, extra, k.rng()), k1));
        }
      }));
  out.push_back(make_law(
      "CPI-BIFUNCT",
      "(k1 * k2)(k3 * k4) ~ (k1 k3) * (k2 k4) for * in {⊗, ⊕}, "
      "1 * 1 ~ 1",
      4, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k, true), k2 = kraus_any(k, true);
        const auto k3 = kraus_from(k, k1.cod(), true);
        const auto k4 = kraus_from(k, k2.cod(), true);
        k.defect(dist(m,
                      cp::kraus_compose(m, cp::kraus_tensor(m, k1, k2),
                                        cp::kraus_tensor(m, k3, k4)),
                      cp::kraus_tensor(m, cp::kraus_compose(m, k1, k3),
                                       cp::kraus_compose(m, k2, k4))));
        k.defect(dist(m,
                      cp::kraus_compose(m, cp::kraus_par(m, k1, k2),
                                        cp::kraus_par(m, k3, k4)),
                      cp::kraus_par(m, cp::kraus_compose(m, k1, k3),
                                    cp::kraus_compose(m, k2, k4))));
        const auto a = k1.dom(), b = k2.dom();
        k.defect(dist(m,
                      cp::kraus_tensor(m, cp::kraus_identity(m, a),
                                       cp::kraus_identity(m, b)),
                      cp::kraus_identity(m, otimes(a, b))));
        k.defect(dist(m,
                      cp::kraus_par(m, cp::kraus_identity(m, a),
                                    cp::kraus_identity(m, b)),
                      cp::kraus_identity(m, oplus(a, b))));
      }));
  out.push_back(make_law(
      "CPI-MIX",
      "(k1 ⊗ k2) Q(mx) ~ Q(mx) (k1 ⊕ k2), Q(m) Q(m⁻¹) ~ 1 ~ Q(m⁻¹) Q(m)",
      2, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k), k2 = kraus_any(k);
        k.defect(dist(
            m,
            cp::kraus_compose(
                m, cp::kraus_tensor(m, k1, k2),
                cp::functor_Q(m, m.structural(S::Mixor, {k1.cod(), k2.cod()}))),
            cp::kraus_compose(
                m, cp::functor_Q(m, m.structural(S::Mixor, {k1.dom(), k2.dom()})),
                cp::kraus_par(m, k1, k2))));
        const auto qm = cp::functor_Q(m, m.structural(S::Mix, {}));
        const auto qmi = cp::functor_Q(m, m.structural(S::MixInv, {}));
        k.defect(dist(m, cp::kraus_compose(m, qm, qmi),
                      cp::kraus_identity(m, ObjectExpr::bottom())));
        k.defect(dist(m, cp::kraus_compose(m, qmi, qm),
                      cp::kraus_identity(m, ObjectExpr::top())));
      }));
  out.push_back(make_law(
      "Q-FUNCT",
      "Q(f g) ~ Q(f) Q(g), Q(1) ~ 1, Q(f ⊗ g) ~ Q(f) ⊗ Q(g), "
      "Q(f ⊕ g) ~ Q(f) ⊕ Q(g)",
      2, kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const auto f = k.mor(k.obj());
        const auto g = k.mor(f.cod());
        const auto h = k.mor(k.obj());
        const auto Q = [&](const Morphism &x) { return cp::functor_Q(m, x); };
        k.defect(dist(m, Q(m.compose(f, g)), cp::kraus_compose(m, Q(f), Q(g))));
        k.defect(dist(m, Q(m.identity(f.dom())),
                      cp::kraus_identity(m, f.dom())));
        k.defect(dist(m, Q(m.tensor(f, h)), cp::kraus_tensor(m, Q(f), Q(h))));
        k.defect(dist(m, Q(m.par(f, h)), cp::kraus_par(m, Q(f), Q(h))));
      }));
  out.push_back(make_law(
      "N-FUNCT", "N(f g) ~ N(f) N(g), N(f ⊗ g) ~ N(f) ⊗ N(g)", 2,
      kAllModels, [](Kit &k) {
        const Model &m = k.model();
        const Model &u = m.unitary();
        const auto f = k.umor(k.uobj());
        const auto g = k.umor(f.cod());
        const auto h = k.umor(k.uobj());
        const auto N = [&](const Morphism &x) { return cp::functor_N(m, x); };
        k.defect(dist(m, N(u.compose(f, g)), cp::kraus_compose(m, N(f), N(g))));
        k.defect(dist(m, N(u.tensor(f, h)), cp::kraus_tensor(m, N(f), N(h))));
        k.defect(dist(m, N(u.identity(f.dom())),
                      cp::kraus_identity(m, m.embed_object(f.dom()))));
      }));

  // -- dagger on channels (matrix model)
  out.push_back(make_law(
      "CPI-DAG-INV", "Q(ι) k†† ~ k Q(ι)", 1, kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const auto kdd = cp::kraus_dagger(m, cp::kraus_dagger(m, k1));
        k.defect(dist(
            m,
            cp::kraus_compose(
                m, cp::functor_Q(m, m.structural(S::Involutor, {k1.dom()})),
                kdd),
            cp::kraus_compose(
                m, k1,
                cp::functor_Q(m, m.structural(S::Involutor, {k1.cod()})))));
      }));
  out.push_back(make_law(
      "CPI-DAG-CONTRA", "(k1 k2)† ~ k2† k1†", 2, kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const auto k2 = kraus_from(k, k1.cod());
        k.defect(dist(m, cp::kraus_dagger(m, cp::kraus_compose(m, k1, k2)),
                      cp::kraus_compose(m, cp::kraus_dagger(m, k2),
                                        cp::kraus_dagger(m, k1))));
      }));
  out.push_back(make_law(
      "CPI-DAG-WIRE",
      "adjoint from blocks ~ adjoint wired through η, φ and ρ", 1,
      kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        k.defect(dist(m, cp::kraus_dagger(m, k1),
                      cp::kraus_dagger_wired(m, k1)));
      }));
  out.push_back(make_law(
      "CPI-DAG-N", "N(f)† ~ N(f†), Q(f)† ~ Q(f†)", 1, kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto f = k.umor(k.uobj());
        k.defect(dist(m, cp::kraus_dagger(m, cp::functor_N(m, f)),
                      cp::functor_N(m, m.unitary().dagger(f))));
        const auto g = k.mor(k.obj());
        k.defect(dist(m, cp::kraus_dagger(m, cp::functor_Q(m, g)),
                      cp::functor_Q(m, m.dagger(g))));
      }));
  out.push_back(make_law(
      "CHOI-DAG", "Choi(k†)[(a,b),(a′,b′)] = conj Choi(k)[(b,a),(b′,a′)]", 1,
      kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const auto c = cp::to_choi(m, k1);
        const auto cd = cp::to_choi(m, cp::kraus_dagger(m, k1));
        double d = 0.0;
        for (std::size_t b = 0; b < c.b; ++b)
          for (std::size_t a = 0; a < c.a; ++a)
            for (std::size_t b2 = 0; b2 < c.b; ++b2)
              for (std::size_t a2 = 0; a2 < c.a; ++a2)
                d = std::max(d, std::abs(cd.matrix(a * c.b + b, a2 * c.b + b2) -
                                         std::conj(c.matrix(b * c.a + a,
                                                            b2 * c.a + a2))));
        k.defect(d);
      }));
  out.push_back(make_law(
      "APPLY-COMP",
      "apply(k1 k2, ρ) = apply(k2, apply(k1, ρ)) = sum_i M_i ρ M_i†",
      2, kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const auto k2 = kraus_from(k, k1.cod());
        const auto rho = detail::random_density(cp::dim_of(m, k1.dom()), k.rng());
        const auto once = cp::apply_kraus(m, k1, rho);
        k.defect(max_abs_diff(cp::apply_kraus(m, cp::kraus_compose(m, k1, k2), rho),
                              cp::apply_kraus(m, k2, once)));
        DenseMatrix sum(once.rows(), once.cols());
        for (const auto &p : cp::pure_decomposition(m, k1))
          sum = sum + p.dense() * rho * mat_dagger(p.dense());
        k.defect(max_abs_diff(sum, once));
      }));
  out.push_back(make_law(
      "EQUIV-ORACLE",
      "decided equivalence agrees with construction; test maps never "
      "separate equivalent maps",
      2, kMatOnly, [](Kit &k) {
        const Model &m = k.model();
        const auto k1 = kraus_any(k);
        const bool constructed = k.rng().coin();
        const auto k2 =
            constructed
                ? cp::isometric_padding(m, cp::unitary_variant(m, k1, k.rng()),
                                        1, k.rng())
                : cp::random_kraus(m, k1.dom(), k1.cod(), k.uobj(), k.rng());
        k.tag(constructed ? "equivalent pair" : "independent pair");
        const bool eq = cp::equiv_decide(m, k1, k2);
        k.defect(eq == constructed ? 0.0 : 1.0);
        if (constructed) {
          const auto r = cp::equiv_testmap_oracle(m, k1, k2, 8, k.rng());
          k.defect(r.consistent ? 0.0 : 1.0);
        }
      }));

  // -- environment structure and purification
  const auto env_law = [](std::string id, std::string anchor, auto trial) {
    return make_law(std::move(id), std::move(anchor), 2, {"mat", "fmat"},
                    [trial](Kit &k) {
                      const auto r = trial(k.model(), cp::canonical_env(),
                                           k.rng());
                      k.tag(r.instance);
                      k.defect(r.deviation);
                    });
  };
  out.push_back(env_law("ENV-1a",
                        "m⊗ discard(U ⊗ V) ~ mx (discard ⊕ discard) u",
                        cp::env_1a_trial));
  out.push_back(env_law("ENV-1b",
                        "discard(U ⊕ V) ~ n⊕ (discard ⊕ discard) u",
                        cp::env_1b_trial));
  out.push_back(env_law(
      "ENV-2", "k1 ~ k2 iff both agree after discarding the ancilla",
      cp::env_2_trial));
  out.push_back(env_law("ENV-3", "every channel is a pure map then discard",
                        cp::env_3_trial));
  out.push_back(make_law(
      "ENV-INIT", "comparison functor between purifying environments", 3,
      kMatOnly, [](Kit &k) {
        const auto seed = k.rng().engine()();
        const auto r = cp::initiality_probe(k.model(), cp::canonical_env(),
                                            cp::permuted_env(), 1, seed,
                                            k.model().default_tolerance());
        k.tag(r.witness.value_or("seed " + std::to_string(seed)));
        k.defect(r.max_abs_deviation);
      }));
  return out;
}

} // namespace muc::laws

#endif // MUC_LAWS_CHANNEL_HPP
