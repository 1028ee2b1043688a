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

#ifndef MUC_CPINF_ENVIRONMENT_HPP
#define MUC_CPINF_ENVIRONMENT_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "muc/cpinf/kraus.hpp"
#include "muc/report.hpp"

namespace muc::cpinf {

/// Environment structure over the channel category: F is Q, and `discard`
/// gives the family M(U) -> bottom.
struct EnvStructure {
  std::string name;
  std::function<KrausMorphism(const Model &, const ObjectExpr &)> discard;
};

inline EnvStructure canonical_env() {
  return {"canonical", [](const Model &m, const ObjectExpr &u) {
            return env_discard(m, u);
          }};
}

/// Discard through the ancilla permutation i -> n-1-i. Same channels as the
/// canonical structure, different representatives.
inline EnvStructure permuted_env() {
  return {"permuted", [](const Model &m, const ObjectExpr &u) {
            const std::size_t n = dim_of(m, m.embed_object(u));
            DenseMatrix p(n, n);
            for (std::size_t i = 0; i < n; ++i)
              p(n - 1 - i, i) = 1.0;
            const ObjectExpr mu = m.embed_object(u);
            const Morphism body =
                m.compose(m.structural(StructuralMap::UnitParRInv, {mu}),
                          m.par(m.from_dense(mu, mu, p),
                                m.identity(ObjectExpr::bottom())));
            return kraus_new(m, body, u);
          }};
}

/// Trace followed by halving; breaks ENV-1a and ENV-1b.
inline EnvStructure halving_env() {
  return {"halving", [](const Model &m, const ObjectExpr &u) {
            const KrausMorphism k = env_discard(m, u);
            const DenseMatrix body =
                Complex(1.0 / std::sqrt(2.0)) * body_matrix(m, k);
            return kraus_new(m, m.from_dense(k.dom(), k.body().cod(), body),
                             u);
          }};
}

/// Channel of (f, U) seen through an environment: Q(f) ; (discard + 1) ;
/// Q(u_par_L).
inline KrausMorphism through_env(const Model &m, const EnvStructure &env,
                                 const KrausMorphism &k) {
  const ObjectExpr &b = k.cod();
  const KrausMorphism step1 = functor_Q(m, k.body());
  const KrausMorphism step2 = kraus_par(m, env.discard(m, k.ancilla()),
                                        kraus_identity(m, b));
  const KrausMorphism step3 =
      functor_Q(m, m.structural(StructuralMap::UnitParL, {b}));
  return kraus_compose(m, kraus_compose(m, step1, step2), step3);
}

inline double channel_distance(const Model &m, const KrausMorphism &k1,
                               const KrausMorphism &k2) {
  return choi_distance(to_choi(m, k1), to_choi(m, k2));
}

namespace detail {

inline std::string dims_note(const Model &m,
                             std::initializer_list<ObjectExpr> xs) {
  std::string out;
  for (const auto &x : xs) {
    if (!out.empty())
      out += ", ";
    out += x.to_string() + ":" + std::to_string(dim_of(m, m.embed_object(x)));
  }
  return out;
}

} // namespace detail

/// ENV-1a: m_tensor ; discard(U (x) V) ~ mx ; (discard + discard) ; u_par.
inline TrialResult env_1a_trial(const Model &m, const EnvStructure &env,
                                Rng &rng) {
  using S = StructuralMap;
  const ObjectExpr u = m.random_unitary_object(rng);
  const ObjectExpr v = m.random_unitary_object(rng);
  const ObjectExpr mu = m.embed_object(u), mv = m.embed_object(v);
  const ObjectExpr bot = ObjectExpr::bottom();
  const KrausMorphism lhs =
      kraus_compose(m, functor_Q(m, m.structural(S::StrengthTensor, {u, v})),
                    env.discard(m, otimes(u, v)));
  const KrausMorphism rhs = kraus_compose(
      m,
      kraus_compose(m, functor_Q(m, m.structural(S::Mixor, {mu, mv})),
                    kraus_par(m, env.discard(m, u), env.discard(m, v))),
      functor_Q(m, m.structural(S::UnitParL, {bot})));
  return {channel_distance(m, lhs, rhs), detail::dims_note(m, {u, v})};
}

/// ENV-1b: discard(U + V) ~ n_par ; (discard + discard) ; u_par.
inline TrialResult env_1b_trial(const Model &m, const EnvStructure &env,
                                Rng &rng) {
  using S = StructuralMap;
  const ObjectExpr u = m.random_unitary_object(rng);
  const ObjectExpr v = m.random_unitary_object(rng);
  const ObjectExpr bot = ObjectExpr::bottom();
  const KrausMorphism lhs = env.discard(m, oplus(u, v));
  const KrausMorphism rhs = kraus_compose(
      m,
      kraus_compose(m, functor_Q(m, m.structural(S::StrengthPar, {u, v})),
                    kraus_par(m, env.discard(m, u), env.discard(m, v))),
      functor_Q(m, m.structural(S::UnitParL, {bot})));
  return {channel_distance(m, lhs, rhs), detail::dims_note(m, {u, v})};
}

/// ENV-2: on a pair that is equivalent by construction or sampled
/// independently, the discard equation holds iff the pair is equivalent.
inline TrialResult env_2_trial(const Model &m, const EnvStructure &env,
                               Rng &rng) {
  const ObjectExpr a = m.random_object(rng);
  const ObjectExpr b = m.random_object(rng);
  const ObjectExpr u = m.random_unitary_object(rng);
  const KrausMorphism k1 = random_kraus(m, a, b, u, rng);
  const bool constructed = rng.coin();
  const KrausMorphism k2 =
      constructed ? unitary_variant(m, k1, rng)
                  : random_kraus(m, a, b, m.random_unitary_object(rng), rng);
  const double d = channel_distance(m, through_env(m, env, k1),
                                    through_env(m, env, k2));
  const bool discard_equal = d <= 1e-9;
  const bool equiv = equiv_decide(m, k1, k2);
  const bool ok = discard_equal == equiv && equiv == constructed;
  return {ok ? 0.0 : 1.0,
          std::string(constructed ? "equivalent" : "independent") +
              " pair, discard distance " + std::to_string(d)};
}

/// ENV-3: every sampled channel factors as a purified Kraus map followed
/// by discard.
inline TrialResult env_3_trial(const Model &m, const EnvStructure &env,
                               Rng &rng) {
  const ObjectExpr a = m.random_object(rng);
  const ObjectExpr b = m.random_object(rng);
  const KrausMorphism k =
      random_kraus(m, a, b, m.random_unitary_object(rng), rng);
  const KrausMorphism pure = purify(m, to_choi(m, k), a, b);
  return {channel_distance(m, through_env(m, env, pure), k),
          a.to_string() + " -> " + b.to_string()};
}

inline std::vector<LawCheckReport> env_check(const Model &m,
                                             const EnvStructure &env,
                                             std::uint64_t trials,
                                             std::uint64_t seed,
                                             double tol = 1e-9) {
  const std::string model = m.id() + "/" + env.name;
  return {
      run_trials("ENV-1a", model, trials, seed, tol,
                 [&](Rng &r) { return env_1a_trial(m, env, r); }),
      run_trials("ENV-1b", model, trials, seed, tol,
                 [&](Rng &r) { return env_1b_trial(m, env, r); }),
      run_trials("ENV-2", model, trials, seed, tol,
                 [&](Rng &r) { return env_2_trial(m, env, r); }),
      run_trials("ENV-3", model, trials, seed, tol,
                 [&](Rng &r) { return env_3_trial(m, env, r); }),
  };
}

/// The comparison functor from a purifying structure to another one:
/// purify in `src`, then discard with `tgt`.
inline KrausMorphism initiality_functor(const Model &m,
                                        const EnvStructure &tgt,
                                        const KrausMorphism &k) {
  const KrausMorphism pure = purify(m, to_choi(m, k), k.dom(), k.cod());
  return through_env(m, tgt, pure);
}

/// Spot checks of the comparison functor on sampled maps: well defined on
/// equivalent representatives, functorial, strict on tensors, preserves
/// discard and agrees with the channel itself.
inline LawCheckReport initiality_probe(const Model &m, const EnvStructure &src,
                                       const EnvStructure &tgt,
                                       std::uint64_t samples,
                                       std::uint64_t seed,
                                       double tol = 1e-9) {
  auto trial = [&](Rng &rng) -> TrialResult {
    const ObjectExpr a = m.random_object(rng);
    const ObjectExpr b = m.random_object(rng);
    const ObjectExpr c = m.random_object(rng);
    const ObjectExpr u = m.random_unitary_object(rng);
    const KrausMorphism k1 =
        random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    const KrausMorphism k2 =
        random_kraus(m, b, c, m.random_unitary_object(rng), rng);
    const auto f = [&](const KrausMorphism &k) {
      return initiality_functor(m, tgt, k);
    };
    double d = 0.0;
    std::string what;
    auto track = [&](double x, const char *name) {
      if (x > d) {
        d = x;
        what = name;
      }
    };
    track(channel_distance(m, f(k1), f(unitary_variant(m, k1, rng))),
          "well-definedness");
    track(channel_distance(m, f(kraus_compose(m, k1, k2)),
                           kraus_compose(m, f(k1), f(k2))),
          "composition");
    track(channel_distance(m, f(kraus_tensor(m, k1, k2)),
                           kraus_tensor(m, f(k1), f(k2))),
          "tensor");
    track(channel_distance(m, f(src.discard(m, u)), tgt.discard(m, u)),
          "discard");
    track(channel_distance(m, f(k1), k1), "identity on channels");
    return {d, "worst: " + (what.empty() ? std::string("none") : what) +
                   " at " + a.to_string() + ", " + b.to_string() + ", " +
                   c.to_string() + ", ancilla " + u.to_string()};
  };
  return run_trials("INIT-PROBE", m.id() + "/" + src.name + "->" + tgt.name,
                    samples, seed, tol, trial);
}

} // namespace muc::cpinf

#endif // MUC_CPINF_ENVIRONMENT_HPP
