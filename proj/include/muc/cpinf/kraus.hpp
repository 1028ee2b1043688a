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

#ifndef MUC_CPINF_KRAUS_HPP
#define MUC_CPINF_KRAUS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muc/eigen.hpp"
#include "muc/matrix.hpp"
#include "muc/model.hpp"
#include "muc/models/cplane_model.hpp"

namespace muc::cpinf {

/// Representative (f, U) of a channel A -> B: f : A -> M(U) + B.
class KrausMorphism {
public:
  const ObjectExpr &dom() const noexcept { return body_.dom(); }
  const ObjectExpr &cod() const noexcept { return cod_; }
  const ObjectExpr &ancilla() const noexcept { return ancilla_; }
  const Morphism &body() const noexcept { return body_; }
  const std::string &model() const noexcept { return body_.model(); }

private:
  KrausMorphism(ObjectExpr ancilla, Morphism body, ObjectExpr cod)
      : ancilla_(std::move(ancilla)), body_(std::move(body)),
        cod_(std::move(cod)) {}
  friend KrausMorphism kraus_new(const Model &, const Morphism &,
                                 const ObjectExpr &);

  ObjectExpr ancilla_;
  Morphism body_;
  ObjectExpr cod_;
};

/// Validates that f : A -> M(U) + B and packages it with its ancilla U.
inline KrausMorphism kraus_new(const Model &m, const Morphism &f,
                               const ObjectExpr &u) {
  if (f.model() != m.id())
    throw ModelMismatch("Kraus body from model '" + f.model() + "' in '" +
                        m.id() + "'");
  const ObjectExpr mu = m.embed_object(u);
  if (f.cod().kind() != ObjectExpr::Kind::Par || !(f.cod().left() == mu))
    throw TypingError("Kraus body must have codomain M(" + u.to_string() +
                      ") + B, got " + f.cod().to_string());
  return KrausMorphism(u, f, f.cod().right());
}

struct ChoiMatrix {
  DenseMatrix matrix;
  std::size_t a = 0;
  std::size_t b = 0;
};

inline std::size_t dim_of(const Model &m, const ObjectExpr &x) {
  const auto d = m.finite_dim(x);
  if (!d)
    throw UnsupportedInModel("object " + x.to_string() + " of model '" +
                             m.id() + "' has no finite dimension");
  return *d;
}

inline DenseMatrix body_matrix(const Model &m, const KrausMorphism &k) {
  auto d = m.dense_payload(k.body());
  if (!d)
    throw UnsupportedInModel("model '" + m.id() +
                             "' has no matrix form for this Kraus map");
  return *std::move(d);
}

inline std::size_t ancilla_dim(const Model &m, const KrausMorphism &k) {
  return dim_of(m, m.embed_object(k.ancilla()));
}

namespace detail {
inline Morphism id(const Model &m, const ObjectExpr &a) {
  return m.identity(a);
}
} // namespace detail

/// Q(f) = [f ; (u_par_L)^-1 ; ((n_bot)^-1 + 1), bottom].
inline KrausMorphism functor_Q(const Model &m, const Morphism &f) {
  using S = StructuralMap;
  const ObjectExpr &b = f.cod();
  const Morphism body =
      m.chain({f, m.structural(S::UnitParLInv, {b}),
               m.par(m.structural(S::StrengthBottomInv, {}), m.identity(b))});
  return kraus_new(m, body, ObjectExpr::bottom());
}

inline KrausMorphism kraus_identity(const Model &m, const ObjectExpr &a) {
  return functor_Q(m, m.identity(a));
}

/// N(f) = Q(M(f)) for f in the unitary category.
inline KrausMorphism functor_N(const Model &m, const Morphism &f) {
  return functor_Q(m, m.embed(f));
}

/// Discard M(U) -> bottom: [(u_par_R)^-1, U].
inline KrausMorphism env_discard(const Model &m, const ObjectExpr &u) {
  return kraus_new(
      m, m.structural(StructuralMap::UnitParRInv, {m.embed_object(u)}), u);
}

/// [(f, U)][(g, V)] = f ; (1 + g) ; a_par ; ((n_par)^-1 + 1), ancilla U + V.
inline KrausMorphism kraus_compose(const Model &m, const KrausMorphism &k1,
                                   const KrausMorphism &k2) {
  using S = StructuralMap;
  if (!(k1.cod() == k2.dom()))
    throw TypingError("cannot compose channels " + k1.cod().to_string() +
                      " and " + k2.dom().to_string());
  const ObjectExpr &u = k1.ancilla();
  const ObjectExpr &v = k2.ancilla();
  const ObjectExpr mu = m.embed_object(u);
  const ObjectExpr mv = m.embed_object(v);
  const ObjectExpr &c = k2.cod();
  const Morphism body = m.chain(
      {k1.body(), m.par(m.identity(mu), k2.body()),
       m.structural(S::AssocPar, {mu, mv, c}),
       m.par(m.structural(S::StrengthParInv, {u, v}), m.identity(c))});
  return kraus_new(m, body, oplus(u, v));
}

/// Tensor of channels: f1 (x) f2, then mixor inverses, a shuffle bringing
/// both ancillas to the front, and the mixor back into par form.
inline KrausMorphism kraus_tensor(const Model &m, const KrausMorphism &k1,
                                  const KrausMorphism &k2) {
  using S = StructuralMap;
  if (k1.model() != k2.model())
    throw ModelMismatch("tensor of channels from different models");
  const ObjectExpr p = m.embed_object(k1.ancilla());
  const ObjectExpr q = m.embed_object(k2.ancilla());
  const ObjectExpr &b1 = k1.cod();
  const ObjectExpr &b2 = k2.cod();
  const auto id = [&](const ObjectExpr &x) { return m.identity(x); };
  const Morphism body = m.chain({
      m.tensor(k1.body(), k2.body()),
      m.tensor(m.structural(S::MixorInv, {p, b1}),
               m.structural(S::MixorInv, {q, b2})),
      m.structural(S::AssocTensorInv, {p, b1, otimes(q, b2)}),
      m.tensor(id(p), m.structural(S::AssocTensor, {b1, q, b2})),
      m.tensor(id(p), m.tensor(m.structural(S::SymTensor, {b1, q}), id(b2))),
      m.tensor(id(p), m.structural(S::AssocTensorInv, {q, b1, b2})),
      m.structural(S::AssocTensor, {p, q, otimes(b1, b2)}),
      m.tensor(m.structural(S::Mixor, {p, q}), id(otimes(b1, b2))),
      m.structural(S::Mixor, {oplus(p, q), otimes(b1, b2)}),
      m.par(m.structural(S::StrengthParInv, {k1.ancilla(), k2.ancilla()}),
            id(otimes(b1, b2))),
  });
  return kraus_new(m, body, oplus(k1.ancilla(), k2.ancilla()));
}

/// Par of channels: f1 (+) f2 followed by the same shuffle in par form.
inline KrausMorphism kraus_par(const Model &m, const KrausMorphism &k1,
                               const KrausMorphism &k2) {
  using S = StructuralMap;
  if (k1.model() != k2.model())
    throw ModelMismatch("par of channels from different models");
  const ObjectExpr p = m.embed_object(k1.ancilla());
  const ObjectExpr q = m.embed_object(k2.ancilla());
  const ObjectExpr &b1 = k1.cod();
  const ObjectExpr &b2 = k2.cod();
  const auto id = [&](const ObjectExpr &x) { return m.identity(x); };
  const Morphism body = m.chain({
      m.par(k1.body(), k2.body()),
      m.structural(S::AssocParInv, {p, b1, oplus(q, b2)}),
      m.par(id(p), m.structural(S::AssocPar, {b1, q, b2})),
      m.par(id(p), m.par(m.structural(S::SymPar, {b1, q}), id(b2))),
      m.par(id(p), m.structural(S::AssocParInv, {q, b1, b2})),
      m.structural(S::AssocPar, {p, q, oplus(b1, b2)}),
      m.par(m.structural(S::StrengthParInv, {k1.ancilla(), k2.ancilla()}),
            id(oplus(b1, b2))),
  });
  return kraus_new(m, body, oplus(k1.ancilla(), k2.ancilla()));
}

/// Blocks M_i (b x a) of the body, one per ancilla basis vector.
inline std::vector<DenseMatrix> kraus_blocks(const Model &m,
                                             const KrausMorphism &k) {
  const DenseMatrix f = body_matrix(m, k);
  const std::size_t u = ancilla_dim(m, k);
  const std::size_t b = dim_of(m, k.cod());
  std::vector<DenseMatrix> out;
  out.reserve(u);
  for (std::size_t i = 0; i < u; ++i)
    out.push_back(row_block(f, i * b, b));
  return out;
}

inline std::vector<Morphism> pure_decomposition(const Model &m,
                                                const KrausMorphism &k) {
  std::vector<Morphism> out;
  for (const auto &blk : kraus_blocks(m, k))
    out.push_back(m.from_dense(k.dom(), k.cod(), blk));
  return out;
}

/// C[(b, a), (b', a')] = sum_i M_i[b, a] conj(M_i[b', a']).
inline ChoiMatrix to_choi(const Model &m, const KrausMorphism &k) {
  const std::size_t a = dim_of(m, k.dom());
  const std::size_t b = dim_of(m, k.cod());
  DenseMatrix c(a * b, a * b);
  for (const auto &mi : kraus_blocks(m, k))
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t s = 0; s < a; ++s)
        for (std::size_t r2 = 0; r2 < b; ++r2)
          for (std::size_t s2 = 0; s2 < a; ++s2)
            c(r * a + s, r2 * a + s2) += mi(r, s) * std::conj(mi(r2, s2));
  return {std::move(c), a, b};
}

/// Action on a density matrix.
inline DenseMatrix apply_kraus(const Model &m, const KrausMorphism &k,
                               const DenseMatrix &rho) {
  return apply_channel(body_matrix(m, k), ancilla_dim(m, k), rho);
}

/// Adjoint channel from the pure decomposition: blocks M_i^dagger.
inline KrausMorphism kraus_dagger(const Model &m, const KrausMorphism &k) {
  std::vector<DenseMatrix> blocks;
  for (const auto &mi : kraus_blocks(m, k))
    blocks.push_back(mat_dagger(mi));
  const ObjectExpr cod = oplus(m.embed_object(k.ancilla()), dag(k.dom()));
  return kraus_new(m, m.from_dense(dag(k.cod()), cod, stack_rows(blocks)),
                   k.ancilla());
}

/// Adjoint channel built from the unitary dual of the ancilla:
/// B' -> T (x) B' -> (MU* + MU) (x) B' -> MU* + (MU (x) B')
///    -> MU* + (MU' (x) B') -> MU* + (MU + B)' -> MU* + A'.
inline KrausMorphism kraus_dagger_wired(const Model &m,
                                        const KrausMorphism &k) {
  using S = StructuralMap;
  const ObjectExpr &u = k.ancilla();
  const ObjectExpr mu = m.embed_object(u);
  const ObjectExpr bd = dag(k.cod());
  const Morphism phi =
      m.chain({m.embed(m.unitary().structural(S::Unitary, {u})),
               m.structural(S::Preservator, {u})});
  const Morphism body = m.chain({
      m.structural(S::UnitTensorLInv, {bd}),
      m.tensor(m.structural(S::DualUnit, {mu}), m.identity(bd)),
      m.structural(S::DistR, {dual(mu), mu, bd}),
      m.par(m.identity(dual(mu)), m.tensor(phi, m.identity(bd))),
      m.par(m.identity(dual(mu)), m.structural(S::LaxTensor, {mu, k.cod()})),
      m.par(m.identity(dual(mu)), m.dagger(k.body())),
  });
  return kraus_new(m, body, dual(u));
}

/// Stinespring representative of a Choi matrix: one Kraus operator
/// sqrt(lambda_i) unvec(v_i) per nonzero eigenvalue.
inline KrausMorphism purify(const Model &m, const ChoiMatrix &c,
                            const ObjectExpr &dom, const ObjectExpr &cod) {
  const std::size_t a = c.a;
  const std::size_t b = c.b;
  if (c.matrix.rows() != a * b || c.matrix.cols() != a * b)
    throw ShapeMismatch("Choi matrix does not match its recorded dims");
  if (dim_of(m, dom) != a || dim_of(m, cod) != b)
    throw DomCodMismatch("Choi dims do not match the requested typing");
  const HermitianEig eig = hermitian_eig(c.matrix);
  const double top = eig.values.empty() ? 0.0 : eig.values.front();
  const double scale = std::max(1.0, std::abs(top));
  if (!eig.values.empty() && eig.values.back() < -1e-9 * scale)
    throw NotPSD("Choi matrix has eigenvalue " +
                 std::to_string(eig.values.back()));
  std::vector<DenseMatrix> blocks;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] <= 1e-10 * scale)
      break;
    const double s = std::sqrt(eig.values[i]);
    DenseMatrix mi(b, a);
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t t = 0; t < a; ++t)
        mi(r, t) = s * eig.vectors(r * a + t, i);
    blocks.push_back(std::move(mi));
  }
  if (blocks.empty())
    blocks.push_back(DenseMatrix(b, a));
  const ObjectExpr u = ObjectExpr::dim(blocks.size());
  return kraus_new(
      m, m.from_dense(dom, oplus(m.embed_object(u), cod), stack_rows(blocks)),
      u);
}

inline double choi_distance(const ChoiMatrix &x, const ChoiMatrix &y) {
  if (x.a != y.a || x.b != y.b)
    throw DomCodMismatch("channels with different dimensions");
  return max_abs_diff(x.matrix, y.matrix);
}

/// Decides (f, U) ~ (g, V): Choi equality for matrix models, the closed
/// form for the complex plane.
inline bool equiv_decide(const Model &m, const KrausMorphism &k1,
                         const KrausMorphism &k2, double tol = 1e-9) {
  if (k1.model() != m.id() || k2.model() != m.id())
    throw ModelMismatch("Kraus maps from another model");
  if (dynamic_cast<const CplaneModel *>(&m) != nullptr) {
    auto pack = [&](const KrausMorphism &k) {
      return cplane::CplaneKraus{
          cplane::CNum(cplane_value(k.dom())),
          cplane::CNum(cplane_value(k.cod())),
          cplane_value(m.embed_object(k.ancilla())).real()};
    };
    return cplane::cplane_equiv(pack(k1), pack(k2));
  }
  if (!m.finite_dim(k1.dom()) || !m.finite_dim(k1.cod()) ||
      !m.finite_dim(k2.dom()) || !m.finite_dim(k2.cod()))
    throw UnsupportedInModel(
        "equivalence is only decided on finite-dimensional objects");
  return choi_distance(to_choi(m, k1), to_choi(m, k2)) <= tol;
}

/// A channel: canonical Choi form plus one representative.
struct Channel {
  ChoiMatrix choi;
  KrausMorphism representative;
};

inline Channel make_channel(const Model &m, const KrausMorphism &k) {
  return {to_choi(m, k), k};
}

inline bool same_channel(const Channel &x, const Channel &y,
                         double tol = 1e-9) {
  return choi_distance(x.choi, y.choi) <= tol;
}

// ---- sampling -------------------------------------------------------------

inline KrausMorphism random_kraus(const Model &m, const ObjectExpr &a,
                                  const ObjectExpr &b, const ObjectExpr &u,
                                  Rng &rng) {
  return kraus_new(m, m.random_morphism(a, oplus(m.embed_object(u), b), rng),
                   u);
}

/// (f ; (M(alpha) + 1), U) for a random unitary alpha on the ancilla.
inline KrausMorphism unitary_variant(const Model &m, const KrausMorphism &k,
                                     Rng &rng) {
  const auto alpha = m.unitary().random_unitary(k.ancilla(), rng);
  const Morphism body = m.compose(
      k.body(), m.par(m.embed(alpha.forward), m.identity(k.cod())));
  return kraus_new(m, body, k.ancilla());
}

/// Representative with a larger ancilla fed through an isometry u -> u'.
inline KrausMorphism isometric_padding(const Model &m, const KrausMorphism &k,
                                       std::size_t extra, Rng &rng) {
  const std::size_t u = ancilla_dim(m, k);
  const std::size_t b = dim_of(m, k.cod());
  const DenseMatrix j = random_isometry(u + extra, u, rng);
  const DenseMatrix body =
      mat_kron(j, DenseMatrix::identity(b)) * body_matrix(m, k);
  const ObjectExpr v = ObjectExpr::dim(u + extra);
  return kraus_new(
      m, m.from_dense(k.dom(), oplus(m.embed_object(v), k.cod()), body), v);
}

// ---- test-map oracle --------------------------------------------------------

struct OracleResult {
  bool consistent = true;
  std::size_t trials = 0;
  std::optional<std::string> witness;
};

/// Glued superoperator of (f, U) against the test map h : B (x) C -> M(X):
/// W = (f (x) 1_C) ; delta_R ; (1 + h), glued as sum_i W_i (x) conj(W_i).
inline DenseMatrix glue_with_test_map(const Model &m, const KrausMorphism &k,
                                      const ObjectExpr &c,
                                      const Morphism &h) {
  using S = StructuralMap;
  const ObjectExpr mu = m.embed_object(k.ancilla());
  const Morphism w =
      m.chain({m.tensor(k.body(), m.identity(c)),
               m.structural(S::DistR, {mu, k.cod(), c}),
               m.par(m.identity(mu), h)});
  const DenseMatrix wm = *m.dense_payload(w);
  const std::size_t u = dim_of(m, mu);
  const std::size_t x = wm.rows() / u;
  DenseMatrix out(x * x, wm.cols() * wm.cols());
  for (std::size_t i = 0; i < u; ++i) {
    const DenseMatrix wi = row_block(wm, i * x, x);
    DenseMatrix conj_wi = wi;
    for (std::size_t r = 0; r < x; ++r)
      for (std::size_t s = 0; s < wi.cols(); ++s)
        conj_wi(r, s) = std::conj(wi(r, s));
    out = out + mat_kron(wi, conj_wi);
  }
  return out;
}

/// Samples test maps and compares both glued sides; stops at the first
/// separating test map.
inline OracleResult equiv_testmap_oracle(const Model &m,
                                         const KrausMorphism &k1,
                                         const KrausMorphism &k2,
                                         std::size_t trials, Rng &rng,
                                         double tol = 1e-9) {
  if (dim_of(m, k1.dom()) != dim_of(m, k2.dom()) ||
      dim_of(m, k1.cod()) != dim_of(m, k2.cod()))
    throw DomCodMismatch("Kraus maps with different endpoints");
  OracleResult res;
  for (std::size_t t = 0; t < trials; ++t) {
    const ObjectExpr c = m.random_unitary_object(rng);
    const auto xdim = static_cast<std::size_t>(rng.integer(1, 2));
    const ObjectExpr x = m.embed_object(ObjectExpr::dim(xdim));
    const ObjectExpr mc = m.embed_object(c);
    const Morphism h1 = m.random_morphism(otimes(k1.cod(), mc), x, rng);
    const Morphism h2 =
        m.from_dense(otimes(k2.cod(), mc), x, *m.dense_payload(h1));
    const DenseMatrix g1 = glue_with_test_map(m, k1, mc, h1);
    const DenseMatrix g2 = glue_with_test_map(m, k2, mc, h2);
    ++res.trials;
    const double scale = std::max({1.0, max_abs(g1), max_abs(g2)});
    const double d = max_abs_diff(g1, g2);
    if (d > tol * scale) {
      res.consistent = false;
      res.witness = "test map " + std::to_string(t) + " with C = " +
                    c.to_string() + ", X = " + std::to_string(xdim) +
                    " separates the glued maps by " + std::to_string(d);
      return res;
    }
  }
  return res;
}

} // namespace muc::cpinf

#endif // MUC_CPINF_KRAUS_HPP
