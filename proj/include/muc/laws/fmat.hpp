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

#ifndef MUC_LAWS_FMAT_HPP
#define MUC_LAWS_FMAT_HPP

#include <cstdint>
#include <vector>

#include "muc/laws/kit.hpp"
#include "muc/models/fmat_model.hpp"

namespace muc::laws {

namespace detail {

inline const FMatModel &as_fmat(const Model &m) {
  const auto *f = dynamic_cast<const FMatModel *>(&m);
  if (f == nullptr)
    throw UnsupportedInModel("law needs the FMat model, got " + m.id());
  return *f;
}

inline std::vector<std::uint64_t> random_masks(Rng &rng, std::size_t n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> out;
  const auto count = rng.integer(1, 3);
  for (int i = 0; i < count; ++i)
    out.push_back(static_cast<std::uint64_t>(rng.integer(0, 1 << n)) & full);
  return out;
}

/// Sample from finite spaces and the two symbolic countable ones.
inline ObjectExpr any_space(Kit &k) {
  const auto pick = k.rng().integer(0, 4);
  if (pick == 3)
    return k.note(ObjectExpr::space(fmat::FinitenessSpace::omega_fin()));
  if (pick == 4)
    return k.note(ObjectExpr::space(fmat::FinitenessSpace::omega_all()));
  return k.obj();
}

inline Morphism gaussian_mat(const Model &mat, const ObjectExpr &dom,
                             const ObjectExpr &cod, Rng &rng) {
  DenseMatrix m(mat_dim(cod), mat_dim(dom));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = Complex(static_cast<double>(rng.integer(-3, 3)),
                        static_cast<double>(rng.integer(-3, 3)));
  return mat.from_dense(dom, cod, m);
}

} // namespace detail

/// Laws specific to finiteness spaces and finiteness matrices.
inline std::vector<Law> fmat_laws() {
  std::vector<Law> out;

  out.push_back(make_law(
      "FAM-PERP", "F^⊥^⊥^⊥ = F^⊥ and F in F^⊥^⊥", 1,
      {"fmat"}, [](Kit &k) {
        const FMatModel &fm = detail::as_fmat(k.model());
        const auto n = static_cast<std::size_t>(k.rng().integer(1, 5));
        const auto x = fmat::IndexSet::finite(n);
        k.note(ObjectExpr::space(fmat::FinitenessSpace::finite(n)));
        const auto f = fm.family(detail::random_masks(k.rng(), n));
        const auto p1 = fmat::perp(f, x);
        const auto p3 = fmat::perp(fmat::perp(p1, x), x);
        k.defect(fmat::families_equal(p1, p3, x) ? 0.0 : 1.0);
        const auto p2 = fmat::perp(p1, x);
        for (auto m : f.masks())
          k.defect(p2.contains(fmat::from_mask(m)) ? 0.0 : 1.0);
        // Countable carrier: fin and all are each other's orthogonal.
        const auto w = fmat::IndexSet::omega();
        const auto fin = fmat::SetFamily::fin();
        const auto all = fmat::SetFamily::all();
        k.defect(fmat::families_equal(fmat::perp(fin, w), all, w) ? 0.0 : 1.0);
        k.defect(fmat::families_equal(fmat::perp(all, w), fin, w) ? 0.0 : 1.0);
        k.defect(fmat::check_finiteness_space(w, fin, all) ? 0.0 : 1.0);
        k.defect(fmat::check_finiteness_space(w, all, fin) ? 0.0 : 1.0);
        k.defect(fmat::check_finiteness_space(w, all, all) ? 1.0 : 0.0);
      }));

  out.push_back(make_law(
      "FAM-CLOSED", "families are closed under subsets", 1, {"fmat"},
      [](Kit &k) {
        const FMatModel &fm = detail::as_fmat(k.model());
        const auto n = static_cast<std::size_t>(k.rng().integer(1, 5));
        k.note(ObjectExpr::space(fmat::FinitenessSpace::finite(n)));
        const auto masks = detail::random_masks(k.rng(), n);
        const auto f = fm.family(masks);
        k.defect(f.is_downward_closed() ? 0.0 : 1.0);
        for (auto m : masks)
          for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
            k.defect(f.contains(fmat::from_mask(sub)) ? 0.0 : 1.0);
            if (sub == 0)
              break;
          }
      }));

  out.push_back(make_law(
      "FAM-REL",
      "sub-relations of a finiteness relation are finiteness relations", 2,
      {"fmat"}, [](Kit &k) {
        const FMatModel &fm = detail::as_fmat(k.model());
        Rng &rng = k.rng();
        const auto n = static_cast<std::size_t>(rng.integer(1, 5));
        const auto m = static_cast<std::size_t>(rng.integer(1, 5));
        k.note(ObjectExpr::dim(n));
        k.note(ObjectExpr::dim(m));
        fmat::Relation r;
        for (std::uint64_t x = 0; x < n; ++x)
          for (std::uint64_t y = 0; y < m; ++y)
            if (rng.coin(0.4))
              r.emplace_back(x, y);
        const auto masks = detail::random_masks(rng, n);
        const auto f1 = fm.family(masks);
        std::vector<std::uint64_t> images;
        for (auto a : f1.masks())
          images.push_back(
              fmat::to_mask(fmat::detail::image(r, fmat::from_mask(a), true)));
        const auto f2 = fm.family(images);
        const auto src = fmat::FinitenessSpace::unchecked(
            fmat::IndexSet::finite(n), f1, fmat::SetFamily::all());
        const auto tgt = fmat::FinitenessSpace::unchecked(
            fmat::IndexSet::finite(m), f2, fmat::SetFamily::all());
        k.defect(fmat::check_finiteness_relation(r, src, tgt) ? 0.0 : 1.0);
        for (int t = 0; t < 4; ++t) {
          fmat::Relation sub;
          for (const auto &p : r)
            if (rng.coin(0.5))
              sub.push_back(p);
          k.defect(fmat::check_finiteness_relation(sub, src, tgt) ? 0.0 : 1.0);
        }
      }));

  out.push_back(make_law(
      "FMAT-ASSOC", "(f g) h = f (g h), (f g)† = g† f†", 4, {"fmat"},
      [](Kit &k) {
        const auto A = detail::any_space(k), B = detail::any_space(k),
                   C = detail::any_space(k), D = detail::any_space(k);
        const auto f = k.mor(A, B), g = k.mor(B, C), h = k.mor(C, D);
        k.eq(k.c({k.c({f, g}), h}), k.c({f, k.c({g, h})}));
        k.eq(k.d(k.c({f, g})), k.c({k.d(g), k.d(f)}));
      }));

  out.push_back(make_law(
      "INCL-STRICT",
      "M(f g) = M(f) M(g), M(f ⊗ g) = M(f) ⊗ M(g), M(f†) = M(f)†, M(1) = 1",
      3, {"fmat"}, [](Kit &k) {
        const Model &u = k.model().unitary();
        const auto A = k.uobj(), B = k.uobj(), C = k.uobj();
        const auto f = detail::gaussian_mat(u, A, B, k.rng());
        const auto g = detail::gaussian_mat(u, B, C, k.rng());
        k.eq(k.M(u.compose(f, g)), k.c({k.M(f), k.M(g)}));
        k.eq(k.M(u.tensor(f, g)), k.t(k.M(f), k.M(g)));
        k.eq(k.M(u.par(f, g)), k.p(k.M(f), k.M(g)));
        k.eq(k.M(u.dagger(f)), k.d(k.M(f)));
        k.eq(k.M(u.identity(A)), k.id(k.M(A)));
      }));
  return out;
}

} // namespace muc::laws

#endif // MUC_LAWS_FMAT_HPP
