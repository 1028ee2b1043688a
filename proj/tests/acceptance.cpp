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

// Acceptance checks AC1-AC8. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "muc/muc.hpp"

using namespace muc;
namespace cp = muc::cpinf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failed = 0;
int g_run = 0;
std::set<std::string> g_only;

void criterion(const char *id, const char *title,
               const std::function<Outcome()> &body) {
  if (!g_only.empty() && g_only.count(id) == 0)
    return;
  ++g_run;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  if (!o.pass)
    ++g_failed;
  std::printf("%s %s  %s  [%s] (%.2fs)\n", id, o.pass ? "PASS" : "FAIL", title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char *f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// ---- AC1 --------------------------------------------------------------------

Outcome coherence_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::size_t n = 0;
  const MatModel mat;
  const CplaneModel cpl;
  for (const auto &l : law_catalog()) {
    for (const Model *m : {static_cast<const Model *>(&mat),
                           static_cast<const Model *>(&cpl)}) {
      if (!l.supports(*m))
        continue;
      const auto r = check_law(l, *m, 100, 7, m == &mat ? 1e-9 : 1e-12);
      ++n;
      // cplane objects are exact; every comparison must be an equality.
      const bool ok = r.pass && (m == &mat || r.max_abs_deviation == 0.0);
      if (!ok) {
        o.pass = false;
        o.detail += l.id + "@" + m->id() + " ";
      }
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  if (secs >= 60.0)
    o.pass = false;
  o.detail += std::to_string(n) + " law/model reports, " +
              fmt("%.1f", secs) + "s < 60s";
  return o;
}

// ---- AC2 --------------------------------------------------------------------

Outcome equivalence() {
  const MatModel m;
  Rng rng(2024);
  std::size_t eq_ok = 0, eq_oracle_clean = 0, ne_ok = 0, ne_witness = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = m.random_object(rng), b = m.random_object(rng);
    const auto k = cp::random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    const auto k2 = (i % 2 == 0)
                        ? cp::unitary_variant(m, k, rng)
                        : cp::isometric_padding(
                              m, k, static_cast<std::size_t>(rng.integer(1, 2)),
                              rng);
    eq_ok += cp::equiv_decide(m, k, k2) ? 1 : 0;
    eq_oracle_clean +=
        cp::equiv_testmap_oracle(m, k, k2, 200, rng).consistent ? 1 : 0;
  }
  for (int i = 0; i < 200; ++i) {
    const auto a = m.random_object(rng), b = m.random_object(rng);
    const auto k1 =
        cp::random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    auto k2 = cp::random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    while (cp::choi_distance(cp::to_choi(m, k1), cp::to_choi(m, k2)) < 1e-6)
      k2 = cp::random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    ne_ok += cp::equiv_decide(m, k1, k2) ? 0 : 1;
    ne_witness +=
        cp::equiv_testmap_oracle(m, k1, k2, 200, rng).consistent ? 0 : 1;
  }
  Outcome o;
  o.pass = eq_ok == 200 && eq_oracle_clean == 200 && ne_ok == 200 &&
           ne_witness >= 190;
  o.detail = "equivalent: decide " + std::to_string(eq_ok) +
             "/200, oracle silent " + std::to_string(eq_oracle_clean) +
             "/200; distinct: decide " + std::to_string(ne_ok) +
             "/200, witness " + std::to_string(ne_witness) + "/200 (>=190)";
  return o;
}

// ---- AC3 --------------------------------------------------------------------

Outcome category_laws() {
  Outcome o;
  std::size_t n = 0;
  for (const std::string mid : {"mat", "fmat", "cplane"}) {
    const auto m = find_model(mid);
    for (const char *id :
         {"CPI-ASSOC", "CPI-IDL", "CPI-IDR", "CPI-BIFUNCT", "CPI-MIX"}) {
      const auto r = check_law(find_law(id), *m, 100, 11, 1e-9);
      ++n;
      if (!r.pass) {
        o.pass = false;
        o.detail += std::string(id) + "@" + mid + " ";
      }
    }
  }
  o.detail += std::to_string(n) + " checks x 100 trials";
  return o;
}

// ---- AC4 --------------------------------------------------------------------

Outcome choi_machinery() {
  const MatModel m;
  Rng rng(404);
  double apply_dev = 0.0;
  std::size_t roundtrip = 0;
  for (int i = 0; i < 50; ++i) {
    const auto a = m.random_object(rng), b = m.random_object(rng);
    const auto k = cp::random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    const DenseMatrix rho = laws::detail::random_density(mat_dim(a), rng);
    DenseMatrix sum(mat_dim(b), mat_dim(b));
    for (const auto &p : cp::pure_decomposition(m, k)) {
      const DenseMatrix kk = p.dense();
      sum = sum + kk * rho * mat_dagger(kk);
    }
    apply_dev = std::max(apply_dev,
                         max_abs_diff(sum, cp::apply_kraus(m, k, rho)));
    const auto back = cp::purify(m, cp::to_choi(m, k), a, b);
    roundtrip += cp::equiv_decide(m, k, back, 1e-9) ? 1 : 0;
  }
  double resid = 0.0;
  for (std::size_t n = 1; n <= 16; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      const DenseMatrix g = rng.gaussian_matrix(n, n);
      const DenseMatrix h = g + mat_dagger(g);
      const auto e = hermitian_eig(h);
      DenseMatrix d(n, n);
      for (std::size_t j = 0; j < n; ++j)
        d(j, j) = e.values[j];
      resid = std::max(resid, max_abs_diff(h * e.vectors, e.vectors * d));
      resid = std::max(resid, max_abs_diff(mat_dagger(e.vectors) * e.vectors,
                                           DenseMatrix::identity(n)));
    }
  Outcome o;
  o.pass = apply_dev <= 1e-9 && roundtrip == 50 && resid <= 1e-8;
  o.detail = "decomposition vs apply " + fmt("%.2e", apply_dev) +
             " <= 1e-9; purify round trip " + std::to_string(roundtrip) +
             "/50; eig residual " + fmt("%.2e", resid) + " <= 1e-8";
  return o;
}

// ---- AC5 --------------------------------------------------------------------

Outcome environment() {
  const MatModel m;
  Outcome o;
  for (const auto &r : cp::env_check(m, cp::canonical_env(), 100, 5))
    if (!r.pass) {
      o.pass = false;
      o.detail += "canonical fails " + r.law + "; ";
    }
  const auto halving = cp::env_check(m, cp::halving_env(), 100, 5);
  const bool halving_caught = !halving.at(0).pass && halving.at(0).law == "ENV-1a";
  const auto probe =
      cp::initiality_probe(m, cp::canonical_env(), cp::permuted_env(), 50, 5);
  o.pass = o.pass && halving_caught && probe.pass && probe.trials == 50;
  o.detail += std::string("canonical ENV-1a/1b/2/3; halving fails ENV-1a: ") +
              (halving_caught ? "yes" : "no") + "; initiality probe " +
              (probe.pass ? "consistent" : "inconsistent") + " on " +
              std::to_string(probe.trials) + " samples";
  return o;
}

// ---- AC6 --------------------------------------------------------------------

// Projective characterisation: (=, r) : c -> c' exists iff c and c' lie on
// one real line through the origin with c = r c'. Into c' != 0 the ratio is
// forced, so each valid map is its own class; into 0 all maps coincide.
struct Proj {
  static bool valid(std::complex<double> c, double r, std::complex<double> cp_) {
    if (cp_ == 0.0)
      return c == 0.0;
    const std::complex<double> q = c / cp_;
    return std::abs(q.imag()) <= 1e-12 * std::max(1.0, std::abs(q)) &&
           std::abs(q.real() - r) <= 1e-12 * std::max(1.0, std::abs(r));
  }
};

Outcome cplane_grid() {
  using cplane::CNum;
  const std::vector<std::complex<double>> cs = {
      {0, 0}, {1, 0}, {-2, 0}, {2, 0}, {1, 1}, {-1, -1}, {0, 0.5}, {3, 0},
      {-0.5, 0}, {2, 2}};
  const std::vector<double> rs = {0, 1, -1, 2, 0.5, -3, 4, 0.25, -0.5, 1.5};
  const std::vector<std::complex<double>> cps = {
      {0, 0}, {1, 0}, {-2, 0}, {1, 1}, {0, 1}, {3, 0}, {-1, 0}, {0.5, 0.5},
      {0.25, 0}, {-4, 0}};
  std::size_t triples = 0, mismatches = 0, valid = 0, pairs = 0;
  for (const auto &c : cs)
    for (const auto &c2 : cps) {
      std::vector<double> live;
      for (double r : rs) {
        ++triples;
        const cplane::CplaneKraus k{CNum(c), CNum(c2), r};
        const bool v = Proj::valid(c, r, c2);
        if (v != cplane::kraus_valid(k))
          ++mismatches;
        if (v) {
          ++valid;
          live.push_back(r);
        }
        // Self-equivalence holds exactly for genuine Kraus maps.
        if (cplane::cplane_equiv(k, k) != v)
          ++mismatches;
      }
      for (double r1 : live)
        for (double r2 : live) {
          ++pairs;
          const bool expect = c2 == 0.0 || r1 == r2;
          if (cplane::cplane_equiv({CNum(c), CNum(c2), r1},
                                   {CNum(c), CNum(c2), r2}) != expect)
            ++mismatches;
        }
      // Class count: 0 if no map, 1 into the origin or for the forced ratio.
      std::set<double> classes;
      for (double r : live) {
        bool fresh = true;
        for (double s : classes)
          fresh = fresh && !cplane::cplane_equiv({CNum(c), CNum(c2), r},
                                                 {CNum(c), CNum(c2), s});
        if (fresh)
          classes.insert(r);
      }
      if (classes.size() != (live.empty() ? 0u : 1u))
        ++mismatches;
    }
  Outcome o;
  o.pass = triples == 1000 && mismatches == 0 && valid > 0;
  o.detail = std::to_string(triples) + " triples, " + std::to_string(valid) +
             " Kraus maps, " + std::to_string(pairs) + " pairs, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

// ---- AC7 --------------------------------------------------------------------

std::uint64_t rand_mask(Rng &rng, std::size_t n) {
  return static_cast<std::uint64_t>(rng.integer(0, (1 << n) - 1));
}

fmat::SetFamily rand_family(Rng &rng, std::size_t n) {
  std::vector<std::uint64_t> ms;
  const auto k = rng.integer(0, 3);
  for (int i = 0; i < k; ++i)
    ms.push_back(rand_mask(rng, n));
  return fmat::SetFamily::from_masks(std::move(ms));
}

fmat::Subset image_oracle(const fmat::Relation &r, std::uint64_t mask,
                          bool forward) {
  std::uint64_t out = 0;
  for (const auto &[x, y] : r)
    if (mask >> (forward ? x : y) & 1u)
      out |= std::uint64_t{1} << (forward ? y : x);
  return fmat::from_mask(out);
}

Outcome fmat_fragment() {
  using namespace fmat;
  Rng rng(77);
  std::size_t perp_bad = 0, typing_bad = 0, typed = 0;
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    const IndexSet x = IndexSet::finite(n);
    const SetFamily f = rand_family(rng, n);
    const SetFamily p1 = perp(f, x);
    const SetFamily p3 = perp(perp(p1, x), x);
    // On a finite carrier every intersection is finite: F^perp is the power
    // set, and F sits inside F^perp^perp.
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (!p1.contains(from_mask(s)))
        ++perp_bad;
      if (f.contains(from_mask(s)) && !perp(p1, x).contains(from_mask(s)))
        ++perp_bad;
    }
    if (!families_equal(p1, p3, x))
      ++perp_bad;

    const auto m = static_cast<std::size_t>(rng.integer(1, 5));
    const auto src = FinitenessSpace::unchecked(x, f, rand_family(rng, n));
    const auto tgt = FinitenessSpace::unchecked(
        IndexSet::finite(m), rand_family(rng, m), rand_family(rng, m));
    Relation r;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (rng.coin(0.3))
          r.emplace_back(a, b);
    bool expect = true;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      if (src.a().contains(from_mask(s)) &&
          !tgt.a().contains(image_oracle(r, s, true)))
        expect = false;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << m); ++t)
      if (tgt.b().contains(from_mask(t)) &&
          !src.b().contains(image_oracle(r, t, false)))
        expect = false;
    typed += expect ? 1 : 0;
    if (check_finiteness_relation(r, src, tgt) != expect)
      ++typing_bad;
  }
  // The countable carrier: fin and all are mutually orthogonal.
  const IndexSet w = IndexSet::omega();
  if (!families_equal(perp(SetFamily::fin(), w), SetFamily::all(), w) ||
      !families_equal(perp(SetFamily::all(), w), SetFamily::fin(), w))
    ++perp_bad;

  // Random Gaussian-integer matrices over finite and countable spaces.
  std::size_t compose_errors = 0, assoc_bad = 0;
  const auto any_space = [&]() {
    switch (rng.integer(0, 2)) {
    case 0:
      return FinitenessSpace::omega_fin();
    case 1:
      return FinitenessSpace::omega_all();
    default:
      return FinitenessSpace::finite(static_cast<std::size_t>(rng.integer(1, 4)));
    }
  };
  const auto rand_sparse = [&](const FinitenessSpace &s,
                               const FinitenessSpace &t) {
    const std::uint64_t xs = s.is_finite() ? s.carrier().size() : 6;
    const std::uint64_t ys = t.is_finite() ? t.carrier().size() : 6;
    SparseMatrix::Entries e;
    for (std::uint64_t a = 0; a < xs; ++a)
      for (std::uint64_t b = 0; b < ys; ++b)
        if (rng.coin(0.4))
          e[{a, b}] = Complex(static_cast<double>(rng.integer(-3, 3)),
                              static_cast<double>(rng.integer(-3, 3)));
    return SparseMatrix(s, t, std::move(e));
  };
  for (int i = 0; i < 500; ++i) {
    try {
      const auto a = any_space(), b = any_space(), c = any_space(),
                 d = any_space();
      const auto f = rand_sparse(a, b), g = rand_sparse(b, c),
                 h = rand_sparse(c, d);
      const auto l = fmat_compose(fmat_compose(f, g), h);
      const auto r = fmat_compose(f, fmat_compose(g, h));
      if (l.entries() != r.entries())
        ++assoc_bad;
    } catch (const std::exception &) {
      ++compose_errors;
    }
  }

  // Inclusion of Gaussian-integer matrices is strict.
  std::size_t incl_bad = 0;
  const auto gauss = [&](std::size_t r, std::size_t c) {
    DenseMatrix x(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        x(i, j) = Complex(static_cast<double>(rng.integer(-3, 3)),
                          static_cast<double>(rng.integer(-3, 3)));
    return x;
  };
  for (int i = 0; i < 500; ++i) {
    const std::size_t p = rng.dim(), q = rng.dim(), s = rng.dim();
    const DenseMatrix f = gauss(q, p), g = gauss(s, q), h = gauss(p, s);
    if (include_mat(g * f).entries() !=
        fmat_compose(include_mat(f), include_mat(g)).entries())
      ++incl_bad;
    if (include_mat(mat_dagger(f)).entries() !=
        fmat_dagger(include_mat(f)).entries())
      ++incl_bad;
    if (include_mat(mat_kron(f, h)).entries() !=
        fmat_kron(include_mat(f), include_mat(h)).entries())
      ++incl_bad;
    if (include_mat(DenseMatrix::identity(p)).entries() !=
        SparseMatrix::identity(FinitenessSpace::finite(p)).entries())
      ++incl_bad;
  }
  const FMatModel fm;
  const auto law = check_law(find_law("INCL-STRICT"), fm, 500, 3, 1e-300);
  if (!law.pass || law.max_abs_deviation != 0.0)
    ++incl_bad;

  Outcome o;
  o.pass = perp_bad == 0 && typing_bad == 0 && compose_errors == 0 &&
           assoc_bad == 0 && incl_bad == 0;
  o.detail = "perp " + std::to_string(perp_bad) + " bad; typing " +
             std::to_string(typing_bad) + " bad (" + std::to_string(typed) +
             "/500 typed); compose errors " + std::to_string(compose_errors) +
             ", non-associative " + std::to_string(assoc_bad) +
             "; inclusion " + std::to_string(incl_bad) + " bad";
  return o;
}

// ---- AC8 --------------------------------------------------------------------

Outcome dagger() {
  const MatModel m;
  Rng rng(88);
  std::size_t inv = 0, contra = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = m.random_object(rng), b = m.random_object(rng),
               c = m.random_object(rng);
    const auto k1 =
        cp::random_kraus(m, a, b, m.random_unitary_object(rng), rng);
    const auto k2 =
        cp::random_kraus(m, b, c, m.random_unitary_object(rng), rng);
    inv += cp::equiv_decide(m, cp::kraus_dagger(m, cp::kraus_dagger(m, k1)),
                            k1)
               ? 1
               : 0;
    contra += cp::equiv_decide(
                  m, cp::kraus_dagger(m, cp::kraus_compose(m, k1, k2)),
                  cp::kraus_compose(m, cp::kraus_dagger(m, k2),
                                    cp::kraus_dagger(m, k1)))
                  ? 1
                  : 0;
  }
  Outcome o;
  o.pass = inv == 100 && contra == 100;
  o.detail = "involution " + std::to_string(inv) + "/100, contravariance " +
             std::to_string(contra) + "/100";
  return o;
}

} // namespace

// With arguments, runs only the named criteria (e.g. `acceptance AC2 AC6`).
int main(int argc, char **argv) {
  for (int i = 1; i < argc; ++i)
    g_only.insert(argv[i]);
  criterion("AC1", "coherence suite on mat (tol 1e-9) and cplane (exact)",
            coherence_suite);
  criterion("AC2", "channel equivalence soundness and completeness",
            equivalence);
  criterion("AC3", "channel category laws", category_laws);
  criterion("AC4", "Choi machinery", choi_machinery);
  criterion("AC5", "environment structure", environment);
  criterion("AC6", "cplane equivalence classes on a 10x10x10 grid",
            cplane_grid);
  criterion("AC7", "finiteness fragment", fmat_fragment);
  criterion("AC8", "dagger on channels", dagger);
  std::printf("%d/%d criteria passed\n", g_run - g_failed, g_run);
  return g_failed == 0 && g_run > 0 ? 0 : 1;
}
