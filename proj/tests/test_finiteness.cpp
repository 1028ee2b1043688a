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

#include <catch_amalgamated.hpp>

#include "muc/finiteness.hpp"
#include "muc/models/fmat_model.hpp"
#include "muc/rng.hpp"
#include "muc/sparse.hpp"

using namespace muc;
using namespace muc::fmat;

namespace {

// Brute-force perp over a finite carrier: every subset b with |a n b| finite
// for all a in F. Over a finite set that is every subset.
std::vector<std::uint64_t> brute_perp(const SetFamily &, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
    out.push_back(b);
  return out;
}

bool family_is(const SetFamily &f, const std::vector<std::uint64_t> &masks,
               std::size_t n) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const bool want =
        std::find(masks.begin(), masks.end(), m) != masks.end();
    if (f.contains(from_mask(m)) != want)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("perp on finite carriers is the power set", "[finiteness]") {
  const auto x = IndexSet::finite(3);
  const auto f = SetFamily::explicit_family({{}, {0}});
  CHECK(family_is(perp(f, x), brute_perp(f, 3), 3));
  CHECK(families_equal(perp(f, x), SetFamily::all(), x));
}

TEST_CASE("perp table on the countable carrier", "[finiteness]") {
  const auto w = IndexSet::omega();
  CHECK(families_equal(perp(SetFamily::fin(), w), SetFamily::all(), w));
  CHECK(families_equal(perp(SetFamily::all(), w), SetFamily::fin(), w));
  CHECK(families_equal(perp(perp(SetFamily::fin(), w), w), SetFamily::fin(), w));
  CHECK_FALSE(families_equal(SetFamily::fin(), SetFamily::all(), w));
}

TEST_CASE("perp is antitone and perp^3 = perp on random families",
          "[finiteness][property]") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto x = IndexSet::finite(n);
    std::vector<std::uint64_t> m1, m2;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < 3; ++i)
      m1.push_back(static_cast<std::uint64_t>(rng.integer(0, 63)) & full);
    m2 = m1;
    m2.push_back(static_cast<std::uint64_t>(rng.integer(0, 63)) & full);
    const auto f1 = SetFamily::from_masks(m1);
    const auto f2 = SetFamily::from_masks(m2); // f1 is contained in f2
    const auto p1 = perp(f1, x), p2 = perp(f2, x);
    for (std::uint64_t b = 0; b <= full; ++b)
      if (p2.contains(from_mask(b)))
        CHECK(p1.contains(from_mask(b)));
    CHECK(families_equal(perp(perp(p1, x), x), p1, x));
  }
}

TEST_CASE("explicit families close downward", "[finiteness]") {
  const auto f = SetFamily::explicit_family({{0, 2}});
  CHECK(f.is_downward_closed());
  CHECK(family_is(f, {0b000, 0b001, 0b100, 0b101}, 3));
  const auto raw = SetFamily::from_masks({0b101}, false);
  CHECK_FALSE(raw.is_downward_closed());
}

TEST_CASE("finiteness space checks", "[finiteness]") {
  const auto x = IndexSet::finite(3);
  CHECK(check_finiteness_space(x, SetFamily::all(), SetFamily::all()));
  CHECK_FALSE(check_finiteness_space(x, SetFamily::explicit_family({{0}}),
                                     SetFamily::all()));
  const auto w = IndexSet::omega();
  CHECK(check_finiteness_space(w, SetFamily::fin(), SetFamily::all()));
  CHECK_FALSE(check_finiteness_space(w, SetFamily::all(), SetFamily::all()));
  CHECK_THROWS_AS(
      FinitenessSpace::make(w, SetFamily::fin(), SetFamily::fin()),
      TypingError);
  const auto s = FinitenessSpace::omega_fin();
  CHECK(s.dagger() == FinitenessSpace::omega_all());
  CHECK(s.dagger().dagger() == s);
}

TEST_CASE("finiteness relations", "[finiteness]") {
  const auto s2 = FinitenessSpace::finite(2);
  CHECK(check_finiteness_relation({}, s2, s2));
  CHECK(check_finiteness_relation({{0, 1}, {1, 1}}, s2, s2));
  const auto w = FinitenessSpace::omega_fin();
  CHECK(check_finiteness_relation({{0, 3}, {7, 3}, {7, 9}}, w, w));
  CHECK_FALSE(check_finiteness_relation({{0, 2}}, s2, s2));
  // Pre-space whose A holds only the empty set: {0} R = {0} is not allowed.
  const auto narrow = FinitenessSpace::unchecked(
      IndexSet::finite(2), SetFamily::explicit_family({{}}), SetFamily::all());
  CHECK_FALSE(check_finiteness_relation({{0, 0}}, s2, narrow));
  CHECK(check_finiteness_relation({}, s2, narrow));
}

TEST_CASE("sparse composition", "[sparse]") {
  const auto s2 = FinitenessSpace::finite(2);
  const auto s3 = FinitenessSpace::finite(3);
  const SparseMatrix m1(s2, s3, {{{0, 1}, Complex(2, 1)}});
  const SparseMatrix m2(s3, s2, {{{1, 0}, Complex(0, 3)}});
  const SparseMatrix p = fmat_compose(m1, m2);
  CHECK(p.at(0, 0) == Complex(2, 1) * Complex(0, 3));
  CHECK(p.entries().size() == 1);
  CHECK(fmat::max_abs_diff(fmat_compose(m1, SparseMatrix::identity(s3)), m1) ==
        0.0);
  const SparseMatrix m3(s3, s2, {{{2, 0}, 1.0}});
  CHECK(fmat_compose(m1, m3).entries().empty());
  CHECK_THROWS_AS(fmat_compose(m1, m1), SpaceMismatch);
}

TEST_CASE("sparse dagger flips typing and conjugates", "[sparse]") {
  const auto w = FinitenessSpace::omega_fin();
  const auto s2 = FinitenessSpace::finite(2);
  const SparseMatrix m(w, s2, {{{4, 1}, Complex(1, 1)}});
  const SparseMatrix d = fmat_dagger(m);
  CHECK(d.src() == s2.dagger());
  CHECK(d.tgt() == w.dagger());
  CHECK(d.at(1, 4) == Complex(1, -1));
  CHECK(fmat::max_abs_diff(fmat_dagger(d), m) == 0.0);
}

TEST_CASE("entries below the cutoff leave the support", "[sparse]") {
  const auto s2 = FinitenessSpace::finite(2);
  const SparseMatrix m(s2, s2, {{{0, 0}, 1e-16}, {{1, 1}, 1.0}});
  CHECK(m.support().size() == 1);
}

TEST_CASE("include_mat is strict", "[sparse]") {
  Rng rng(2);
  const DenseMatrix f = rng.gaussian_matrix(2, 3);
  const DenseMatrix g = rng.gaussian_matrix(2, 2);
  CHECK(fmat::max_abs_diff(include_mat(mat_kron(f, g)),
                           fmat_kron(include_mat(f), include_mat(g))) == 0.0);
  CHECK(fmat::max_abs_diff(include_mat(mat_dagger(f)),
                           fmat_dagger(include_mat(f))) == 0.0);
  CHECK(include_mat(DenseMatrix::identity(2)).support().size() == 2);
  CHECK(max_abs_diff(to_dense(include_mat(f)), f) == 0.0);
}
