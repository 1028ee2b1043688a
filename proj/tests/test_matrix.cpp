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

#include <cmath>

#include "muc/eigen.hpp"
#include "muc/matrix.hpp"
#include "muc/rng.hpp"

using namespace muc;
using Catch::Matchers::WithinAbs;

TEST_CASE("kron matches the index formula", "[matrix]") {
  Rng rng(3);
  const DenseMatrix f = rng.gaussian_matrix(2, 3);
  const DenseMatrix g = rng.gaussian_matrix(3, 2);
  const DenseMatrix k = mat_kron(f, g);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  double d = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q)
          d = std::max(d, std::abs(k(i * 3 + p, j * 2 + q) - f(i, j) * g(p, q)));
  CHECK(d == 0.0);
}

TEST_CASE("commutation permutation swaps tensor factors", "[matrix]") {
  Rng rng(5);
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      const DenseMatrix x = rng.gaussian_matrix(a, 1);
      const DenseMatrix y = rng.gaussian_matrix(b, 1);
      CHECK(max_abs_diff(commutation_perm(a, b) * mat_kron(x, y),
                         mat_kron(y, x)) < 1e-14);
      CHECK(max_abs_diff(commutation_perm(b, a) * commutation_perm(a, b),
                         DenseMatrix::identity(a * b)) == 0.0);
    }
}

TEST_CASE("bell unit and counit satisfy the snake equation", "[matrix]") {
  for (std::size_t a = 1; a <= 4; ++a) {
    const DenseMatrix id = DenseMatrix::identity(a);
    // (epsilon (x) 1) (1 (x) eta) = 1 as matrices.
    const DenseMatrix snake = mat_kron(bell_counit(a), id) *
                              mat_kron(id, bell_unit(a));
    CHECK(max_abs_diff(snake, id) == 0.0);
  }
}

TEST_CASE("dagger conjugates and transposes", "[matrix]") {
  const DenseMatrix m{{Complex(1, 2), Complex(3, -1)}};
  const DenseMatrix d = mat_dagger(m);
  REQUIRE(d.rows() == 2);
  CHECK(d(0, 0) == Complex(1, -2));
  CHECK(d(1, 0) == Complex(3, 1));
  CHECK(mat_transpose(m)(0, 0) == Complex(1, 2));
}

TEST_CASE("partial trace over the leading factor", "[matrix]") {
  Rng rng(9);
  const DenseMatrix r1 = rng.gaussian_matrix(2, 2);
  const DenseMatrix r2 = rng.gaussian_matrix(3, 3);
  // Tr_1(r1 (x) r2) = Tr(r1) r2.
  const DenseMatrix got = partial_trace_first(mat_kron(r1, r2), 2);
  CHECK(max_abs_diff(got, trace(r1) * r2) < 1e-12);
  CHECK_THROWS_AS(partial_trace_first(DenseMatrix(4, 4), 3), ShapeMismatch);
}

TEST_CASE("apply_channel of the trace channel is the trace", "[matrix]") {
  const DenseMatrix body = DenseMatrix::identity(2);
  const DenseMatrix rho{{0.75, Complex(0, 0.25)}, {Complex(0, -0.25), 0.25}};
  const DenseMatrix out = apply_channel(body, 2, rho);
  REQUIRE(out.rows() == 1);
  CHECK_THAT(out(0, 0).real(), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(apply_channel(body, 2, DenseMatrix{{1.0, 1.0}, {0.0, 1.0}}),
                  NotHermitian);
  CHECK_THROWS_AS(apply_channel(body, 3, rho), ShapeMismatch);
}

TEST_CASE("row blocks and stacking are inverse", "[matrix]") {
  Rng rng(1);
  const DenseMatrix m = rng.gaussian_matrix(6, 2);
  const std::vector<DenseMatrix> blocks{row_block(m, 0, 3), row_block(m, 3, 3)};
  CHECK(max_abs_diff(stack_rows(blocks), m) == 0.0);
}

TEST_CASE("shape errors", "[matrix]") {
  CHECK_THROWS_AS(DenseMatrix(2, 3) * DenseMatrix(2, 3), ShapeMismatch);
  CHECK_THROWS_AS(DenseMatrix(2, 2) + DenseMatrix(3, 3), ShapeMismatch);
  CHECK_THROWS_AS(DenseMatrix(1000, 1000), ShapeMismatch);
  CHECK_THROWS_AS((DenseMatrix{{1.0, 2.0}, {3.0}}), ShapeMismatch);
}

TEST_CASE("eigensolver residual up to dimension 16", "[eigen]") {
  Rng rng(17);
  for (std::size_t n = 1; n <= 16; ++n) {
    const DenseMatrix g = rng.gaussian_matrix(n, n);
    const DenseMatrix h = g + mat_dagger(g);
    const HermitianEig e = hermitian_eig(h);
    DenseMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i)
      lam(i, i) = e.values[i];
    CHECK(max_abs_diff(h * e.vectors, e.vectors * lam) <= 1e-8);
    CHECK(max_abs_diff(mat_dagger(e.vectors) * e.vectors,
                       DenseMatrix::identity(n)) <= 1e-10);
    for (std::size_t i = 1; i < n; ++i)
      CHECK(e.values[i - 1] >= e.values[i]);
    // Trace is the eigenvalue sum.
    double s = 0.0;
    for (double v : e.values)
      s += v;
    CHECK_THAT(s, WithinAbs(trace(h).real(), 1e-9));
  }
}

TEST_CASE("eigensolver on known spectra", "[eigen]") {
  const HermitianEig e =
      hermitian_eig(DenseMatrix{{2.0, Complex(0, 1)}, {Complex(0, -1), 2.0}});
  CHECK_THAT(e.values[0], WithinAbs(3.0, 1e-12));
  CHECK_THAT(e.values[1], WithinAbs(1.0, 1e-12));
  CHECK_THROWS_AS(hermitian_eig(DenseMatrix{{0.0, 1.0}, {0.0, 0.0}}),
                  NotHermitian);
}

TEST_CASE("random unitaries and isometries", "[rng]") {
  Rng rng(23);
  for (std::size_t n = 1; n <= 4; ++n) {
    const DenseMatrix u = random_unitary_matrix(n, rng);
    CHECK(max_abs_diff(mat_dagger(u) * u, DenseMatrix::identity(n)) < 1e-12);
    const DenseMatrix v = random_isometry(n + 2, n, rng);
    CHECK(max_abs_diff(mat_dagger(v) * v, DenseMatrix::identity(n)) < 1e-12);
  }
  CHECK_THROWS_AS(random_isometry(1, 2, rng), ShapeMismatch);
}

TEST_CASE("trial seeds are deterministic and distinct", "[rng]") {
  CHECK(trial_seed(7, "DLDC1a", 0) == trial_seed(7, "DLDC1a", 0));
  CHECK(trial_seed(7, "DLDC1a", 0) != trial_seed(7, "DLDC1a", 1));
  CHECK(trial_seed(7, "DLDC1a", 0) != trial_seed(7, "DLDC1b", 0));
  CHECK(trial_seed(7, "DLDC1a", 0) != trial_seed(8, "DLDC1a", 0));
  Rng a(11), b(11);
  CHECK(max_abs_diff(a.matrix(3, 3), b.matrix(3, 3)) == 0.0);
}
