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

#ifndef MUC_EIGEN_HPP
#define MUC_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "muc/matrix.hpp"

namespace muc {

struct HermitianEig {
  std::vector<double> values; // descending
  DenseMatrix vectors;        // column k pairs with values[k]
};

struct JacobiOptions {
  double threshold = 1e-12;
  int max_sweeps = 50;
};

/// Cyclic complex Jacobi. H = V diag(values) V^dagger on return.
inline HermitianEig hermitian_eig(const DenseMatrix &h,
                                  JacobiOptions opts = {}) {
  if (!is_hermitian(h, 1e-9))
    throw NotHermitian("eigendecomposition input");
  const std::size_t n = h.rows();
  DenseMatrix a = h;
  DenseMatrix v = DenseMatrix::identity(n);

  double scale = 0.0;
  for (const auto &x : a.entries())
    scale += std::norm(x);
  scale = std::max(1.0, std::sqrt(scale));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = off_norm() <= opts.threshold * scale;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= opts.threshold * scale * 1e-3)
          continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    converged = off_norm() <= opts.threshold * scale;
  }
  if (!converged)
    throw NoConvergence("Jacobi did not converge in " +
                        std::to_string(opts.max_sweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
    return a(i, i).real() > a(j, j).real();
  });
  HermitianEig out;
  out.values.reserve(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r)
      out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

} // namespace muc

#endif // MUC_EIGEN_HPP
