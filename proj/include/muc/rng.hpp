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

#ifndef MUC_RNG_HPP
#define MUC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "muc/error.hpp"
#include "muc/matrix.hpp"

namespace muc {

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed for one trial of one law; independent of the order trials run in.
inline std::uint64_t trial_seed(std::uint64_t seed, std::string_view law,
                                std::uint64_t trial) {
  return mix64(mix64(seed ^ fnv1a(law)) + trial);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t seed_bits() { return engine_(); }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  /// Uniform integer in [lo, hi].
  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }

  bool coin(double p = 0.5) { return uniform() < p; }

  /// Dimension drawn from {1, 2, 3}.
  std::size_t dim() { return static_cast<std::size_t>(integer(1, 3)); }

  Complex unit_square() { return {uniform(), uniform()}; }

  Complex gaussian() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(engine_), n(engine_)};
  }

  DenseMatrix matrix(std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = unit_square();
    return m;
  }

  DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = gaussian();
    return m;
  }

  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// Random unitary: Gram-Schmidt on a Gaussian matrix.
inline DenseMatrix random_unitary_matrix(std::size_t n, Rng &rng) {
  DenseMatrix q = rng.gaussian_matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot{};
      for (std::size_t i = 0; i < n; ++i)
        dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i)
        q(i, j) -= dot * q(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i)
      q(i, j) /= norm;
  }
  return q;
}

/// Isometry n -> m (m >= n): the first n columns of a random unitary.
inline DenseMatrix random_isometry(std::size_t m, std::size_t n, Rng &rng) {
  if (m < n)
    throw ShapeMismatch("an isometry needs at least as many rows as columns");
  const DenseMatrix u = random_unitary_matrix(m, rng);
  DenseMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = u(i, j);
  return out;
}

} // namespace muc

#endif // MUC_RNG_HPP
