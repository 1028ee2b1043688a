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

#ifndef MUC_CNUM_HPP
#define MUC_CNUM_HPP

#include <cmath>
#include <complex>

#include "muc/error.hpp"

namespace muc::cplane {

inline constexpr double kRelTol = 1e-12;

/// A complex number used as an object of the discrete category.
struct CNum {
  double re = 0.0;
  double im = 0.0;

  CNum() = default;
  CNum(double r, double i = 0.0) : re(r), im(i) {
    if (!std::isfinite(r) || !std::isfinite(i))
      throw TypingError("complex object must be finite");
  }
  explicit CNum(std::complex<double> z) : CNum(z.real(), z.imag()) {}

  std::complex<double> value() const { return {re, im}; }
  bool is_zero() const { return re == 0.0 && im == 0.0; }
  bool is_nonzero_real() const { return im == 0.0 && re != 0.0; }

  friend bool operator==(const CNum &, const CNum &) = default;
};

/// (a + ib) (x) (x + iy) = (ax - by) + i(ay + bx).
inline CNum cnum_tensor(CNum z, CNum w) {
  return CNum(z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re);
}

inline CNum cnum_dagger(CNum z) { return CNum(z.re, -z.im); }

inline bool approx_equal(std::complex<double> a, std::complex<double> b,
                         double rel = kRelTol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

inline bool approx_equal(CNum a, CNum b, double rel = kRelTol) {
  return approx_equal(a.value(), b.value(), rel);
}

/// Kraus map (=, r): c -> c' with ancilla r.
struct CplaneKraus {
  CNum dom;
  CNum cod;
  double ancilla = 1.0;
};

/// c = r c' within relative tolerance.
inline bool kraus_valid(CNum c, double r, CNum c_prime) {
  if (!std::isfinite(r))
    return false;
  return approx_equal(c.value(), r * c_prime.value());
}

inline bool kraus_valid(const CplaneKraus &k) {
  return kraus_valid(k.dom, k.ancilla, k.cod);
}

/// Channels into c' != 0 are determined by the ratio; into 0 all Kraus maps
/// are equivalent.
inline bool cplane_equiv(const CplaneKraus &k1, const CplaneKraus &k2) {
  if (!approx_equal(k1.dom, k2.dom) || !approx_equal(k1.cod, k2.cod))
    throw DomCodMismatch("Kraus maps with different endpoints");
  if (!kraus_valid(k1) || !kraus_valid(k2))
    return false;
  if (k1.cod.is_zero())
    return true;
  return approx_equal(std::complex<double>(k1.ancilla),
                      std::complex<double>(k2.ancilla));
}

} // namespace muc::cplane

#endif // MUC_CNUM_HPP
