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

#ifndef MUC_FINITENESS_HPP
#define MUC_FINITENESS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "muc/error.hpp"

namespace muc::fmat {

/// Explicit families are stored as bitmasks, so they live on small sets.
inline constexpr std::size_t kMaxExplicitElements = 16;

/// Either a finite list of distinct labels or the symbolic set of naturals.
/// Elements are addressed by index; labels are only carried for display and
/// do not take part in equality.
class IndexSet {
public:
  static IndexSet finite(std::vector<std::string> labels) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      throw TypingError("index set labels must be distinct");
    IndexSet s;
    s.labels_ = std::move(labels);
    return s;
  }

  static IndexSet finite(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back(std::to_string(i));
    return finite(std::move(labels));
  }

  static IndexSet omega() {
    IndexSet s;
    s.omega_ = true;
    return s;
  }

  bool is_omega() const noexcept { return omega_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  bool contains(std::uint64_t x) const noexcept {
    return omega_ || x < labels_.size();
  }

  friend bool operator==(const IndexSet &a, const IndexSet &b) {
    return a.omega_ == b.omega_ && a.labels_.size() == b.labels_.size();
  }

private:
  bool omega_ = false;
  std::vector<std::string> labels_;
};

using Subset = std::vector<std::uint64_t>; // sorted, distinct

inline Subset make_subset(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline std::uint64_t to_mask(const Subset &s) {
  std::uint64_t m = 0;
  for (auto x : s) {
    if (x >= 64)
      throw TypingError("element " + std::to_string(x) +
                        " outside a bitmask family");
    m |= std::uint64_t{1} << x;
  }
  return m;
}

inline Subset from_mask(std::uint64_t m) {
  Subset s;
  for (std::uint64_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u)
      s.push_back(i);
  return s;
}

/// All submasks of every member.
inline std::vector<std::uint64_t>
down_closure(const std::vector<std::uint64_t> &masks) {
  std::set<std::uint64_t> out;
  for (auto m : masks) {
    if (out.contains(m))
      continue; // its submasks are already present
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      out.insert(sub);
      if (sub == 0)
        break;
    }
  }
  return {out.begin(), out.end()};
}

/// A family of subsets of an index set. Over the naturals only the two tags
/// FIN (all finite subsets) and ALL are representable; over a finite set ALL
/// is the power set and FIN coincides with it.
class SetFamily {
public:
  enum class Kind { Fin, All, Explicit };

  static SetFamily fin() { return SetFamily(Kind::Fin); }
  static SetFamily all() { return SetFamily(Kind::All); }

  /// Explicit family, closed downward unless `close` is false.
  static SetFamily explicit_family(std::vector<Subset> sets,
                                   bool close = true) {
    std::vector<std::uint64_t> masks;
    masks.reserve(sets.size());
    for (const auto &s : sets)
      masks.push_back(to_mask(s));
    return from_masks(std::move(masks), close);
  }

  static SetFamily from_masks(std::vector<std::uint64_t> masks,
                              bool close = true) {
    SetFamily f(Kind::Explicit);
    if (close) {
      f.masks_ = down_closure(masks);
    } else {
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
      f.masks_ = std::move(masks);
    }
    return f;
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint64_t> &masks() const noexcept { return masks_; }

  bool contains(const Subset &s) const {
    switch (kind_) {
    case Kind::All:
    case Kind::Fin: // every Subset we can hold is finite
      return true;
    case Kind::Explicit:
      if (!s.empty() && s.back() >= 64)
        return false;
      return std::binary_search(masks_.begin(), masks_.end(), to_mask(s));
    }
    return false;
  }

  bool is_downward_closed() const {
    return kind_ != Kind::Explicit || down_closure(masks_) == masks_;
  }

private:
  explicit SetFamily(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<std::uint64_t> masks_;
};

/// Family equality relative to the carrier X (FIN = ALL over finite X, and
/// an explicit family equals ALL when it holds every subset).
inline bool families_equal(const SetFamily &a, const SetFamily &b,
                           const IndexSet &x) {
  using K = SetFamily::Kind;
  auto norm = [&](const SetFamily &f) -> K {
    if (x.is_omega())
      return f.kind() == K::Explicit ? K::Explicit : f.kind();
    if (f.kind() == K::Fin)
      return K::All;
    if (f.kind() == K::Explicit && x.size() < 64 &&
        f.masks().size() == (std::size_t{1} << x.size()))
      return K::All;
    return f.kind();
  };
  const K ka = norm(a), kb = norm(b);
  if (ka != kb)
    return false;
  return ka != K::Explicit || a.masks() == b.masks();
}

/// B = { b | |a n b| < inf for all a in F }.
inline SetFamily perp(const SetFamily &f, const IndexSet &x) {
  if (!x.is_omega())
    return SetFamily::all(); // every subset of a finite set is finite
  switch (f.kind()) {
  case SetFamily::Kind::Fin:
  case SetFamily::Kind::Explicit: // finitely many finite sets
    return SetFamily::all();
  case SetFamily::Kind::All:
    return SetFamily::fin();
  }
  return SetFamily::all();
}

inline bool check_finiteness_space(const IndexSet &x, const SetFamily &a,
                                   const SetFamily &b) {
  return families_equal(perp(a, x), b, x) && families_equal(perp(b, x), a, x);
}

class FinitenessSpace {
public:
  static FinitenessSpace make(IndexSet x, SetFamily a, SetFamily b) {
    if (!check_finiteness_space(x, a, b))
      throw TypingError("(X, A, B) is not a finiteness space");
    return unchecked(std::move(x), std::move(a), std::move(b));
  }

  /// Skips the perp check; used to probe the relation check on pre-spaces.
  static FinitenessSpace unchecked(IndexSet x, SetFamily a, SetFamily b) {
    return FinitenessSpace(std::move(x), std::move(a), std::move(b));
  }

  /// (X, P(X), P(X)) for X = {0..n-1}.
  static FinitenessSpace finite(std::size_t n) {
    return make(IndexSet::finite(n), SetFamily::all(), SetFamily::all());
  }

  static FinitenessSpace omega_fin() {
    return make(IndexSet::omega(), SetFamily::fin(), SetFamily::all());
  }

  static FinitenessSpace omega_all() {
    return make(IndexSet::omega(), SetFamily::all(), SetFamily::fin());
  }

  const IndexSet &carrier() const noexcept { return x_; }
  const SetFamily &a() const noexcept { return a_; }
  const SetFamily &b() const noexcept { return b_; }
  bool is_finite() const noexcept { return !x_.is_omega(); }

  /// (X, A, B)^dagger = (X, B, A).
  FinitenessSpace dagger() const { return FinitenessSpace(x_, b_, a_); }

  friend bool operator==(const FinitenessSpace &s, const FinitenessSpace &t) {
    return s.x_ == t.x_ && families_equal(s.a_, t.a_, s.x_) &&
           families_equal(s.b_, t.b_, s.x_);
  }

private:
  FinitenessSpace(IndexSet x, SetFamily a, SetFamily b)
      : x_(std::move(x)), a_(std::move(a)), b_(std::move(b)) {}
  IndexSet x_;
  SetFamily a_;
  SetFamily b_;
};

/// Product space on finite carriers, indexed (x, y) -> x * |Y| + y.
inline FinitenessSpace finite_product(const FinitenessSpace &s,
                                      const FinitenessSpace &t) {
  if (!s.is_finite() || !t.is_finite())
    throw UnsupportedInModel(
        "products of symbolic infinite finiteness spaces");
  std::vector<std::string> labels;
  labels.reserve(s.carrier().size() * t.carrier().size());
  for (const auto &x : s.carrier().labels())
    for (const auto &y : t.carrier().labels())
      labels.push_back("(" + x + "," + y + ")");
  return FinitenessSpace::make(IndexSet::finite(std::move(labels)),
                               SetFamily::all(), SetFamily::all());
}

using Relation = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

namespace detail {

inline Subset image(const Relation &r, const Subset &s, bool forward) {
  std::vector<std::uint64_t> out;
  for (const auto &[x, y] : r) {
    const auto from = forward ? x : y;
    if (std::binary_search(s.begin(), s.end(), from))
      out.push_back(forward ? y : x);
  }
  return make_subset(std::move(out));
}

// Members of `f` that can influence images under a finite relation whose
// relevant elements are `touched`. For tagged families the largest relevant
// member is touched itself; images are monotone and target families are
// downward closed, so that one member decides the condition.
inline std::vector<Subset> relevant_members(const SetFamily &f,
                                            const Subset &touched) {
  if (f.kind() != SetFamily::Kind::Explicit)
    return {touched};
  std::vector<Subset> out;
  out.reserve(f.masks().size());
  for (auto m : f.masks())
    out.push_back(from_mask(m));
  return out;
}

} // namespace detail

/// R is a finiteness relation src -> tgt: A R in A' for A in src.A, and
/// R B' in src.B for B' in tgt.B.
inline bool check_finiteness_relation(const Relation &r,
                                      const FinitenessSpace &src,
                                      const FinitenessSpace &tgt) {
  std::vector<std::uint64_t> dom, cod;
  for (const auto &[x, y] : r) {
    if (!src.carrier().contains(x) || !tgt.carrier().contains(y))
      return false;
    dom.push_back(x);
    cod.push_back(y);
  }
  const Subset dom_r = make_subset(std::move(dom));
  const Subset cod_r = make_subset(std::move(cod));
  for (const auto &a : detail::relevant_members(src.a(), dom_r))
    if (!tgt.a().contains(detail::image(r, a, true)))
      return false;
  for (const auto &b : detail::relevant_members(tgt.b(), cod_r))
    if (!src.b().contains(detail::image(r, b, false)))
      return false;
  return true;
}

} // namespace muc::fmat

#endif // MUC_FINITENESS_HPP
