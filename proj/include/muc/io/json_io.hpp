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

#ifndef MUC_IO_JSON_IO_HPP
#define MUC_IO_JSON_IO_HPP

#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "muc/cpinf/kraus.hpp"
#include "muc/finiteness.hpp"
#include "muc/matrix.hpp"
#include "muc/models/mat_model.hpp"
#include "muc/report.hpp"

namespace muc::io {

using nlohmann::json;

namespace detail {

inline double finite_number(const json &j, const char *what) {
  if (!j.is_number())
    throw ParseError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x))
    throw ParseError(std::string(what) + " must be finite");
  return x;
}

inline std::size_t count(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  const json &v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field '") + key +
                     "' must be a non-negative integer");
  return v.get<std::size_t>();
}

} // namespace detail

/// Parses a document; syntax errors and numeric overflow become ParseError.
inline json parse_json(std::istream &in) {
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw ParseError(e.what());
  }
}

inline json parse_json(const std::string &text) {
  std::istringstream in(text);
  return parse_json(in);
}

// ---- matrices ---------------------------------------------------------------

inline json matrix_to_json(const DenseMatrix &m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline DenseMatrix matrix_from_json(const json &j) {
  const std::size_t rows = detail::count(j, "rows");
  const std::size_t cols = detail::count(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw ParseError("missing array 'entries'");
  const json &e = j.at("entries");
  if (e.size() != rows * cols)
    throw ParseError("expected " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(e.size()));
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const json &z = e[i];
    if (!z.is_array() || z.size() != 2)
      throw ParseError("entry " + std::to_string(i) + " is not [re, im]");
    m(i / cols, i % cols) = Complex(detail::finite_number(z[0], "real part"),
                                    detail::finite_number(z[1], "imag part"));
  }
  return m;
}

// ---- channels (matrix model) ------------------------------------------------

inline json channel_to_json(const Model &m, const cpinf::KrausMorphism &k) {
  return {{"dom", cpinf::dim_of(m, k.dom())},
          {"cod", cpinf::dim_of(m, k.cod())},
          {"ancilla", cpinf::ancilla_dim(m, k)},
          {"body", matrix_to_json(cpinf::body_matrix(m, k))}};
}

/// Reads a channel on the matrix model; the body must be (u*b) x a.
inline cpinf::KrausMorphism channel_from_json(const MatModel &m,
                                              const json &j) {
  const std::size_t a = detail::count(j, "dom");
  const std::size_t b = detail::count(j, "cod");
  const std::size_t u = detail::count(j, "ancilla");
  if (a == 0 || b == 0 || u == 0)
    throw ParseError("channel dimensions must be positive");
  if (!j.contains("body"))
    throw ParseError("missing field 'body'");
  const DenseMatrix body = matrix_from_json(j.at("body"));
  if (body.rows() != u * b || body.cols() != a)
    throw ParseError("body must be " + std::to_string(u * b) + "x" +
                     std::to_string(a));
  const ObjectExpr ua = ObjectExpr::dim(u);
  return cpinf::kraus_new(
      m, m.make(ObjectExpr::dim(a), oplus(ua, ObjectExpr::dim(b)), body), ua);
}

inline json choi_to_json(const cpinf::ChoiMatrix &c) {
  json j = matrix_to_json(c.matrix);
  j["a"] = c.a;
  j["b"] = c.b;
  return j;
}

inline cpinf::ChoiMatrix choi_from_json(const json &j) {
  cpinf::ChoiMatrix c{matrix_from_json(j), detail::count(j, "a"),
                      detail::count(j, "b")};
  if (c.a == 0 || c.b == 0 || c.matrix.rows() != c.a * c.b ||
      c.matrix.cols() != c.a * c.b)
    throw ParseError("Choi matrix must be (a*b) x (a*b)");
  return c;
}

// ---- finiteness matrices ----------------------------------------------------

inline json family_to_json(const fmat::SetFamily &f) {
  switch (f.kind()) {
  case fmat::SetFamily::Kind::Fin:
    return "fin";
  case fmat::SetFamily::Kind::All:
    return "all";
  case fmat::SetFamily::Kind::Explicit:
    break;
  }
  json out = json::array();
  for (auto m : f.masks())
    out.push_back(fmat::from_mask(m));
  return out;
}

inline fmat::SetFamily family_from_json(const json &j) {
  if (j == "fin")
    return fmat::SetFamily::fin();
  if (j == "all")
    return fmat::SetFamily::all();
  if (!j.is_array())
    throw ParseError("family must be \"fin\", \"all\" or a list of subsets");
  std::vector<fmat::Subset> sets;
  for (const auto &s : j) {
    if (!s.is_array())
      throw ParseError("family members must be index lists");
    std::vector<std::uint64_t> xs;
    for (const auto &x : s) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= 64)
        throw ParseError("explicit family indices must lie in [0, 64)");
      xs.push_back(x.get<std::uint64_t>());
    }
    sets.push_back(fmat::make_subset(std::move(xs)));
  }
  return fmat::SetFamily::explicit_family(std::move(sets));
}

inline json space_to_json(const fmat::FinitenessSpace &s) {
  json x = s.carrier().is_omega() ? json("omega") : json(s.carrier().size());
  return {{"X", x}, {"A", family_to_json(s.a())}, {"B", family_to_json(s.b())}};
}

/// The space is not checked here; see fmat::check_finiteness_space.
inline fmat::FinitenessSpace space_from_json(const json &j) {
  if (!j.is_object() || !j.contains("X") || !j.contains("A") ||
      !j.contains("B"))
    throw ParseError("space needs fields X, A and B");
  const json &x = j.at("X");
  fmat::IndexSet set = fmat::IndexSet::omega();
  if (x.is_array()) {
    std::vector<std::string> labels;
    for (const auto &l : x) {
      if (!l.is_string())
        throw ParseError("index labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    set = fmat::IndexSet::finite(std::move(labels));
  } else if (x != "omega") {
    set = fmat::IndexSet::finite(detail::count(j, "X"));
  }
  return fmat::FinitenessSpace::unchecked(std::move(set),
                                          family_from_json(j.at("A")),
                                          family_from_json(j.at("B")));
}

/// A finiteness matrix as read from disk, before typing is checked.
struct FMatFile {
  fmat::FinitenessSpace src;
  fmat::FinitenessSpace tgt;
  fmat::SparseMatrix::Entries entries;
};

inline FMatFile fmat_from_json(const json &j) {
  if (!j.is_object() || !j.contains("src") || !j.contains("tgt") ||
      !j.contains("entries") || !j.at("entries").is_array())
    throw ParseError("FMat file needs src, tgt and entries");
  FMatFile f{space_from_json(j.at("src")), space_from_json(j.at("tgt")), {}};
  for (const auto &e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw ParseError("FMat entries are [x, y, re, im]");
    f.entries[{e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>()}] =
        Complex(detail::finite_number(e[2], "real part"),
                detail::finite_number(e[3], "imag part"));
  }
  return f;
}

inline json fmat_to_json(const fmat::SparseMatrix &m) {
  json entries = json::array();
  for (const auto &[k, v] : m.entries())
    entries.push_back({k.first, k.second, v.real(), v.imag()});
  return {{"src", space_to_json(m.src())},
          {"tgt", space_to_json(m.tgt())},
          {"entries", entries}};
}

// ---- reports ----------------------------------------------------------------

/// Infinite deviations (a trial that raised) are written as null.
inline json report_to_json(const LawCheckReport &r) {
  json j{{"law", r.law},
         {"model", r.model},
         {"trials", r.trials},
         {"max_abs_deviation", std::isfinite(r.max_abs_deviation)
                                   ? json(r.max_abs_deviation)
                                   : json(nullptr)},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"seed", r.seed}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

} // namespace muc::io

#endif // MUC_IO_JSON_IO_HPP
