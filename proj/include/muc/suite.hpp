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

#ifndef MUC_SUITE_HPP
#define MUC_SUITE_HPP

#include <fnmatch.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muc/laws.hpp"
#include "muc/models/registry.hpp"

namespace muc {

struct SuiteConfig {
  std::vector<std::string> models{"mat"};
  std::string filter = "*"; // glob over law ids
  std::uint64_t trials = 100;
  std::uint64_t seed = 7;
  std::optional<double> tol;
};

inline bool law_matches(const std::string &glob, const std::string &id) {
  return ::fnmatch(glob.c_str(), id.c_str(), 0) == 0;
}

/// One report per (law, model) pair the law is stated for, sorted by law id
/// and then by model order in the config.
inline std::vector<LawCheckReport> run_suite(const SuiteConfig &cfg) {
  if (cfg.tol && !(*cfg.tol > 0.0))
    throw TypingError("tolerance must be positive");
  std::vector<const Law *> selected;
  for (const auto &l : law_catalog())
    if (law_matches(cfg.filter, l.id))
      selected.push_back(&l);
  if (selected.empty())
    throw UnknownLaw("no law matches '" + cfg.filter + "'");
  std::vector<std::shared_ptr<const Model>> models;
  for (const auto &id : cfg.models)
    models.push_back(find_model(id));
  std::vector<LawCheckReport> out;
  for (const Law *l : selected)
    for (const auto &m : models)
      if (l->supports(*m))
        out.push_back(check_law(*l, *m, cfg.trials, cfg.seed, cfg.tol));
  return out;
}

struct LawInfo {
  std::string id;
  std::string anchor;
  std::size_t arity = 0;
  std::vector<std::string> models;
};

inline std::vector<LawInfo> list_laws() {
  std::vector<LawInfo> out;
  for (const auto &l : law_catalog())
    out.push_back({l.id, l.anchor, l.arity, l.models});
  return out;
}

} // namespace muc

#endif // MUC_SUITE_HPP
