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

#ifndef MUC_LAWS_HPP
#define MUC_LAWS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muc/laws/channel.hpp"
#include "muc/laws/fmat.hpp"
#include "muc/laws/kit.hpp"
#include "muc/laws/ldc.hpp"

namespace muc {

/// Every law, sorted by id.
inline const std::vector<Law> &law_catalog() {
  static const std::vector<Law> catalog = [] {
    std::vector<Law> all = laws::ldc_laws();
    for (auto &l : laws::fmat_laws())
      all.push_back(std::move(l));
    for (auto &l : laws::channel_laws())
      all.push_back(std::move(l));
    std::sort(all.begin(), all.end(),
              [](const Law &a, const Law &b) { return a.id < b.id; });
    return all;
  }();
  return catalog;
}

inline const Law &find_law(const std::string &id) {
  for (const auto &l : law_catalog())
    if (l.id == id)
      return l;
  throw UnknownLaw("no law named '" + id + "'");
}

/// Runs one law on one model; `tol` defaults to the model's tolerance.
inline LawCheckReport check_law(const Law &law, const Model &m,
                                std::uint64_t trials, std::uint64_t seed,
                                std::optional<double> tol = std::nullopt) {
  if (!law.supports(m))
    throw UnsupportedInModel("law " + law.id + " is not stated for model '" +
                             m.id() + "'");
  return run_trials(law.id, m.id(), trials, seed,
                    tol.value_or(m.default_tolerance()),
                    [&](Rng &rng) { return law.trial(m, rng); });
}

} // namespace muc

#endif // MUC_LAWS_HPP
