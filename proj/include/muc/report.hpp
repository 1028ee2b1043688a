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

#ifndef MUC_REPORT_HPP
#define MUC_REPORT_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "muc/error.hpp"
#include "muc/rng.hpp"

namespace muc {

struct LawCheckReport {
  std::string law;
  std::string model;
  std::uint64_t trials = 0;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::uint64_t seed = 0;
  /// First failing instance, if any.
  std::optional<std::string> witness;

  friend bool operator==(const LawCheckReport &,
                         const LawCheckReport &) = default;
};

/// Outcome of one randomized trial.
struct TrialResult {
  double deviation = 0.0;
  std::string instance;
};

using TrialFn = std::function<TrialResult(Rng &)>;

/// Runs `trials` independently seeded trials. A library error inside a
/// trial (a structural map that does not exist, a typing failure) counts as
/// infinite deviation.
inline LawCheckReport run_trials(const std::string &law,
                                 const std::string &model,
                                 std::uint64_t trials, std::uint64_t seed,
                                 double tol, const TrialFn &trial) {
  LawCheckReport r{law, model, trials, 0.0, tol, true, seed, std::nullopt};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, law, t));
    TrialResult res;
    try {
      res = trial(rng);
    } catch (const Error &e) {
      res.deviation = std::numeric_limits<double>::infinity();
      res.instance = e.what();
    }
    if (!(res.deviation <= r.max_abs_deviation))
      r.max_abs_deviation = res.deviation;
    if (!(res.deviation <= tol) && r.pass) {
      r.pass = false;
      r.witness = "trial " + std::to_string(t) + ": " + res.instance;
    }
  }
  return r;
}

} // namespace muc

#endif // MUC_REPORT_HPP
