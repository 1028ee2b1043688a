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

#include "muc/suite.hpp"

using namespace muc;

TEST_CASE("suite over all models", "[suite]") {
  SuiteConfig cfg;
  cfg.models = {"mat", "fmat", "cplane"};
  cfg.trials = 5;
  const auto reports = run_suite(cfg);
  CHECK(reports.size() > law_catalog().size());
  for (std::size_t i = 1; i < reports.size(); ++i)
    CHECK(reports[i - 1].law <= reports[i].law);
  for (const auto &r : reports)
    CHECK(r.pass);
}

TEST_CASE("suite filter", "[suite]") {
  SuiteConfig cfg;
  cfg.models = {"cplane"};
  cfg.filter = "DLDC7*";
  cfg.trials = 1;
  const auto reports = run_suite(cfg);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].law == "DLDC7a");
  CHECK(reports[1].law == "DLDC7b");
  for (const auto &r : reports)
    CHECK(r.max_abs_deviation == 0.0);
}

TEST_CASE("suite errors", "[suite]") {
  SuiteConfig cfg;
  cfg.models = {"nope"};
  CHECK_THROWS_AS(run_suite(cfg), UnknownModel);
  cfg.models = {"mat"};
  cfg.filter = "NOPE*";
  CHECK_THROWS_AS(run_suite(cfg), UnknownLaw);
  cfg.filter = "*";
  cfg.tol = -1.0;
  CHECK_THROWS_AS(run_suite(cfg), TypingError);
}

TEST_CASE("suite is deterministic", "[suite]") {
  SuiteConfig cfg;
  cfg.models = {"mat"};
  cfg.filter = "CPI-*";
  cfg.trials = 5;
  CHECK(run_suite(cfg) == run_suite(cfg));
}

TEST_CASE("mutant fixture reports DLDC1a with a witness", "[suite]") {
  SuiteConfig cfg;
  cfg.models = {"mat~sign-lambda"};
  cfg.filter = "DLDC1a";
  cfg.trials = 10;
  const auto reports = run_suite(cfg);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].pass);
  CHECK(reports[0].witness.has_value());
}

TEST_CASE("list_laws", "[suite]") {
  const auto laws = list_laws();
  CHECK(laws.size() >= 30);
  bool seen = false;
  for (const auto &l : laws)
    if (l.id == "U5a") {
      seen = true;
      CHECK(l.anchor == "(φ_A ⊗ φ_B) λ⊗ = mx φ_{A⊕B}");
      CHECK(l.arity == 2);
    }
  CHECK(seen);
}
