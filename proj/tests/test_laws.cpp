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

#include <set>

#include "muc/laws.hpp"
#include "muc/models/registry.hpp"

using namespace muc;

TEST_CASE("catalog shape", "[laws]") {
  const auto &cat = law_catalog();
  CHECK(cat.size() >= 30);
  std::set<std::string> ids;
  for (const auto &l : cat) {
    CHECK(ids.insert(l.id).second);
    CHECK_FALSE(l.anchor.empty());
    CHECK_FALSE(l.models.empty());
  }
  CHECK(std::is_sorted(cat.begin(), cat.end(),
                       [](const Law &a, const Law &b) { return a.id < b.id; }));
  CHECK(find_law("U5a").anchor == "(φ_A ⊗ φ_B) λ⊗ = mx φ_{A⊕B}");
  CHECK_NOTHROW(find_law("DMIX"));
  CHECK_THROWS_AS(find_law("NOPE"), UnknownLaw);
}

TEST_CASE("every law passes on every standard model it is stated for",
          "[laws]") {
  for (const auto &id : standard_model_ids()) {
    const auto m = find_model(id);
    for (const auto &l : law_catalog()) {
      if (!l.supports(*m))
        continue;
      const auto r = check_law(l, *m, 25, 1234);
      INFO(l.id << " on " << id << ": " << r.witness.value_or(""));
      CHECK(r.pass);
    }
  }
}

TEST_CASE("cplane laws hold exactly", "[laws][cplane]") {
  const CplaneModel m;
  for (const auto &l : law_catalog())
    if (l.supports(m) && l.id.rfind("DLDC", 0) == 0) {
      const auto r = check_law(l, m, 20, 5);
      CHECK(r.max_abs_deviation == 0.0);
    }
}

TEST_CASE("unsupported model is rejected", "[laws]") {
  const CplaneModel m;
  CHECK_THROWS_AS(check_law(find_law("CHOI-DAG"), m, 1, 1), UnsupportedInModel);
}

TEST_CASE("each mutant fails some law", "[laws][mutation]") {
  for (const auto &id : mutant_model_ids()) {
    const auto m = find_model(id);
    std::size_t failures = 0;
    for (const auto &l : law_catalog())
      if (l.supports(*m) && !check_law(l, *m, 20, 7).pass)
        ++failures;
    INFO(id);
    CHECK(failures > 0);
  }
}

TEST_CASE("specific laws catch specific mutations", "[laws][mutation]") {
  const auto fails = [](const char *law, const char *model) {
    return !check_law(find_law(law), *find_model(model), 20, 7).pass;
  };
  CHECK(fails("DLDC1a", "mat~sign-lambda"));
  CHECK(fails("DLDC4a", "mat~swap-lambda"));
  CHECK(fails("UISO", "mat~no-conj"));
  CHECK(fails("U4a", "mat~double-mix"));
  CHECK(fails("DLDC7a", "mat~transpose-c"));
  CHECK(fails("FAM-CLOSED", "fmat~no-closure"));
  CHECK(fails("FAM-REL", "fmat~no-closure"));
}

TEST_CASE("failed reports carry a witness", "[laws]") {
  const auto r = check_law(find_law("DLDC1a"), *find_model("mat~sign-lambda"),
                           10, 7);
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->rfind("trial ", 0) == 0);
}

TEST_CASE("reports are deterministic", "[laws]") {
  const MatModel m;
  const auto &l = find_law("CPI-ASSOC");
  CHECK(check_law(l, m, 10, 99) == check_law(l, m, 10, 99));
  CHECK_FALSE(check_law(l, m, 10, 99).max_abs_deviation ==
              check_law(l, m, 10, 100).max_abs_deviation);
}

TEST_CASE("tolerance override", "[laws]") {
  const MatModel m;
  const auto r = check_law(find_law("CPI-ASSOC"), m, 5, 1, 1e-30);
  CHECK_FALSE(r.pass);
  CHECK(r.tolerance == 1e-30);
}
