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

#include "muc/io/json_io.hpp"
#include "muc/models/registry.hpp"

using namespace muc;
using json = nlohmann::json;

TEST_CASE("matrix round trip", "[io]") {
  Rng rng(3);
  const DenseMatrix m = random_isometry(4, 3, rng);
  const DenseMatrix back = io::matrix_from_json(io::matrix_to_json(m));
  CHECK(max_abs_diff(m, back) == 0.0);
}

TEST_CASE("matrix reader rejects malformed input", "[io]") {
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(
                      R"({"rows":1,"cols":2,"entries":[[1,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse_json(
                      R"({"rows":1,"cols":1,"entries":[[1e400,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(
                      R"({"rows":1,"cols":1,"entries":[[1]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(
                      R"({"rows":-1,"cols":1,"entries":[]})")),
                  ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1})")),
                  ParseError);
}

TEST_CASE("parse errors are reported as ParseError", "[io]") {
  CHECK_THROWS_AS(io::parse_json("{"), ParseError);
  CHECK(io::parse_json("[1, 2]").size() == 2);
}

TEST_CASE("channel and Choi round trip", "[io]") {
  const MatModel m;
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto k = cpinf::random_kraus(m, m.random_object(rng),
                                       m.random_object(rng),
                                       m.random_unitary_object(rng), rng);
    const auto k2 = io::channel_from_json(m, io::channel_to_json(m, k));
    CHECK(max_abs_diff(cpinf::body_matrix(m, k), cpinf::body_matrix(m, k2)) ==
          0.0);
    const auto c = cpinf::to_choi(m, k);
    const auto c2 = io::choi_from_json(io::choi_to_json(c));
    CHECK(cpinf::choi_distance(c, c2) == 0.0);
  }
}

TEST_CASE("channel reader checks the body shape", "[io]") {
  const MatModel m;
  const json bad = json::parse(
      R"({"dom":2,"cod":1,"ancilla":1,"body":{"rows":1,"cols":1,"entries":[[1,0]]}})");
  CHECK_THROWS_AS(io::channel_from_json(m, bad), ParseError);
  json zero = bad;
  zero["dom"] = 0;
  CHECK_THROWS_AS(io::channel_from_json(m, zero), ParseError);
}

TEST_CASE("families and spaces round trip", "[io]") {
  using namespace fmat;
  for (const char *s : {R"("fin")", R"("all")", R"([[0,1],[2]])"}) {
    const SetFamily f = io::family_from_json(json::parse(s));
    CHECK(families_equal(io::family_from_json(io::family_to_json(f)), f,
                         IndexSet::finite(4)));
  }
  CHECK_THROWS_AS(io::family_from_json(json::parse("[[70]]")), ParseError);
  CHECK_THROWS_AS(io::family_from_json(json::parse("3")), ParseError);

  const auto sp = io::space_from_json(
      json::parse(R"({"X":["a","b"],"A":[[0]],"B":[[1]]})"));
  CHECK(sp.carrier().size() == 2);
  const auto om = io::space_from_json(
      json::parse(R"({"X":"omega","A":"fin","B":"all"})"));
  CHECK(om.carrier().is_omega());
  CHECK(io::space_to_json(om)["X"] == "omega");
}

TEST_CASE("finiteness matrix round trip", "[io]") {
  const auto f = io::fmat_from_json(json::parse(
      R"({"src":{"X":"omega","A":"fin","B":"all"},
          "tgt":{"X":3,"A":"all","B":"all"},
          "entries":[[0,1,1.0,0.0],[5,2,0.0,-2.0]]})"));
  const fmat::SparseMatrix sm(f.src, f.tgt, f.entries);
  const auto back = io::fmat_from_json(io::fmat_to_json(sm));
  CHECK(back.entries == f.entries);
  CHECK_THROWS_AS(io::fmat_from_json(json::parse(R"({"src":{}})")),
                  ParseError);
}

TEST_CASE("reports serialise infinite deviations as null", "[io]") {
  LawCheckReport r;
  r.law = "X";
  r.model = "mat";
  r.max_abs_deviation = std::numeric_limits<double>::infinity();
  r.pass = false;
  r.witness = "trial 0";
  const json j = io::report_to_json(r);
  CHECK(j["max_abs_deviation"].is_null());
  CHECK(j["pass"] == false);
  CHECK(j["witness"] == "trial 0");
}
