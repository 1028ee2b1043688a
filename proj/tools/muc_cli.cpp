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

// Command-line front end: law suite runs and channel file operations.
// Exit codes: 0 ok, 1 law failure or inequivalent channels, 2 usage/IO error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "muc/io/json_io.hpp"
#include "muc/muc.hpp"

namespace {

using muc::io::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
  std::string out;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Globals &g) {
  if (g.seed)
    return *g.seed;
  if (const char *env = std::getenv("MUC_CPINF_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size())
        return v;
    } catch (const std::exception &) {
    }
    throw IoError("MUC_CPINF_SEED is not an unsigned integer: " +
                  std::string(env));
  }
  return 7;
}

json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path);
  try {
    return muc::io::parse_json(in);
  } catch (const muc::ParseError &e) {
    throw IoError(path + ": " + e.what());
  }
}

/// Writes one document (or JSON lines) to --out or stdout.
void emit(const Globals &g, const std::string &text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out);
  if (!f)
    throw IoError("cannot write " + g.out);
  f << text;
}

json stamped(json j, std::uint64_t seed, double tol) {
  j["seed"] = seed;
  j["tol"] = tol;
  return j;
}

const muc::MatModel &mat() {
  static const muc::MatModel m;
  return m;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Mixed unitary categories: law suite and channel tools"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed (default: $MUC_CPINF_SEED or 7)");
  app.add_option("--tol", g.tol, "comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write output here instead of stdout");

  // laws-run
  std::vector<std::string> models{"mat"};
  std::uint64_t trials = 100;
  std::string filter = "*";
  std::optional<double> law_tol;
  auto *run = app.add_subcommand("laws-run", "run the law suite");
  run->add_option("--model", models, "model id(s)")->delimiter(',');
  run->add_option("--trials", trials, "randomized trials per law");
  run->add_option("--filter", filter, "glob over law ids");
  run->add_option("--tol", law_tol, "tolerance override")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", g.seed, "RNG seed");
  run->add_option("--out", g.out, "output path");

  auto *list = app.add_subcommand("laws-list", "print the law catalog");
  list->add_option("--out", g.out, "output path");

  std::string in1, in2;
  auto with_common = [&](CLI::App *c) {
    c->add_option("--seed", g.seed, "RNG seed");
    c->add_option("--tol", g.tol, "comparison tolerance")
        ->check(CLI::PositiveNumber);
    c->add_option("--out", g.out, "output path");
    return c;
  };
  auto *compose = with_common(
      app.add_subcommand("channel-compose", "compose two channels"));
  compose->add_option("first", in1)->required()->check(CLI::ExistingFile);
  compose->add_option("second", in2)->required()->check(CLI::ExistingFile);
  auto *equiv = with_common(
      app.add_subcommand("channel-equiv", "decide channel equivalence"));
  equiv->add_option("first", in1)->required()->check(CLI::ExistingFile);
  equiv->add_option("second", in2)->required()->check(CLI::ExistingFile);
  auto *choi =
      with_common(app.add_subcommand("channel-choi", "Choi matrix of a channel"));
  choi->add_option("channel", in1)->required()->check(CLI::ExistingFile);
  auto *decompose = with_common(
      app.add_subcommand("channel-decompose", "pure decomposition"));
  decompose->add_option("channel", in1)->required()->check(CLI::ExistingFile);
  auto *purify = with_common(
      app.add_subcommand("channel-purify", "Kraus form of a Choi matrix"));
  purify->add_option("choi", in1)->required()->check(CLI::ExistingFile);
  auto *apply = with_common(
      app.add_subcommand("channel-apply", "apply a channel to a density"));
  apply->add_option("channel", in1)->required()->check(CLI::ExistingFile);
  apply->add_option("density", in2)->required()->check(CLI::ExistingFile);
  auto *fcheck = with_common(
      app.add_subcommand("fmat-check", "check typing of a finiteness matrix"));
  fcheck->add_option("matrix", in1)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const std::uint64_t seed = resolve_seed(g);
    const double tol = g.tol;

    if (*run) {
      if (!law_tol && app.count("--tol") > 0)
        law_tol = g.tol;
      muc::SuiteConfig cfg{models, filter, trials, seed, law_tol};
      const auto reports = muc::run_suite(cfg);
      std::ostringstream os;
      bool ok = true;
      for (const auto &r : reports) {
        os << muc::io::report_to_json(r).dump() << '\n';
        ok = ok && r.pass;
      }
      emit(g, os.str());
      std::size_t failed = 0;
      for (const auto &r : reports)
        failed += r.pass ? 0 : 1;
      std::cerr << reports.size() << " reports, " << failed << " failed\n";
      return ok ? kOk : kFail;
    }
    if (*list) {
      json arr = json::array();
      for (const auto &l : muc::list_laws())
        arr.push_back({{"id", l.id},
                       {"anchor", l.anchor},
                       {"arity", l.arity},
                       {"models", l.models}});
      emit(g, arr.dump(2) + "\n");
      return kOk;
    }
    if (*compose) {
      const auto k1 = muc::io::channel_from_json(mat(), read_json(in1));
      const auto k2 = muc::io::channel_from_json(mat(), read_json(in2));
      if (muc::cpinf::dim_of(mat(), k1.cod()) !=
          muc::cpinf::dim_of(mat(), k2.dom()))
        throw muc::DomCodMismatch("codomain of the first channel is not the "
                                  "domain of the second");
      const auto k = muc::cpinf::kraus_compose(mat(), k1, k2);
      emit(g, stamped(muc::io::channel_to_json(mat(), k), seed, tol).dump() +
                  "\n");
      return kOk;
    }
    if (*equiv) {
      const auto k1 = muc::io::channel_from_json(mat(), read_json(in1));
      const auto k2 = muc::io::channel_from_json(mat(), read_json(in2));
      if (!(k1.dom() == k2.dom()) || !(k1.cod() == k2.cod()))
        throw muc::DomCodMismatch("channels have different endpoints");
      const bool eq = muc::cpinf::equiv_decide(mat(), k1, k2, tol);
      const double d = muc::cpinf::choi_distance(muc::cpinf::to_choi(mat(), k1),
                                                 muc::cpinf::to_choi(mat(), k2));
      emit(g, stamped({{"equivalent", eq}, {"choi_distance", d}}, seed, tol)
                      .dump() +
                  "\n");
      return eq ? kOk : kFail;
    }
    if (*choi) {
      const auto k = muc::io::channel_from_json(mat(), read_json(in1));
      emit(g, stamped(muc::io::choi_to_json(muc::cpinf::to_choi(mat(), k)),
                      seed, tol)
                      .dump() +
                  "\n");
      return kOk;
    }
    if (*decompose) {
      const auto k = muc::io::channel_from_json(mat(), read_json(in1));
      json ops = json::array();
      for (const auto &p : muc::cpinf::pure_decomposition(mat(), k))
        ops.push_back(muc::io::matrix_to_json(p.dense()));
      emit(g, stamped({{"kraus", ops}}, seed, tol).dump() + "\n");
      return kOk;
    }
    if (*purify) {
      const auto c = muc::io::choi_from_json(read_json(in1));
      const auto k = muc::cpinf::purify(mat(), c, muc::ObjectExpr::dim(c.a),
                                        muc::ObjectExpr::dim(c.b));
      emit(g, stamped(muc::io::channel_to_json(mat(), k), seed, tol).dump() +
                  "\n");
      return kOk;
    }
    if (*apply) {
      const auto k = muc::io::channel_from_json(mat(), read_json(in1));
      const auto rho = muc::io::matrix_from_json(read_json(in2));
      const std::size_t a = muc::cpinf::dim_of(mat(), k.dom());
      if (rho.rows() != a || rho.cols() != a)
        throw muc::ShapeMismatch("density must be " + std::to_string(a) + "x" +
                                 std::to_string(a));
      emit(g, stamped(muc::io::matrix_to_json(
                          muc::cpinf::apply_kraus(mat(), k, rho)),
                      seed, tol)
                      .dump() +
                  "\n");
      return kOk;
    }
    if (*fcheck) {
      const auto f = muc::io::fmat_from_json(read_json(in1));
      const auto space_ok = [](const muc::fmat::FinitenessSpace &s) {
        return muc::fmat::check_finiteness_space(s.carrier(), s.a(), s.b());
      };
      muc::fmat::Relation r;
      for (const auto &[key, v] : f.entries)
        if (std::abs(v) >= muc::fmat::kSupportCutoff)
          r.push_back(key);
      const bool src_ok = space_ok(f.src);
      const bool tgt_ok = space_ok(f.tgt);
      const bool typed = muc::fmat::check_finiteness_relation(r, f.src, f.tgt);
      const bool valid = src_ok && tgt_ok && typed;
      emit(g, stamped({{"valid", valid},
                       {"src_is_space", src_ok},
                       {"tgt_is_space", tgt_ok},
                       {"support_typed", typed},
                       {"support_size", r.size()}},
                      seed, tol)
                      .dump() +
                  "\n");
      return valid ? kOk : kFail;
    }
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const muc::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
