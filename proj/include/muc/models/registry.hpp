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

#ifndef MUC_MODELS_REGISTRY_HPP
#define MUC_MODELS_REGISTRY_HPP

#include <memory>
#include <string>
#include <vector>

#include "muc/models/cplane_model.hpp"
#include "muc/models/fmat_model.hpp"
#include "muc/models/mat_model.hpp"
#include "muc/models/mutants.hpp"

namespace muc {

inline std::vector<std::string> standard_model_ids() {
  return {"mat", "fmat", "cplane"};
}

/// Ids of the deliberately broken fixtures.
inline std::vector<std::string> mutant_model_ids() {
  return {"mat~swap-lambda", "mat~sign-lambda", "mat~no-conj",
          "mat~double-mix",  "mat~transpose-c", "fmat~no-closure"};
}

/// Looks up a model by id; the mutant fixtures are registered too.
inline std::shared_ptr<const Model> find_model(const std::string &id) {
  if (id == "mat")
    return std::make_shared<MatModel>();
  if (id == "fmat")
    return std::make_shared<FMatModel>();
  if (id == "cplane")
    return std::make_shared<CplaneModel>();
  if (id == "mat~swap-lambda")
    return std::make_shared<mutants::SwappedLaxor>();
  if (id == "mat~sign-lambda")
    return std::make_shared<mutants::SignedLaxor>();
  if (id == "mat~no-conj")
    return std::make_shared<mutants::TransposeDagger>();
  if (id == "mat~double-mix")
    return std::make_shared<mutants::DoubledMix>();
  if (id == "mat~transpose-c")
    return std::make_shared<mutants::TransposedSymmetry>();
  if (id == "fmat~no-closure")
    return std::make_shared<mutants::UnclosedFamilies>();
  throw UnknownModel("no model named '" + id + "'");
}

} // namespace muc

#endif // MUC_MODELS_REGISTRY_HPP
