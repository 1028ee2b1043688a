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

#ifndef MUC_MUC_HPP
#define MUC_MUC_HPP

#include "muc/cpinf/environment.hpp"
#include "muc/cpinf/kraus.hpp"
#include "muc/laws.hpp"
#include "muc/models/registry.hpp"
#include "muc/suite.hpp"

#endif // MUC_MUC_HPP
