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

#ifndef MUC_ERROR_HPP
#define MUC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace muc {

/// Base of every error raised by the library. Each subclass corresponds to
/// one failure kind a caller may want to dispatch on.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MUC_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

MUC_DEFINE_ERROR(ShapeMismatch);
MUC_DEFINE_ERROR(ModelMismatch);
MUC_DEFINE_ERROR(UnsupportedInModel);
MUC_DEFINE_ERROR(ArityError);
MUC_DEFINE_ERROR(TypingError);
MUC_DEFINE_ERROR(NotHermitian);
MUC_DEFINE_ERROR(NotPSD);
MUC_DEFINE_ERROR(NoConvergence);
MUC_DEFINE_ERROR(SpaceMismatch);
MUC_DEFINE_ERROR(DomCodMismatch);
MUC_DEFINE_ERROR(UnknownModel);
MUC_DEFINE_ERROR(UnknownLaw);
MUC_DEFINE_ERROR(ParseError);
// A structural map whose endpoints do not coincide in a discrete model
// (only identities exist there).
MUC_DEFINE_ERROR(NoSuchMorphism);

#undef MUC_DEFINE_ERROR

} // namespace muc

#endif // MUC_ERROR_HPP
