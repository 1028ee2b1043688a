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

#ifndef MUC_MODELS_MUTANTS_HPP
#define MUC_MODELS_MUTANTS_HPP

#include <string>

#include "muc/models/fmat_model.hpp"
#include "muc/models/mat_model.hpp"

// Deliberately broken models. The law suite must reject each of them.
namespace muc::mutants {

/// lambda_tensor realized as the commutation permutation.
class SwappedLaxor : public MatModel {
public:
  std::string id() const override { return "mat~swap-lambda"; }

protected:
  DenseMatrix structural_payload(StructuralMap m,
                                 std::span<const ObjectExpr> args,
                                 const Signature &sig) const override {
    if (m == StructuralMap::LaxTensor)
      return commutation_perm(mat_dim(args[0]), mat_dim(args[1]));
    if (m == StructuralMap::LaxTensorInv)
      return commutation_perm(mat_dim(args[1]), mat_dim(args[0]));
    return MatModel::structural_payload(m, args, sig);
  }
};

/// lambda_tensor with a sign flip on the last basis vector.
class SignedLaxor : public MatModel {
public:
  std::string id() const override { return "mat~sign-lambda"; }

protected:
  DenseMatrix structural_payload(StructuralMap m,
                                 std::span<const ObjectExpr> args,
                                 const Signature &sig) const override {
    if (m == StructuralMap::LaxTensor || m == StructuralMap::LaxTensorInv) {
      DenseMatrix d = DenseMatrix::identity(mat_dim(sig.dom));
      d(d.rows() - 1, d.cols() - 1) = -1.0;
      return d;
    }
    return MatModel::structural_payload(m, args, sig);
  }
};

/// Dagger as plain transpose.
class TransposeDagger : public MatModel {
public:
  std::string id() const override { return "mat~no-conj"; }

protected:
  DenseMatrix dagger_payload(const DenseMatrix &m) const override {
    return mat_transpose(m);
  }
};

/// The mix map scaled by 2.
class DoubledMix : public MatModel {
public:
  std::string id() const override { return "mat~double-mix"; }

protected:
  DenseMatrix structural_payload(StructuralMap m,
                                 std::span<const ObjectExpr> args,
                                 const Signature &sig) const override {
    if (m == StructuralMap::Mix)
      return DenseMatrix{{2.0}};
    if (m == StructuralMap::MixInv)
      return DenseMatrix{{0.5}};
    return MatModel::structural_payload(m, args, sig);
  }
};

/// c_tensor(A, B) realized by the permutation for (B, A).
class TransposedSymmetry : public MatModel {
public:
  std::string id() const override { return "mat~transpose-c"; }

protected:
  DenseMatrix structural_payload(StructuralMap m,
                                 std::span<const ObjectExpr> args,
                                 const Signature &sig) const override {
    if (m == StructuralMap::SymTensor)
      return commutation_perm(mat_dim(args[1]), mat_dim(args[0]));
    return MatModel::structural_payload(m, args, sig);
  }
};

/// Set families are taken as given instead of closed downward.
class UnclosedFamilies : public FMatModel {
public:
  std::string id() const override { return "fmat~no-closure"; }

  fmat::SetFamily family(std::vector<std::uint64_t> masks) const override {
    return fmat::SetFamily::from_masks(std::move(masks), false);
  }
};

} // namespace muc::mutants

#endif // MUC_MODELS_MUTANTS_HPP
