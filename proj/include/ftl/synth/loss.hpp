// Copyright 2026 The ftl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <span>
#include <string>

#include "ftl/core/dense_matrix.hpp"
#include "ftl/synth/block_graph.hpp"

namespace ftl {

/// `Real`: 1 - Re Tr(T^dagger U)/d, zero only for an exact match.
/// `Modulus`: 1 - |Tr(T^dagger U)|/d, blind to global phase.
enum class LossForm { Real, Modulus };

std::string loss_form_name(LossForm f);
LossForm loss_form_from_name(const std::string& name);

double unitary_loss(const DenseMatrix& circuit_unitary, const DenseMatrix& target, LossForm form = LossForm::Real);

/// Loss of a path at the given angles; throws on dimension mismatch.
double path_loss(std::span<const double> params, const BlockGraph& graph, const AnsatzPath& path,
                 const DenseMatrix& target, LossForm form = LossForm::Real);

}  // namespace ftl
