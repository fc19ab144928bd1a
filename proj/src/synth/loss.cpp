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


#include "ftl/synth/loss.hpp"

#include <stdexcept>

#include "ftl/core/state_vector.hpp"

namespace ftl {

std::string loss_form_name(LossForm f) { return f == LossForm::Real ? "real" : "modulus"; }

LossForm loss_form_from_name(const std::string& name) {
  if (name == "real") return LossForm::Real;
  if (name == "modulus") return LossForm::Modulus;
  throw std::invalid_argument("unknown loss form '" + name + "' (expected real or modulus)");
}

double unitary_loss(const DenseMatrix& circuit_unitary, const DenseMatrix& target, LossForm form) {
  if (circuit_unitary.dim() != target.dim())
    throw std::invalid_argument("loss: target has dimension " + std::to_string(target.dim()) + ", circuit " +
                                std::to_string(circuit_unitary.dim()));
  const cplx tr = hs_inner(target, circuit_unitary);
  const double d = static_cast<double>(target.dim());
  return 1.0 - (form == LossForm::Real ? tr.real() : std::abs(tr)) / d;
}

double path_loss(std::span<const double> params, const BlockGraph& graph, const AnsatzPath& path,
                 const DenseMatrix& target, LossForm form) {
  return unitary_loss(circuit_unitary(instantiate(graph, path, params)), target, form);
}

}  // namespace ftl
