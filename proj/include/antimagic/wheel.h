// Copyright 2026 The antimagic Authors
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

#ifndef ANTIMAGIC_WHEEL_H_
#define ANTIMAGIC_WHEEL_H_

#include <optional>

#include "antimagic/formula.h"
#include "antimagic/labeling.h"
#include "antimagic/scheme.h"

namespace antimagic {

// Label of one cell of W_m x K_{1,n}; m odd and m even use separate schemes.
std::optional<Value> WheelLabel(const EdgeCell& cell, int m, int n,
                                const SchemeVariant& variant,
                                FormulaContext& ctx);

// Closed-form sum at one vertex of W_m x K_{1,n}.
std::optional<Value> WheelSum(const VertexId& v, int m, int n,
                              const SchemeVariant& variant,
                              FormulaContext& ctx);

SchemeOutcome EvaluateWheelProduct(int m, int n, const SchemeVariant& variant);
// Throws CoverageError when a cell falls into zero or several branches.
EdgeLabeling LabelWheelProduct(
    int m, int n, const SchemeVariant& variant = SchemeVariant::Errata());

ExpectedProfile EvaluateExpectedWheelSums(int m, int n,
                                          const SchemeVariant& variant);
VertexSumProfile ExpectedWheelSums(
    int m, int n, const SchemeVariant& variant = SchemeVariant::Errata());

}  // namespace antimagic

#endif  // ANTIMAGIC_WHEEL_H_
