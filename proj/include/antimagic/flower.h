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

#ifndef ANTIMAGIC_FLOWER_H_
#define ANTIMAGIC_FLOWER_H_

#include <optional>
#include <string>

#include "antimagic/formula.h"
#include "antimagic/labeling.h"
#include "antimagic/scheme.h"

namespace antimagic {

// "f2" for n = 1, otherwise "h'", "h''" or "h'''" following the helm case
// class.
std::string FlowerFunctionName(int m, int n);

// Single-leaf labeling f2, evaluated through the helm single-leaf labeling.
std::optional<Value> FlowerSingleLabel(const EdgeCell& cell, int m,
                                       const SchemeVariant& variant,
                                       FormulaContext& ctx);

// h' = 2mn + g' wherever it is declared that way.
std::optional<Value> FlowerPrimeLabel(const EdgeCell& cell, int m, int n,
                                      const SchemeVariant& variant,
                                      FormulaContext& ctx);
std::optional<Value> FlowerLabel(const EdgeCell& cell, int m, int n,
                                 CaseClass cls, const SchemeVariant& variant,
                                 FormulaContext& ctx);
std::optional<Value> FlowerPrimeSum(const VertexId& v, int m, int n,
                                    const SchemeVariant& variant,
                                    FormulaContext& ctx);
std::optional<Value> FlowerSum(const VertexId& v, int m, int n, CaseClass cls,
                               const SchemeVariant& variant,
                               FormulaContext& ctx);

SchemeOutcome EvaluateFlowerSingle(int m, const SchemeVariant& variant);
EdgeLabeling LabelFlowerSingle(
    int m, const SchemeVariant& variant = SchemeVariant::Errata());

// n = 1 is routed to the single-leaf labeling.
SchemeOutcome EvaluateFlowerProduct(int m, int n, const SchemeVariant& variant);
EdgeLabeling LabelFlowerProduct(
    int m, int n, const SchemeVariant& variant = SchemeVariant::Errata());

// No closed forms exist for n = 1; every vertex is then unspecified.
ExpectedProfile EvaluateExpectedFlowerSums(int m, int n,
                                           const SchemeVariant& variant);
VertexSumProfile ExpectedFlowerSums(
    int m, int n, const SchemeVariant& variant = SchemeVariant::Errata());

}  // namespace antimagic

#endif  // ANTIMAGIC_FLOWER_H_
