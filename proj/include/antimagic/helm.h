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

#ifndef ANTIMAGIC_HELM_H_
#define ANTIMAGIC_HELM_H_

#include <optional>
#include <string>

#include "antimagic/formula.h"
#include "antimagic/labeling.h"
#include "antimagic/scheme.h"

namespace antimagic {

// G' iff m >= n and n odd; G'' iff m < n and n odd; G''' iff n even.
// Throws InvalidArgument for n = 1, which the single-leaf labeling handles.
CaseClass HelmCaseClass(int m, int n);

// "f1" for n = 1, otherwise "g'", "g''" or "g'''".
std::string HelmFunctionName(int m, int n);

// Single-leaf labeling f1 of H_m x K_{1,1}.
std::optional<Value> HelmSingleLabel(const EdgeCell& cell, int m,
                                     const SchemeVariant& variant,
                                     FormulaContext& ctx);
std::optional<Value> HelmSingleSum(const VertexId& v, int m,
                                   const SchemeVariant& variant,
                                   FormulaContext& ctx);

// Base labeling g' for n >= 2 (m odd and m even use separate schemes). The
// other classes and the flower schemes are declared as offsets of it.
std::optional<Value> HelmPrimeLabel(const EdgeCell& cell, int m, int n,
                                    const SchemeVariant& variant,
                                    FormulaContext& ctx);
std::optional<Value> HelmPrimeSum(const VertexId& v, int m, int n,
                                  const SchemeVariant& variant,
                                  FormulaContext& ctx);

std::optional<Value> HelmLabel(const EdgeCell& cell, int m, int n,
                               CaseClass cls, const SchemeVariant& variant,
                               FormulaContext& ctx);
std::optional<Value> HelmSum(const VertexId& v, int m, int n, CaseClass cls,
                             const SchemeVariant& variant, FormulaContext& ctx);

SchemeOutcome EvaluateHelmSingle(int m, const SchemeVariant& variant);
EdgeLabeling LabelHelmSingle(
    int m, const SchemeVariant& variant = SchemeVariant::Errata());

// n = 1 is routed to the single-leaf labeling.
SchemeOutcome EvaluateHelmProduct(int m, int n, const SchemeVariant& variant);
EdgeLabeling LabelHelmProduct(
    int m, int n, const SchemeVariant& variant = SchemeVariant::Errata());

ExpectedProfile EvaluateExpectedHelmSums(int m, int n,
                                         const SchemeVariant& variant);
VertexSumProfile ExpectedHelmSums(
    int m, int n, const SchemeVariant& variant = SchemeVariant::Errata());

}  // namespace antimagic

#endif  // ANTIMAGIC_HELM_H_
