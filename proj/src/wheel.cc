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

#include "antimagic/wheel.h"

#include <string>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

bool Odd(Value x) { return x % 2 != 0; }
bool Even(Value x) { return x % 2 == 0; }

std::optional<Value> OddLabel(const EdgeCell& c, Value m, Value n,
                              const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = m * n;
  const std::string cell = CellName(c, static_cast<int>(m));
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.Select("wheel-odd hub-spoke", cell,
                        {{"i!=1, i odd", i != 1 && Odd(i),
                          2 * mn + (i - 1) * n + 2 * j - 1},
                         {"i!=1, i even", i != 1 && Even(i),
                          3 * mn + (i - 1) * n + 2 * j - 1},
                         {"i=1, n odd", i == 1 && Odd(n), 2 * mn + 2 * j - 1},
                         {"i=1, n even", i == 1 && Even(n), 2 * mn + 2 * j}});
    case EdgeFamily::kRimBackward:
      if (i == m) return ctx.Single("wheel-odd rim-backward wrap", j);
      return ctx.Select("wheel-odd rim-backward", cell,
                        {{"i even", Even(i), i * n + j},
                         {"i odd", Odd(i), mn + i * n + j}});
    case EdgeFamily::kRimForward:
      if (i == m) return ctx.Single("wheel-odd rim-forward wrap", mn + j);
      if (v.Patched(Patch::kWheelOddRimForwardParity)) {
        return ctx.Select("wheel-odd rim-forward [W1]", cell,
                          {{"i odd", Odd(i), i * n + j},
                           {"i even", Even(i), mn + i * n + j}});
      }
      return ctx.Select("wheel-odd rim-forward", cell,
                        {{"i even", Even(i), i * n + j},
                         {"i odd", Odd(i), mn + i * n + j}});
    case EdgeFamily::kCenterSpoke:
      return ctx.Select(
          "wheel-odd center-spoke", cell,
          {{"i!=2, i even", i != 2 && Even(i), 2 * mn + (i - 2) * n + 2 * j},
           {"i!=2, i odd, i!=m", i != 2 && Odd(i) && i != m,
            3 * mn + i * n + 2 * j},
           {"i!=2, i=m", i != 2 && i == m, 2 * mn + (i - 1) * n + 2 * j},
           {"i=2, n odd", i == 2 && Odd(n), 2 * mn + 2 * j},
           {"i=2, n even", i == 2 && Even(n), 2 * mn + 2 * j - 1}});
    default:
      break;
  }
  throw InvalidArgument("wheel products have no " +
                        std::string(ToString(c.family)) + " edges");
}

std::optional<Value> EvenLabel(const EdgeCell& c, Value m, Value n,
                               const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = m * n, fl = m / 4, cl = (m + 3) / 4;
  const std::string cell = CellName(c, static_cast<int>(m));
  switch (c.family) {
    case EdgeFamily::kHubSpoke: {
      const bool w2 = v.Patched(Patch::kWheelEvenHubEvenSpoke);
      return ctx.Select(
          w2 ? "wheel-even hub-spoke [W2]" : "wheel-even hub-spoke", cell,
          {{"i!=1, i odd", i != 1 && Odd(i), (2 * m + i - 1) * n + 2 * j - 1},
           {"i!=1, i even", i != 1 && Even(i),
            w2 ? (4 * m - i) * n + 2 * j - 1 : (4 * m + 1 - i) * n - 5 + 2 * j},
           {"i=1, n odd", i == 1 && Odd(n), 2 * mn + 2 * j - 1},
           {"i=1, n even", i == 1 && Even(n), 2 * mn + 2 * j}});
    }
    case EdgeFamily::kRimBackward:
      if (i == m) return ctx.Single("wheel-even rim-backward wrap", j);
      return ctx.Select("wheel-even rim-backward", cell,
                        {{"i odd", Odd(i), n * (2 * m - i) + j},
                         {"i even", Even(i), i * n + j}});
    case EdgeFamily::kRimForward:
      if (i == m) return ctx.Single("wheel-even rim-forward wrap", mn + j);
      return ctx.Select("wheel-even rim-forward", cell,
                        {{"i odd", Odd(i), i * n + j},
                         {"i even", Even(i), n * (2 * m - i) + j}});
    case EdgeFamily::kCenterSpoke:
      return ctx.Select(
          "wheel-even center-spoke", cell,
          {{"i=2, n odd", i == 2 && Odd(n), 2 * mn + 2 * j},
           {"i=2, n even", i == 2 && Even(n), 2 * mn + 2 * j - 1},
           {"4<=i<=2F, i even", i != 2 && 4 <= i && i <= 2 * fl && Even(i),
            n * (2 * m + i - 2) + 2 * j},
           {"i=m", i != 2 && i == m, n * (2 * m + 2 * fl) + 2 * j},
           {"2F+2<=i<=m-2, i even",
            i != 2 && 2 * fl + 2 <= i && i <= m - 2 && Even(i),
            n * (2 * m + i) + 2 * j},
           {"2C+1<=i<=m-1, i odd",
            i != 2 && 2 * cl + 1 <= i && i <= m - 1 && Odd(i),
            n * (4 * m - 1 - i) + 2 * j},
           {"i=1", i != 2 && i == 1, n * (4 * m - 2 * cl) + 2 * j},
           {"3<=i<=2C-1, i odd", i != 2 && 3 <= i && i <= 2 * cl - 1 && Odd(i),
            n * (4 * m + 1 - i) + 2 * j}});
    default:
      break;
  }
  throw InvalidArgument("wheel products have no " +
                        std::string(ToString(c.family)) + " edges");
}

// Sums shared by both parities: center, rim-leaf at i odd or i = 1, and the
// star-leaf vertices w0_j.
std::optional<Value> CommonSum(std::string_view prefix, const VertexId& x,
                               Value m, Value n, FormulaContext& ctx,
                               bool& handled) {
  const Value i = x.i, j = x.j, mn = m * n;
  const std::string cell = ToString(x);
  handled = true;
  if (i == 0 && j == 0) {
    return ctx.Select(std::string(prefix) + " sum center", cell,
                      {{"n odd", Odd(n), 3 * mn * mn},
                       {"n even", Even(n), 3 * mn * mn + n}});
  }
  if (i == 0) {
    return ctx.Select(std::string(prefix) + " sum w0_j", cell,
                      {{"n odd", Odd(n), (3 * mn + 2 * j - n) * m},
                       {"n even", Even(n), (3 * mn + 2 * j - n) * m - 1}});
  }
  handled = false;
  return std::nullopt;
}

std::optional<Value> OddSum(const VertexId& x, Value m, Value n,
                            FormulaContext& ctx) {
  bool handled = false;
  auto common = CommonSum("wheel-odd", x, m, n, ctx, handled);
  if (handled) return common;
  const Value i = x.i, j = x.j;
  const std::string cell = ToString(x);
  if (j >= 1) {
    return ctx.Select(
        "wheel-odd sum wi_j", cell,
        {{"i!=1, i odd", i != 1 && Odd(i), (2 * m + 3 * i - 2) * n + 4 * j - 1},
         {"i!=1, i even", i != 1 && Even(i),
          (5 * m + 3 * i - 2) * n + 4 * j - 1},
         {"i=1, n odd", i == 1 && Odd(n), (2 * m + 3 * i - 2) * n + 4 * j - 1},
         {"i=1, n even", i == 1 && Even(n), (2 * m + 3 * i - 2) * n + 4 * j}});
  }
  const Value n2 = n * n;
  return ctx.Select(
      "wheel-odd sum wi_0", cell,
      {{"i!=2, i odd, i!=m", i != 2 && Odd(i) && i != m,
        (5 * m + 3 * i + 1) * n2 + 2 * n},
       {"i!=2, i even", i != 2 && Even(i), (2 * m + 3 * i - 1) * n2 + 2 * n},
       {"i!=2, i=m", i != 2 && i == m, 5 * i * n2 + 2 * n},
       {"i=2, n odd", i == 2 && Odd(n), (2 * m + 3 * i - 1) * n2 + 2 * n},
       {"i=2, n even", i == 2 && Even(n), (2 * m + 3 * i - 1) * n2 + n}});
}

std::optional<Value> EvenSum(const VertexId& x, Value m, Value n,
                             const SchemeVariant& v, FormulaContext& ctx) {
  bool handled = false;
  auto common = CommonSum("wheel-even", x, m, n, ctx, handled);
  if (handled) return common;
  const Value i = x.i, j = x.j, fl = m / 4, cl = (m + 3) / 4;
  const std::string cell = ToString(x);
  if (j >= 1) {
    const bool w3 = v.Patched(Patch::kWheelEvenRimLeafSum);
    return ctx.Select(
        w3 ? "wheel-even sum wi_j [W3]" : "wheel-even sum wi_j", cell,
        {{"i!=1, i odd", i != 1 && Odd(i), (2 * m + 3 * i - 2) * n + 4 * j - 1},
         {"i!=1, i even", i != 1 && Even(i),
          w3 ? (8 * m - 3 * i + 1) * n + 4 * j - 1
             : (8 * m - 3 * i + 2) * n + 4 * j - 5},
         {"i=1, n odd", i == 1 && Odd(n), (2 * m + 3 * i - 2) * n + 4 * j - 1},
         {"i=1, n even", i == 1 && Even(n), (2 * m + 3 * i - 2) * n + 4 * j}});
  }
  const Value n2 = n * n;
  const bool w4 = v.Patched(Patch::kWheelEvenRimCenterSumWindow);
  const bool window = w4 ? (2 * cl + 1 <= i && i <= m - 1)
                         : (m - 1 <= i && i <= 2 * cl - 1);
  return ctx.Select(
      w4 ? "wheel-even sum wi_0 [W4]" : "wheel-even sum wi_0", cell,
      {{"i=2, n odd", i == 2 && Odd(n), n2 * (2 * m + 5) + 2 * n},
       {"i=2, n even", i == 2 && Even(n), n2 * (2 * m + 5) + n},
       {"4<=i<=2F, i even", i != 2 && 4 <= i && i <= 2 * fl && Even(i),
        n2 * (3 * i + 2 * m - 1) + 2 * n},
       {"i=m", i != 2 && i == m, n2 * (3 * m + 1 + 2 * fl) + 2 * n},
       {"2F+2<=i<=m-2, i even",
        i != 2 && 2 * fl + 2 <= i && i <= m - 2 && Even(i),
        n2 * (3 * i + 2 * m + 1) + 2 * n},
       {w4 ? "2C+1<=i<=m-1, i odd" : "m-1<=i<=2C-1, i odd",
        i != 2 && window && Odd(i), n2 * (8 * m - 3 * i + 2) + 2 * n},
       {"i=1", i != 2 && i == 1, n2 * (7 * m + 1 - 2 * cl) + 2 * n},
       {"3<=i<=2C-1, i odd", i != 2 && 3 <= i && i <= 2 * cl - 1 && Odd(i),
        n2 * (8 * m - 3 * i + 4) + 2 * n}});
}

}  // namespace

std::optional<Value> WheelLabel(const EdgeCell& cell, int m, int n,
                                const SchemeVariant& variant,
                                FormulaContext& ctx) {
  if (Odd(m)) return OddLabel(cell, m, n, variant, ctx);
  return EvenLabel(cell, m, n, variant, ctx);
}

std::optional<Value> WheelSum(const VertexId& v, int m, int n,
                              const SchemeVariant& variant,
                              FormulaContext& ctx) {
  if (Odd(m)) return OddSum(v, m, n, ctx);
  return EvenSum(v, m, n, variant, ctx);
}

SchemeOutcome EvaluateWheelProduct(int m, int n, const SchemeVariant& variant) {
  SchemeOutcome out = EvaluateCells(
      SchemeFamily::kWheel, m, n,
      [&](const EdgeCell& cell, FormulaContext& ctx) {
        return WheelLabel(cell, m, n, variant, ctx);
      });
  out.function = "f";
  return out;
}

EdgeLabeling LabelWheelProduct(int m, int n, const SchemeVariant& variant) {
  return RequireCovered(EvaluateWheelProduct(m, n, variant));
}

ExpectedProfile EvaluateExpectedWheelSums(int m, int n,
                                          const SchemeVariant& variant) {
  CheckSchemeParameters(m, n);
  ExpectedProfile out;
  FormulaContext ctx;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      const VertexId x = VertexId::Product(i, j);
      if (auto s = WheelSum(x, m, n, variant, ctx)) out.sums[x] = *s;
    }
  }
  out.coverage = ctx.issues();
  out.branch_hits = ctx.branch_hits();
  return out;
}

VertexSumProfile ExpectedWheelSums(int m, int n, const SchemeVariant& variant) {
  return RequireCovered(EvaluateExpectedWheelSums(m, n, variant));
}

}  // namespace antimagic
