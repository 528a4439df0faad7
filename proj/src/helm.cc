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

#include "antimagic/helm.h"

#include <functional>
#include <string>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

bool Odd(Value x) { return x % 2 != 0; }
bool Even(Value x) { return x % 2 == 0; }

using Thunk = std::function<std::optional<Value>()>;

// A class-level formula written as an offset of another labeling.
std::optional<Value> Derived(FormulaContext& ctx, std::string_view formula,
                             std::string_view cell, const Thunk& value) {
  return ctx.SelectLazy(formula, cell, {{"all i", true, value}});
}

// ---- single leaf (n = 1) ----------------------------------------------------

std::optional<Value> SingleLabel(const EdgeCell& c, Value m,
                                 FormulaContext& ctx) {
  const Value i = c.i;
  const std::string cell = CellName(c, static_cast<int>(m));
  const Value half_low = m / 2;         // ceil((m-1)/2)
  const Value half_high = (m + 3) / 2;  // floor((m+3)/2)
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.Single("helm-single hub-spoke", 2 * m + 2 * i);
    case EdgeFamily::kRimForward:
      if (i == m) return ctx.Single("helm-single rim-forward wrap", 3 * (2 * m - 1));
      return ctx.Select("helm-single rim-forward", cell,
                        {{"i=1", i == 1, 2 * m + 1},
                         {"2<=i<=m-1", 2 <= i && i <= m - 1, 2 * m + 4 * i - 1}});
    case EdgeFamily::kRimBackward:
      if (i == m) return ctx.Single("helm-single rim-backward wrap", 2 * m + 3);
      return ctx.Select("helm-single rim-backward", cell,
                        {{"1<=i<=m-2", 1 <= i && i <= m - 2, 2 * m + 4 * i + 1},
                         {"i=m-1", i == m - 1, 6 * m - 1}});
    case EdgeFamily::kPendantInner:
      return ctx.Single("helm-single pendant-inner", 2 * i - 1);
    case EdgeFamily::kPendantOuter:
      return ctx.Select(
          "helm-single pendant-outer", cell,
          {{"i=1, m even", i == 1 && Even(m), m + 2},
           {"i=1, m odd", i == 1 && Odd(m), m + 3},
           {"2<=i<=ceil((m-1)/2)", 2 <= i && i <= half_low, 2 * (i - 1)},
           {"i=(m+1)/2, m odd", Odd(m) && 2 * i == m + 1, m + 1},
           {"floor((m+3)/2)<=i<=m-1", half_high <= i && i <= m - 1, 2 * (i + 1)},
           {"i=m, m odd", i == m && Odd(m), m - 1},
           {"i=m, m even", i == m && Even(m), m}});
    case EdgeFamily::kCenterSpoke:
      return ctx.Select(
          "helm-single center-spoke", cell,
          {{"i=1, m even", i == 1 && Even(m), 5 * m + 2},
           {"i=1, m odd", i == 1 && Odd(m), 5 * m + 3},
           {"2<=i<=ceil((m-1)/2)", 2 <= i && i <= half_low, 4 * m + 2 * (i - 1)},
           {"i=(m+1)/2, m odd", Odd(m) && 2 * i == m + 1, 5 * m + 1},
           {"floor((m+3)/2)<=i<=m-1", half_high <= i && i <= m - 1,
            2 * i + 4 * m + 2},
           {"i=m, m odd", i == m && Odd(m), 5 * m - 1},
           {"i=m, m even", i == m && Even(m), 5 * m}});
    default:
      break;
  }
  throw InvalidArgument("helm products have no " +
                        std::string(ToString(c.family)) + " edges");
}

// ---- g' for m odd -----------------------------------------------------------

std::optional<Value> OddPrime(const EdgeCell& c, Value m, Value n,
                              FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = m * n;
  const std::string cell = CellName(c, static_cast<int>(m));
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.Select("helm-odd g' hub-spoke", cell,
                        {{"i odd", Odd(i), 4 * mn + (i - 1) * n + 2 * j},
                         {"i even", Even(i), 5 * mn + (i - 1) * n + 2 * j}});
    case EdgeFamily::kPendantInner:
      return ctx.Select(
          "helm-odd g' pendant-inner", cell,
          {{"i odd", Odd(i), (i - 1) * n + 2 * j - 1},
           {"i even", Even(i), (m - 1) * n + i * n + 2 * j - 1}});
    case EdgeFamily::kPendantOuter:
      return ctx.Select("helm-odd g' pendant-outer", cell,
                        {{"i odd, i!=m", Odd(i) && i != m, n * (m + i) + 2 * j},
                         {"i even", Even(i), (i - 2) * n + 2 * j},
                         {"i=m", i == m, (m - 1) * n + 2 * j}});
    case EdgeFamily::kRimBackward:
      if (i == m) return ctx.Single("helm-odd g' rim-backward wrap", 2 * mn + j);
      return ctx.Select("helm-odd g' rim-backward", cell,
                        {{"i odd", Odd(i), 3 * mn + i * n + j},
                         {"i even", Even(i), 2 * mn + i * n + j}});
    case EdgeFamily::kRimForward:
      if (i == m) return ctx.Single("helm-odd g' rim-forward wrap", 3 * mn + j);
      return ctx.Select("helm-odd g' rim-forward", cell,
                        {{"i even", Even(i), 3 * mn + i * n + j},
                         {"i odd", Odd(i), 2 * mn + i * n + j}});
    case EdgeFamily::kCenterSpoke:
      return ctx.Select(
          "helm-odd g' center-spoke", cell,
          {{"i even", Even(i), 4 * mn + (i - 2) * n + 2 * j - 1},
           {"i=m", i == m, 5 * mn - n + 2 * j - 1},
           {"i odd, i!=m", Odd(i) && i != m, 5 * mn + i * n + 2 * j - 1}});
    default:
      break;
  }
  throw InvalidArgument("helm products have no " +
                        std::string(ToString(c.family)) + " edges");
}

// ---- g' for m even ----------------------------------------------------------

std::optional<Value> EvenPrime(const EdgeCell& c, Value m, Value n,
                               const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = m * n, fl = m / 4, cl = (m + 3) / 4;
  const std::string cell = CellName(c, static_cast<int>(m));
  const bool h1 = v.Patched(Patch::kHelmEvenFourPrecedence);
  const bool odd_window = 2 * cl + 1 <= i && i <= m - 1 && Odd(i) &&
                          !(h1 && m == 4);
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.Select("helm-even g' hub-spoke", cell,
                        {{"i odd", Odd(i), 4 * mn + (i - 1) * n + 2 * j},
                         {"i even", Even(i), 5 * mn + (m - i) * n + 2 * j}});
    case EdgeFamily::kPendantInner:
      return ctx.Select("helm-even g' pendant-inner", cell,
                        {{"i odd", Odd(i), 2 * j + n * (i - 1)},
                         {"i even", Even(i), 2 * j + n * (2 * m - i)}});
    case EdgeFamily::kPendantOuter: {
      const bool h2 = v.Patched(Patch::kHelmEvenPendantOddWindow);
      return ctx.Select(
          h1 || h2 ? "helm-even g' pendant-outer [H1,H2]"
                   : "helm-even g' pendant-outer",
          cell,
          {{"2<=i<=2F, i even", 2 <= i && i <= 2 * fl && Even(i),
            2 * j - 1 + n * (i - 2)},
           {"i=m", i == m, 2 * n * fl + 2 * j - 1},
           {"2F+2<=i<=m-2, i even", 2 * fl + 2 <= i && i <= m - 2 && Even(i),
            n * i + 2 * j - 1},
           {"2C+1<=i<=m-1, i odd", odd_window, n * (2 * m - 1 - i) + 2 * j - 1},
           {"i=1, m!=4", i == 1 && m != 4, 2 * mn - 2 * n * cl + 2 * j - 1},
           {"3<=i<=2C-1, i odd, m!=4", 3 <= i && i <= 2 * cl - 1 && Odd(i) && m != 4,
            h2 ? n * (2 * m + 1 - i) + 2 * j - 1
               : 3 * mn - 4 * n * cl + (3 - i) * n + 2 * j - 1},
           {"i=1, m=4", i == 1 && m == 4, 4 * n + 2 * j - 1},
           {"i=3, m=4", i == 3 && m == 4, 6 * n + 2 * j - 1}});
    }
    case EdgeFamily::kRimBackward:
      if (i == m) {
        return ctx.Single(v.Patched(Patch::kHelmEvenWrapIndex)
                              ? "helm-even g' wrap (w1_j, wm_0) [H4]"
                              : "helm-even g' (wi_j, wm_0), i unbound",
                          2 * mn + j);
      }
      return ctx.Select("helm-even g' rim-backward", cell,
                        {{"i odd", Odd(i), (4 * m - i) * n + j},
                         {"i even", Even(i), (2 * m + i) * n + j}});
    case EdgeFamily::kRimForward:
      if (i == m) return ctx.Single("helm-even g' rim-forward wrap", 3 * mn + j);
      // Read literally, the unbound-index formula also claims (w(m-1)_j, wm_0).
      return ctx.Select(
          "helm-even g' rim-forward", cell,
          {{"i odd", Odd(i), (2 * m + i) * n + j},
           {"i even", Even(i), (4 * m - i) * n + j},
           {"(wi_j, wm_0), i unbound",
            !v.Patched(Patch::kHelmEvenWrapIndex) && i == m - 1, 2 * mn + j}});
    case EdgeFamily::kCenterSpoke:
      return ctx.Select(
          h1 ? "helm-even g' center-spoke [H1]" : "helm-even g' center-spoke",
          cell,
          {{"2<=i<=2F, i even", 2 <= i && i <= 2 * fl && Even(i),
            4 * mn + (i - 2) * n + 2 * j - 1},
           {"i=m", i == m, 4 * mn + 2 * fl * n + 2 * j - 1},
           {"2F+2<=i<=m-2, i even", 2 * fl + 2 <= i && i <= m - 2 && Even(i),
            4 * mn + n * i + 2 * j - 1},
           {"2C+1<=i<=m-1, i odd", odd_window, 6 * mn - n * (i + 1) + 2 * j - 1},
           {"i=1, m!=4", i == 1 && m != 4, 6 * mn - 2 * cl * n + 2 * j - 1},
           {"i=1, m=4", i == 1 && m == 4, 4 * mn + 4 * n + 2 * j - 1},
           {"3<=i<=2C-1, i odd, m!=4", 3 <= i && i <= 2 * cl - 1 && Odd(i) && m != 4,
            6 * mn + n - 1 + 2 * j - n * i},
           {"i=3, m=4", i == 3 && m == 4, 4 * mn + 6 * n + 2 * j - 1}});
    default:
      break;
  }
  throw InvalidArgument("helm products have no " +
                        std::string(ToString(c.family)) + " edges");
}

// ---- g'' and g''' -----------------------------------------------------------

std::optional<Value> OddClassLabel(const EdgeCell& c, Value m, Value n,
                                   CaseClass cls, const SchemeVariant& v,
                                   FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = m * n;
  const std::string cell = CellName(c, static_cast<int>(m));
  const Thunk g = [&] {
    return HelmPrimeLabel(c, static_cast<int>(m), static_cast<int>(n), v, ctx);
  };
  if (cls == CaseClass::kGPrime) return g();
  if (cls == CaseClass::kGDoublePrime) {
    switch (c.family) {
      case EdgeFamily::kPendantInner:
        return Derived(ctx, "helm-odd g'' pendant-inner = 4mn+g'", cell,
                       [&] { return Shift(g(), 4 * mn); });
      case EdgeFamily::kCenterSpoke:
        return Derived(ctx, "helm-odd g'' center-spoke = g'-4mn", cell,
                       [&] { return Shift(g(), -4 * mn); });
      default:
        return g();
    }
  }
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.SelectLazy("helm-odd g''' hub-spoke", cell,
                            {{"i=1", i == 1, [&] { return std::optional<Value>(4 * mn + 2 * j); }},
                             {"i!=1", i != 1, [&] { return Shift(g(), -1); }}});
    case EdgeFamily::kPendantInner:
      if (n == 2) {
        return ctx.SelectLazy(
            "helm-odd g''' pendant-inner n=2", cell,
            {{"i=1, m>=3", i == 1 && m >= 3, [&] { return std::optional<Value>(2 * j); }},
             {"i!=1, m>=3", i != 1 && m >= 3, [&] { return Shift(g(), 1); }}});
      }
      return ctx.SelectLazy(
          "helm-odd g''' pendant-inner n>=3", cell,
          {{"i=1, m=3", i == 1 && m == 3,
            [&] { return std::optional<Value>(4 * mn + 2 * j - 1); }},
           {"i=1, m>=5", i == 1 && m >= 5,
            [&] { return std::optional<Value>(2 * j - 1); }},
           {"i!=1, m=3", i != 1 && m == 3, [&] { return Shift(g(), 4 * mn + 1); }},
           {"i!=1, m>=5", i != 1 && m >= 5, [&] { return Shift(g(), 1); }}});
    case EdgeFamily::kPendantOuter: {
      const Value at_two = n == 2 ? 2 * j - 1 : 2 * j;
      return ctx.SelectLazy(
          n == 2 ? "helm-odd g''' pendant-outer n=2"
                 : "helm-odd g''' pendant-outer n>=3",
          cell,
          {{"i=2", i == 2, [&] { return std::optional<Value>(at_two); }},
           {"i!=2", i != 2, [&] { return Shift(g(), -1); }}});
    }
    case EdgeFamily::kCenterSpoke: {
      if (n == 2 && v.Patched(Patch::kHelmOddTripleCenterTwo)) {
        return ctx.SelectLazy(
            "helm-odd g''' center-spoke n=2 [H3]", cell,
            {{"i=2", i == 2, [&] { return std::optional<Value>(4 * mn + 2 * j - 1); }},
             {"i!=2", i != 2, [&] { return Shift(g(), 1); }}});
      }
      return ctx.SelectLazy(
          "helm-odd g''' center-spoke", cell,
          {{"i=2, m=3", i == 2 && m == 3,
            [&] { return std::optional<Value>(2 * j - 1); }},
           {"i=2, m>=5", i == 2 && m >= 5,
            [&] { return std::optional<Value>(4 * mn + 2 * j - 1); }},
           {"i!=2, m=3", i != 2 && m == 3, [&] { return Shift(g(), 1 - 4 * mn); }},
           {"i!=2, m>=5", i != 2 && m >= 5, [&] { return Shift(g(), 1); }}});
    }
    default:
      return g();
  }
}

std::optional<Value> EvenClassLabel(const EdgeCell& c, Value m, Value n,
                                    CaseClass cls, const SchemeVariant& v,
                                    FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = m * n;
  const std::string cell = CellName(c, static_cast<int>(m));
  const Thunk g = [&] {
    return HelmPrimeLabel(c, static_cast<int>(m), static_cast<int>(n), v, ctx);
  };
  if (cls == CaseClass::kGPrime) return g();
  if (cls == CaseClass::kGDoublePrime) {
    switch (c.family) {
      case EdgeFamily::kPendantInner:
        return Derived(ctx, "helm-even g'' pendant-inner = 4mn-1+g'", cell,
                       [&] { return Shift(g(), 4 * mn - 1); });
      case EdgeFamily::kPendantOuter:
        return ctx.SelectLazy(
            "helm-even g'' pendant-outer", cell,
            {{"i=2", i == 2, [&] { return std::optional<Value>(2 * j - 1); }},
             {"i!=2", i != 2, [&] { return Shift(g(), 1); }}});
      case EdgeFamily::kCenterSpoke:
        return ctx.SelectLazy(
            "helm-even g'' center-spoke", cell,
            {{"i=2", i == 2, [&] { return std::optional<Value>(2 * j); }},
             {"i!=2", i != 2, [&] { return Shift(g(), -4 * mn); }}});
      default:
        return g();
    }
  }
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.SelectLazy("helm-even g''' hub-spoke", cell,
                            {{"i=1", i == 1, [&] { return std::optional<Value>(4 * mn + 2 * j); }},
                             {"i!=1", i != 1, [&] { return Shift(g(), -1); }}});
    case EdgeFamily::kPendantInner:
      return ctx.SelectLazy(
          "helm-even g''' pendant-inner", cell,
          {{"i=1, n!=2", i == 1 && n != 2, [&] { return std::optional<Value>(2 * j - 1); }},
           {"i=1, n=2", i == 1 && n == 2, [&] { return std::optional<Value>(2 * j); }},
           {"i!=1", i != 1, g}});
    case EdgeFamily::kPendantOuter:
      return ctx.SelectLazy(
          "helm-even g''' pendant-outer", cell,
          {{"i=2, n!=2", i == 2 && n != 2, [&] { return std::optional<Value>(2 * j); }},
           {"i=2, n=2", i == 2 && n == 2, [&] { return std::optional<Value>(2 * j - 1); }},
           {"i!=2", i != 2, g}});
    case EdgeFamily::kCenterSpoke:
      return ctx.SelectLazy(
          "helm-even g''' center-spoke", cell,
          {{"i=2", i == 2, [&] { return std::optional<Value>(4 * mn + 2 * j - 1); }},
           {"i!=2", i != 2, [&] { return Shift(g(), 1); }}});
    default:
      return g();
  }
}

// ---- expected sums ----------------------------------------------------------

std::optional<Value> SingleSum(const VertexId& x, Value m,
                               FormulaContext& ctx) {
  const Value i = x.i, j = x.j;
  const std::string cell = ToString(x);
  const int mi = static_cast<int>(m);
  if (i == 0 && j == 0) return ctx.Single("helm-single sum center", 3 * m * m + m);
  if (i == 0) return ctx.Single("helm-single sum w0_1", 5 * m * m + m);
  if (i > m) {
    // A pendant vertex carries the label of its only edge.
    const EdgeCell edge{j == 0 ? EdgeFamily::kPendantInner
                               : EdgeFamily::kPendantOuter,
                        static_cast<int>(i - m), 1};
    ctx.Reference("f1 " + CellName(edge, mi));
    return SingleLabel(edge, m, ctx);
  }
  if (j == 1) return ctx.Single("helm-single sum wi_1", 6 * m + 12 * i - 5);
  return ctx.Select(
      "helm-single sum wi_0", cell,
      {{"i=1, m odd", i == 1 && Odd(m), 14 * m + 8},
       {"i=1, m even", i == 1 && Even(m), 14 * m + 6},
       {"i=2", i == 2, 8 * m + 14},
       {"3<=i<=ceil((m-1)/2)", 3 <= i && i <= m / 2, 8 * m + 12 * i - 8},
       {"i=(m+1)/2, m odd", Odd(m) && 2 * i == m + 1, 9 * m + 8 * i - 3},
       {"floor((m+3)/2)<=i<=m-2", (m + 3) / 2 <= i && i <= m - 2, 8 * m + 12 * i},
       {"i=m-1", i == m - 1, 10 * (2 * m - 1)},
       {"i=m, m odd", i == m && Odd(m), 14 * m - 4},
       {"i=m, m even", i == m && Even(m), 14 * m - 2}});
}

std::optional<Value> OddPrimeSum(const VertexId& x, Value m, Value n,
                                 const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mn = m * n, n2 = n * n;
  const std::string cell = ToString(x);
  if (i == 0 && j == 0) return ctx.Single("helm-odd g' sum center", 5 * mn * mn + mn);
  if (i == 0) {
    return ctx.Single("helm-odd g' sum w0_j", 5 * m * m * n - mn + (2 * j - 1) * m);
  }
  if (i > m && j >= 1) {
    const EdgeCell edge{EdgeFamily::kPendantOuter, static_cast<int>(i - m),
                        static_cast<int>(j)};
    return HelmPrimeLabel(edge, static_cast<int>(m), static_cast<int>(n), v, ctx);
  }
  if (i > m) {
    const Value k = i - m;
    return ctx.Select("helm-odd g' sum w(m+i)_0", cell,
                      {{"i odd", Odd(k), k * n2}, {"i even", Even(k), (m + k) * n2}});
  }
  if (j >= 1) {
    return ctx.Select(
        "helm-odd g' sum wi_j", cell,
        {{"i odd", Odd(i), 8 * mn + 6 * j + 4 * i * n - 3 * n - 1},
         {"i even", Even(i), 12 * mn + 4 * i * n - 3 * n + 6 * j - 1}});
  }
  return ctx.Select(
      "helm-odd g' sum wi_0", cell,
      {{"i odd, i!=m", Odd(i) && i != m, 12 * m * n2 + 4 * i * n2 + 2 * n2 + 2 * n},
       {"i even", Even(i), 8 * m * n2 + 4 * i * n2 - 2 * n2 + 2 * n},
       {"i=m", i == m, 12 * m * n2 + 2 * n}});
}

std::optional<Value> EvenPrimeSum(const VertexId& x, Value m, Value n,
                                  const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mn = m * n, n2 = n * n, fl = m / 4,
              cl = (m + 3) / 4;
  const std::string cell = ToString(x);
  if (i == 0 && j == 0) return ctx.Single("helm-even g' sum center", 5 * mn * mn + mn);
  if (i == 0) {
    return ctx.Single("helm-even g' sum w0_j", 5 * m * m * n - mn + (2 * j - 1) * m);
  }
  if (i > m && j >= 1) {
    const EdgeCell edge{EdgeFamily::kPendantOuter, static_cast<int>(i - m),
                        static_cast<int>(j)};
    return HelmPrimeLabel(edge, static_cast<int>(m), static_cast<int>(n), v, ctx);
  }
  if (i > m) {
    const Value k = i - m;
    return ctx.Select("helm-even g' sum w(m+i)_0", cell,
                      {{"i odd", Odd(k), (k - 1) * n2 + n * (n + 1)},
                       {"i even", Even(k), m * n2 + (m - k) * n2 + n * (n + 1)}});
  }
  if (j >= 1) {
    return ctx.Select("helm-even g' sum wi_j", cell,
                      {{"i odd", Odd(i), 8 * mn + 4 * i * n - 3 * n + 6 * j},
                       {"i even", Even(i), 16 * mn - 4 * i * n + 6 * j + n}});
  }
  const bool h1 = v.Patched(Patch::kHelmEvenFourPrecedence);
  return ctx.Select(
      h1 ? "helm-even g' sum wi_0 [H1]" : "helm-even g' sum wi_0", cell,
      {{"i=1, m=4", i == 1 && m == 4, 13 * m * n2 + 2 * n2 + n},
       {"i=1, m!=4", i == 1 && m != 4, 15 * m * n2 - 2 * n2 + n - 2 * n2 * cl},
       {"i=3, m=4", i == 3 && m == 4, 13 * m * n2 + 6 * n2 + n},
       {"2<=i<=2F, i even", 2 <= i && i <= 2 * fl && Even(i),
        8 * m * n2 + 4 * i * n2 - 2 * n2 + n},
       {"2F+2<=i<=m-2, i even", 2 * fl + 2 <= i && i <= m - 2 && Even(i),
        8 * m * n2 + 4 * i * n2 + 2 * n2 + n},
       {"2C+1<=i<=m-1, i odd",
        2 * cl + 1 <= i && i <= m - 1 && Odd(i) && !(h1 && m == 4),
        16 * m * n2 - 4 * i * n2 + 2 * n2 + n},
       {"i=m", i == m, 9 * m * n2 + 2 * n2 + 4 * n2 * fl + n},
       {"3<=i<=2C-1, i odd, m!=4", 3 <= i && i <= 2 * cl - 1 && Odd(i) && m != 4,
        16 * m * n2 + 4 * n2 - 6 * n2 * i + 4 * n2 * cl + n}});
}

std::optional<Value> OddClassSum(const VertexId& x, Value m, Value n,
                                 CaseClass cls, const SchemeVariant& v,
                                 FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mn = m * n, n2 = n * n;
  const int mi = static_cast<int>(m), ni = static_cast<int>(n);
  const std::string cell = ToString(x);
  const Thunk g = [&] { return HelmPrimeSum(x, mi, ni, v, ctx); };
  if (i > m && j >= 1) {
    const EdgeCell at{EdgeFamily::kPendantOuter, static_cast<int>(i - m),
                      static_cast<int>(j)};
    return HelmLabel(at, mi, ni, cls, v, ctx);
  }
  if (cls == CaseClass::kGPrime) return g();
  if (i == 0 && j == 0) {
    if (cls == CaseClass::kGTriplePrime) {
      return ctx.Single("helm-odd g''' sum center", 5 * mn * mn + n);
    }
    return ctx.Single("helm-odd g'' sum center", 5 * mn * mn + mn);
  }
  if (cls == CaseClass::kGDoublePrime) {
    if (i == 0) {
      return Derived(ctx, "helm-odd g'' sum w0_j = g'-4m^2n", cell,
                     [&] { return Shift(g(), -4 * m * m * n); });
    }
    if (i > m) {
      return Derived(ctx, "helm-odd g'' sum w(m+i)_0 = 4mn^2+g'", cell,
                     [&] { return Shift(g(), 4 * m * n2); });
    }
    if (j >= 1) {
      return Derived(ctx, "helm-odd g'' sum wi_j = g'+4mn", cell,
                     [&] { return Shift(g(), 4 * mn); });
    }
    return Derived(ctx, "helm-odd g'' sum wi_0 = g'-4mn^2", cell,
                   [&] { return Shift(g(), -4 * m * n2); });
  }
  // g'''
  if (i == 0) {
    if (n == 2 && v.Patched(Patch::kHelmOddTripleCenterTwo)) {
      return Derived(ctx, "helm-odd g''' sum w0_j n=2 [H3] = g'+m-1", cell,
                     [&] { return Shift(g(), m - 1); });
    }
    return ctx.SelectLazy(
        "helm-odd g''' sum w0_j", cell,
        {{"m=3", m == 3, [&] { return Shift(g(), -4 * m * n2 + m - 1); }},
         {"m>=5", m >= 5, [&] { return Shift(g(), m - 1); }}});
  }
  if (i > m) {
    const Value k = i - m;
    if (n == 2) {
      return ctx.SelectLazy(
          "helm-odd g''' sum w(m+i)_0 n=2", cell,
          {{"i=1", k == 1, [&] { return std::optional<Value>(n * (n + 1)); }},
           {"i!=1", k != 1, g}});
    }
    return ctx.SelectLazy(
        "helm-odd g''' sum w(m+i)_0 n>=3", cell,
        {{"i=1, m>=5", k == 1 && m >= 5, [&] { return std::optional<Value>(n2); }},
         {"i!=1, m>=5", k != 1 && m >= 5, g},
         {"i=1, m=3", k == 1 && m == 3,
          [&] { return std::optional<Value>(4 * m * n2 + n2); }},
         {"i!=1, m=3", k != 1 && m == 3, [&] { return Shift(g(), 4 * m * n2 + n); }}});
  }
  if (j >= 1) {
    if (n == 2) {
      return ctx.SelectLazy("helm-odd g''' sum wi_j n=2", cell,
                            {{"i=1", i == 1, [&] { return Shift(g(), 1); }},
                             {"i!=1", i != 1, g}});
    }
    return ctx.SelectLazy(
        "helm-odd g''' sum wi_j n>=3", cell,
        {{"m=3", m == 3, [&] { return Shift(g(), 4 * mn); }},
         {"i=1, m>=5", i == 1 && m >= 5,
          [&] { return std::optional<Value>(8 * mn + 6 * j + n - 1); }},
         {"i!=1, m>=5", i != 1 && m >= 5, g}});
  }
  if (n == 2) {
    return ctx.SelectLazy("helm-odd g''' sum wi_0 n=2", cell,
                          {{"i=2", i == 2, [&] { return Shift(g(), -n); }},
                           {"i!=2", i != 2, g}});
  }
  return ctx.SelectLazy(
      "helm-odd g''' sum wi_0 n>=3", cell,
      {{"m=3", m == 3, g},
       {"i=2, m>=5", i == 2 && m >= 5,
        [&] { return std::optional<Value>(8 * m * n2 + 6 * n2 + 3 * n); }},
       {"i!=2, m>=5", i != 2 && m >= 5, g}});
}

std::optional<Value> EvenClassSum(const VertexId& x, Value m, Value n,
                                  CaseClass cls, const SchemeVariant& v,
                                  FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mn = m * n, n2 = n * n;
  const int mi = static_cast<int>(m), ni = static_cast<int>(n);
  const std::string cell = ToString(x);
  const Thunk g = [&] { return HelmPrimeSum(x, mi, ni, v, ctx); };
  if (i > m && j >= 1) {
    const EdgeCell at{EdgeFamily::kPendantOuter, static_cast<int>(i - m),
                      static_cast<int>(j)};
    return HelmLabel(at, mi, ni, cls, v, ctx);
  }
  if (cls == CaseClass::kGPrime) return g();
  if (i == 0 && j == 0) {
    if (cls == CaseClass::kGTriplePrime) {
      return ctx.Single("helm-even g''' sum center", 5 * mn * mn + n);
    }
    return ctx.Single("helm-even g'' sum center", 5 * mn * mn + mn);
  }
  if (cls == CaseClass::kGDoublePrime) {
    if (i == 0) {
      return Derived(ctx, "helm-even g'' sum w0_j = g'-4m^2n+1", cell,
                     [&] { return Shift(g(), -4 * m * m * n + 1); });
    }
    if (i > m) {
      return Derived(ctx, "helm-even g'' sum w(m+i)_0 = 4mn^2-n+g'", cell,
                     [&] { return Shift(g(), 4 * m * n2 - n); });
    }
    if (j >= 1) {
      return Derived(ctx, "helm-even g'' sum wi_j = g'+4mn-1", cell,
                     [&] { return Shift(g(), 4 * mn - 1); });
    }
    return ctx.SelectLazy(
        "helm-even g'' sum wi_0", cell,
        {{"i=2", i == 2,
          [&] { return std::optional<Value>(4 * m * n2 + 2 * i * n2 + 2 * n2 + 2 * n); }},
         {"i!=2", i != 2, [&] { return Shift(g(), -4 * m * n2 + n); }}});
  }
  // g'''
  if (i == 0) {
    return Derived(ctx, "helm-even g''' sum w0_j = g'+m-1", cell,
                   [&] { return Shift(g(), m - 1); });
  }
  if (i > m) {
    const Value k = i - m;
    return ctx.SelectLazy(
        "helm-even g''' sum w(m+i)_0", cell,
        {{"i=1, n!=2", k == 1 && n != 2, [&] { return std::optional<Value>(n2); }},
         {"i=1, n=2", k == 1 && n == 2, [&] { return std::optional<Value>(n * (n + 1)); }},
         {"i!=1", k != 1, g}});
  }
  if (j >= 1) {
    if (n == 2) {
      return ctx.SelectLazy("helm-even g''' sum wi_j n=2", cell,
                            {{"i=1", i == 1, g},
                             {"i!=1", i != 1, [&] { return Shift(g(), -1); }}});
    }
    return Derived(ctx, "helm-even g''' sum wi_j n!=2 = g'-1", cell,
                   [&] { return Shift(g(), -1); });
  }
  if (n == 2) {
    return ctx.SelectLazy("helm-even g''' sum wi_0 n=2", cell,
                          {{"i=2", i == 2, g},
                           {"i!=2", i != 2, [&] { return Shift(g(), n); }}});
  }
  return Derived(ctx, "helm-even g''' sum wi_0 n!=2 = g'+n", cell,
                 [&] { return Shift(g(), n); });
}

}  // namespace

CaseClass HelmCaseClass(int m, int n) {
  CheckSchemeParameters(m, n);
  if (n == 1) {
    throw InvalidArgument("n = 1 uses the single-leaf labeling, not a case class");
  }
  if (n % 2 == 0) return CaseClass::kGTriplePrime;
  return m >= n ? CaseClass::kGPrime : CaseClass::kGDoublePrime;
}

std::string HelmFunctionName(int m, int n) {
  if (n == 1) return "f1";
  switch (HelmCaseClass(m, n)) {
    case CaseClass::kGPrime: return "g'";
    case CaseClass::kGDoublePrime: return "g''";
    case CaseClass::kGTriplePrime: return "g'''";
  }
  return "g'";
}

std::optional<Value> HelmSingleLabel(const EdgeCell& cell, int m,
                                     const SchemeVariant& variant,
                                     FormulaContext& ctx) {
  (void)variant;
  return SingleLabel(cell, m, ctx);
}

std::optional<Value> HelmSingleSum(const VertexId& v, int m,
                                   const SchemeVariant& variant,
                                   FormulaContext& ctx) {
  (void)variant;
  return SingleSum(v, m, ctx);
}

std::optional<Value> HelmPrimeLabel(const EdgeCell& cell, int m, int n,
                                    const SchemeVariant& variant,
                                    FormulaContext& ctx) {
  if (Odd(m)) return OddPrime(cell, m, n, ctx);
  return EvenPrime(cell, m, n, variant, ctx);
}

std::optional<Value> HelmPrimeSum(const VertexId& v, int m, int n,
                                  const SchemeVariant& variant,
                                  FormulaContext& ctx) {
  if (Odd(m)) return OddPrimeSum(v, m, n, variant, ctx);
  return EvenPrimeSum(v, m, n, variant, ctx);
}

std::optional<Value> HelmLabel(const EdgeCell& cell, int m, int n,
                               CaseClass cls, const SchemeVariant& variant,
                               FormulaContext& ctx) {
  if (Odd(m)) return OddClassLabel(cell, m, n, cls, variant, ctx);
  return EvenClassLabel(cell, m, n, cls, variant, ctx);
}

std::optional<Value> HelmSum(const VertexId& v, int m, int n, CaseClass cls,
                             const SchemeVariant& variant, FormulaContext& ctx) {
  if (Odd(m)) return OddClassSum(v, m, n, cls, variant, ctx);
  return EvenClassSum(v, m, n, cls, variant, ctx);
}

SchemeOutcome EvaluateHelmSingle(int m, const SchemeVariant& variant) {
  SchemeOutcome out = EvaluateCells(
      SchemeFamily::kHelm, m, 1, [&](const EdgeCell& cell, FormulaContext& ctx) {
        return HelmSingleLabel(cell, m, variant, ctx);
      });
  out.function = "f1";
  return out;
}

EdgeLabeling LabelHelmSingle(int m, const SchemeVariant& variant) {
  return RequireCovered(EvaluateHelmSingle(m, variant));
}

SchemeOutcome EvaluateHelmProduct(int m, int n, const SchemeVariant& variant) {
  CheckSchemeParameters(m, n);
  if (n == 1) return EvaluateHelmSingle(m, variant);
  const CaseClass cls = HelmCaseClass(m, n);
  SchemeOutcome out = EvaluateCells(
      SchemeFamily::kHelm, m, n, [&](const EdgeCell& cell, FormulaContext& ctx) {
        return HelmLabel(cell, m, n, cls, variant, ctx);
      });
  out.function = HelmFunctionName(m, n);
  out.case_class = cls;
  return out;
}

EdgeLabeling LabelHelmProduct(int m, int n, const SchemeVariant& variant) {
  return RequireCovered(EvaluateHelmProduct(m, n, variant));
}

ExpectedProfile EvaluateExpectedHelmSums(int m, int n,
                                         const SchemeVariant& variant) {
  CheckSchemeParameters(m, n);
  ExpectedProfile out;
  FormulaContext ctx;
  std::optional<CaseClass> cls;
  if (n > 1) cls = HelmCaseClass(m, n);
  for (int i = 0; i <= 2 * m; ++i) {
    for (int j = 0; j <= n; ++j) {
      const VertexId x = VertexId::Product(i, j);
      std::optional<Value> s = cls ? HelmSum(x, m, n, *cls, variant, ctx)
                                   : HelmSingleSum(x, m, variant, ctx);
      if (s) out.sums[x] = *s;
    }
  }
  out.coverage = ctx.issues();
  out.branch_hits = ctx.branch_hits();
  return out;
}

VertexSumProfile ExpectedHelmSums(int m, int n, const SchemeVariant& variant) {
  return RequireCovered(EvaluateExpectedHelmSums(m, n, variant));
}

}  // namespace antimagic
