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

#include "antimagic/flower.h"

#include <functional>
#include <string>

#include "antimagic/errors.h"
#include "antimagic/helm.h"

namespace antimagic {
namespace {

bool Odd(Value x) { return x % 2 != 0; }
bool Even(Value x) { return x % 2 == 0; }

using Thunk = std::function<std::optional<Value>()>;

std::optional<Value> Derived(FormulaContext& ctx, std::string_view formula,
                             std::string_view cell, const Thunk& value) {
  return ctx.SelectLazy(formula, cell, {{"all i", true, value}});
}

std::optional<Value> Const(Value v) { return v; }

// The helm labelings the flower schemes are declared over.
std::optional<Value> F1(const EdgeCell& e, int m, const SchemeVariant& v,
                        FormulaContext& ctx) {
  ctx.Reference("f1 " + CellName(e, m));
  return HelmSingleLabel(e, m, v, ctx);
}

std::optional<Value> GPrime(const EdgeCell& e, int m, int n,
                            const SchemeVariant& v, FormulaContext& ctx) {
  ctx.Reference("g' " + CellName(e, m));
  return HelmPrimeLabel(e, m, n, v, ctx);
}

std::optional<Value> GPrimeSum(const VertexId& x, int m, int n,
                               const SchemeVariant& v, FormulaContext& ctx) {
  ctx.Reference("g' sum " + ToString(x));
  return HelmPrimeSum(x, m, n, v, ctx);
}

// ---- single leaf (n = 1) ----------------------------------------------------

std::optional<Value> SingleLabel(const EdgeCell& c, int m,
                                 const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = c.i, mm = m;
  const std::string cell = CellName(c, m);
  const bool f4 = v.Patched(Patch::kFlowerSingleRimReference);
  const auto f1 = [&](EdgeFamily family) {
    return F1(EdgeCell{family, c.i, 1}, m, v, ctx);
  };
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return Derived(ctx, "flower-single hub-spoke = 2m+f1", cell,
                     [&] { return Shift(f1(EdgeFamily::kHubSpoke), 2 * mm); });
    case EdgeFamily::kOuterHubSpoke:
      return Derived(ctx, "flower-single outer-hub = 2m+f1(pendant-outer)-1", cell, [&] {
        return Shift(f1(EdgeFamily::kPendantOuter), 2 * mm - 1);
      });
    case EdgeFamily::kRimForward:
      if (i == mm) return ctx.Single("flower-single rim-forward wrap", 8 * mm - 3);
      if (f4) {
        return Derived(ctx, "flower-single rim-forward = 2m+f1(rim-forward) [F4]", cell,
                       [&] { return Shift(f1(EdgeFamily::kRimForward), 2 * mm); });
      }
      return ctx.Fail(CoverageIssue::Kind::kUndefinedReference,
                      "flower-single rim-forward = 2m+f1(wi_1, w(i+1)_1)", cell,
                      "f1 labels no edge (wi_1, w(i+1)_1)");
    case EdgeFamily::kRimBackward:
      if (i == mm) {
        if (f4) {
          return Derived(ctx, "flower-single rim-backward wrap = 2m+f1(wrap) [F4]", cell,
                         [&] { return Shift(f1(EdgeFamily::kRimBackward), 2 * mm); });
        }
        return ctx.Fail(CoverageIssue::Kind::kUnboundIndex,
                        "flower-single (w1_1, wm_0) = 2m+f1(wi_1, w(i+1)_0)", cell,
                        "index i is not bound on the wrap edge");
      }
      if (f4) {
        return Derived(ctx, "flower-single rim-backward = 2m+f1(rim-backward) [F4]", cell,
                       [&] { return Shift(f1(EdgeFamily::kRimBackward), 2 * mm); });
      }
      return ctx.Fail(CoverageIssue::Kind::kUndefinedReference,
                      "flower-single rim-backward = 2m+f1(wi_1, w(i+1)_1)", cell,
                      "f1 labels no edge (wi_1, w(i+1)_1)");
    case EdgeFamily::kPendantInner:
      return ctx.Single("flower-single pendant-inner", 2 * i);
    case EdgeFamily::kPendantOuter:
      return Derived(ctx, "flower-single pendant-outer = f1-1", cell,
                     [&] { return Shift(f1(EdgeFamily::kPendantOuter), -1); });
    case EdgeFamily::kOuterCenterSpoke:
      return ctx.Single("flower-single outer-center", 2 * mm + 2 * i);
    case EdgeFamily::kCenterSpoke:
      return Derived(ctx, "flower-single center-spoke = 2m+f1", cell,
                     [&] { return Shift(f1(EdgeFamily::kCenterSpoke), 2 * mm); });
  }
  throw InvalidArgument("unknown edge family");
}

// ---- h' ---------------------------------------------------------------------

std::optional<Value> OddPrime(const EdgeCell& c, int m, int n,
                              const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mm = m, nn = n, mn = mm * nn;
  const std::string cell = CellName(c, m);
  switch (c.family) {
    case EdgeFamily::kOuterHubSpoke: {
      const bool f1 = v.Patched(Patch::kFlowerOddOuterHubLast);
      return ctx.Select(
          f1 ? "flower-odd h' outer-hub [F1]" : "flower-odd h' outer-hub", cell,
          {{"i even", Even(i), (i - 2) * nn + 2 * j - 1},
           {"i=m", i == mm, nn * (mm - 1) + 2 * j - 1},
           {"i odd", Odd(i) && !(f1 && i == mm),
            nn * (mm - 1) + 2 * nn + (2 * j - 1) + (i - 1) * nn}});
    }
    case EdgeFamily::kOuterCenterSpoke:
      return ctx.Select("flower-odd h' outer-center", cell,
                        {{"i odd", Odd(i), (i - 1) * nn + 2 * j},
                         {"i even", Even(i), mn + nn + (i - 2) * nn + 2 * j}});
    case EdgeFamily::kRimBackward:
      if (i == mm) return ctx.Single("flower-odd h' rim-backward wrap", 4 * mn + j);
      break;
    case EdgeFamily::kRimForward:
      if (i == mm) return ctx.Single("flower-odd h' rim-forward wrap", 5 * mn + j);
      break;
    default:
      break;
  }
  return Derived(ctx, "flower-odd h' = 2mn+g'", cell,
                 [&] { return Shift(GPrime(c, m, n, v, ctx), 2 * mn); });
}

std::optional<Value> EvenPrime(const EdgeCell& c, int m, int n,
                               const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mm = m, nn = n, mn = mm * nn;
  const std::string cell = CellName(c, m);
  switch (c.family) {
    case EdgeFamily::kOuterHubSpoke:
      // Printed as the same piecewise table as g' on the pendant-outer edge.
      return Derived(ctx, "flower-even h' outer-hub = g'(pendant-outer)", cell, [&] {
        return GPrime(EdgeCell{EdgeFamily::kPendantOuter, c.i, c.j}, m, n, v, ctx);
      });
    case EdgeFamily::kOuterCenterSpoke:
      return ctx.Select("flower-even h' outer-center", cell,
                        {{"i odd", Odd(i), 2 * j + (i - 1) * nn},
                         {"i even", Even(i), mn + 2 * j + (mm - i) * nn}});
    case EdgeFamily::kRimBackward:
      if (i == mm) return ctx.Single("flower-even h' rim-backward wrap", 4 * mn + j);
      return ctx.Select("flower-even h' rim-backward", cell,
                        {{"i odd", Odd(i), 2 * mn + (4 * mm - i) * nn + j},
                         {"i even", Even(i), 2 * mn + (2 * mm + i) * nn + j}});
    case EdgeFamily::kRimForward:
      if (i == mm) return ctx.Single("flower-even h' rim-forward wrap", 5 * mn + j);
      return ctx.Select("flower-even h' rim-forward", cell,
                        {{"i odd", Odd(i), 2 * mn + (2 * mm + i) * nn + j},
                         {"i even", Even(i), 2 * mn + (4 * mm - i) * nn + j}});
    default:
      break;
  }
  return Derived(ctx, "flower-even h' = 2mn+g'", cell,
                 [&] { return Shift(GPrime(c, m, n, v, ctx), 2 * mn); });
}

// ---- h'' and h''' -----------------------------------------------------------

std::optional<Value> OddClassLabel(const EdgeCell& c, int m, int n,
                                   CaseClass cls, const SchemeVariant& v,
                                   FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mm = m, mn = mm * n;
  const std::string cell = CellName(c, m);
  const Thunk h = [&] { return FlowerPrimeLabel(c, m, n, v, ctx); };
  if (cls == CaseClass::kGPrime) return h();
  if (cls == CaseClass::kGDoublePrime) {
    switch (c.family) {
      case EdgeFamily::kHubSpoke:
        return Derived(ctx, "flower-odd h'' hub-spoke = h'-1", cell,
                       [&] { return Shift(h(), -1); });
      case EdgeFamily::kOuterHubSpoke:
        return Derived(ctx, "flower-odd h'' outer-hub = h'+1", cell,
                       [&] { return Shift(h(), 1); });
      case EdgeFamily::kPendantInner:
        return Derived(ctx, "flower-odd h'' pendant-inner = 4mn+1+h'", cell,
                       [&] { return Shift(h(), 4 * mn + 1); });
      case EdgeFamily::kPendantOuter:
        return Derived(ctx, "flower-odd h'' pendant-outer = h'-1", cell,
                       [&] { return Shift(h(), -1); });
      case EdgeFamily::kCenterSpoke:
        return Derived(ctx, "flower-odd h'' center-spoke = h'-6mn", cell,
                       [&] { return Shift(h(), -6 * mn); });
      case EdgeFamily::kOuterCenterSpoke:
        return Derived(ctx, "flower-odd h'' outer-center = 2mn+h'", cell,
                       [&] { return Shift(h(), 2 * mn); });
      default:
        return h();
    }
  }
  const bool big = mm >= 5, three = mm == 3;
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return ctx.SelectLazy("flower-odd h''' hub-spoke", cell,
                            {{"m>=5", big, h},
                             {"m=3", three, [&] { return Shift(h(), -1); }}});
    case EdgeFamily::kOuterHubSpoke:
      return ctx.SelectLazy("flower-odd h''' outer-hub", cell,
                            {{"m>=5", big, h},
                             {"i=2 & m=3", i == 2 && three, [&] { return Const(2 * j); }},
                             {"i!=2 & m=3", i != 2 && three, h}});
    case EdgeFamily::kPendantInner:
      return ctx.SelectLazy("flower-odd h''' pendant-inner", cell,
                            {{"m>=5", big, h},
                             {"m=3", three, [&] { return Shift(h(), 4 * mn + 1); }}});
    case EdgeFamily::kPendantOuter:
      return ctx.SelectLazy(
          "flower-odd h''' pendant-outer", cell,
          {{"m>=5", big, h},
           {"i=2 & m=3", i == 2 && three, [&] { return Const(2 * mn + 2 * j); }},
           {"i!=2 & m=3", i != 2 && three, [&] { return Shift(h(), -1); }}});
    case EdgeFamily::kCenterSpoke: {
      const bool f2 = v.Patched(Patch::kFlowerOddTripleCenterTwo);
      return ctx.SelectLazy(
          f2 ? "flower-odd h''' center-spoke [F2]" : "flower-odd h''' center-spoke",
          cell,
          {{"m>=5", big, h},
           {f2 ? "i=2 & m=3" : "i!=2 & m=3 (first)",
            (f2 ? i == 2 : i != 2) && three, [&] { return Shift(h(), -6 * mn); }},
           {"i!=2 & m=3", i != 2 && three, [&] { return Shift(h(), -6 * mn + 1); }}});
    }
    case EdgeFamily::kOuterCenterSpoke:
      return ctx.SelectLazy(
          "flower-odd h''' outer-center", cell,
          {{"m>=5", big, h},
           {"i=1 & m=3", i == 1 && three, [&] { return Shift(h(), 2 * mn - 1); }},
           {"i!=1 & m=3", i != 1 && three, [&] { return Shift(h(), 2 * mn); }}});
    default:
      return h();
  }
}

std::optional<Value> EvenClassLabel(const EdgeCell& c, int m, int n,
                                    CaseClass cls, const SchemeVariant& v,
                                    FormulaContext& ctx) {
  const Value i = c.i, j = c.j, mn = static_cast<Value>(m) * n;
  const std::string cell = CellName(c, m);
  const Thunk h = [&] { return FlowerPrimeLabel(c, m, n, v, ctx); };
  if (cls == CaseClass::kGPrime) return h();
  if (cls == CaseClass::kGDoublePrime) {
    switch (c.family) {
      case EdgeFamily::kHubSpoke:
        return Derived(ctx, "flower-even h'' hub-spoke = h'-1", cell,
                       [&] { return Shift(h(), -1); });
      case EdgeFamily::kOuterHubSpoke:
        return Derived(ctx, "flower-even h'' outer-hub = 2mn+1+h'", cell,
                       [&] { return Shift(h(), 2 * mn + 1); });
      case EdgeFamily::kPendantInner:
        return Derived(ctx, "flower-even h'' pendant-inner = 4mn+h'", cell,
                       [&] { return Shift(h(), 4 * mn); });
      case EdgeFamily::kPendantOuter: {
        const bool f3 = v.Patched(Patch::kFlowerEvenDoublePendant);
        return ctx.SelectLazy(
            f3 ? "flower-even h'' pendant-outer [F3]" : "flower-even h'' pendant-outer",
            cell,
            {{"i=2", i == 2, [&] { return Const(2 * j); }},
             {"i!=2", i != 2, [&] { return Shift(h(), f3 ? -2 * mn : 0); }}});
      }
      case EdgeFamily::kCenterSpoke:
        return ctx.SelectLazy(
            "flower-even h'' center-spoke", cell,
            {{"i=2", i == 2, [&] { return Const(2 * j - 1); }},
             {"i!=2", i != 2, [&] { return Shift(h(), -6 * mn + 1); }}});
      case EdgeFamily::kOuterCenterSpoke:
        return Derived(ctx, "flower-even h'' outer-center = 2mn+h'-1", cell,
                       [&] { return Shift(h(), 2 * mn - 1); });
      default:
        return h();
    }
  }
  switch (c.family) {
    case EdgeFamily::kOuterHubSpoke:
      return ctx.SelectLazy(
          "flower-even h''' outer-hub", cell,
          {{"i=2 & n=2", i == 2 && n == 2, [&] { return Const(2 * j - 1); }},
           {"i=2 & n!=2", i == 2 && n != 2, [&] { return Const(2 * j); }},
           {"otherwise", i != 2, h}});
    case EdgeFamily::kPendantInner:
      return Derived(ctx, "flower-even h''' pendant-inner = h'-1", cell,
                     [&] { return Shift(h(), -1); });
    case EdgeFamily::kPendantOuter:
      return Derived(ctx, "flower-even h''' pendant-outer = h'+1", cell,
                     [&] { return Shift(h(), 1); });
    case EdgeFamily::kOuterCenterSpoke:
      return ctx.SelectLazy(
          "flower-even h''' outer-center", cell,
          {{"i=1 & n!=2", i == 1 && n != 2, [&] { return Const(2 * j - 1); }},
           {"i=1 & n=2", i == 1 && n == 2, [&] { return Const(2 * j); }},
           {"otherwise", i != 1, h}});
    default:
      return h();
  }
}

// ---- expected sums ----------------------------------------------------------

std::optional<Value> OddPrimeSumImpl(const VertexId& x, int m, int n,
                                     const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mm = m, nn = n, mn = mm * nn, n2 = nn * nn;
  const std::string cell = ToString(x);
  if (i == 0 && j == 0) return ctx.Single("flower-odd h' sum center", 8 * mn * mn + mn);
  if (i == 0) {
    return ctx.Single("flower-odd h' sum w0_j", 8 * mm * mn - 2 * mn + mm * (4 * j - 1));
  }
  if (i > mm && j >= 1) {
    const Value k = i - mm;
    const bool f1 = v.Patched(Patch::kFlowerOddOuterHubLast);
    return ctx.Select(
        f1 ? "flower-odd h' sum w(m+i)_j [F1]" : "flower-odd h' sum w(m+i)_j", cell,
        {{"i even", Even(k), 2 * mn + 4 * j - 1 + 2 * (k - 2) * nn},
         {"i=m", k == mm, 2 * (mm - 1) * nn + 4 * j + 2 * mn - 1},
         {"i odd", Odd(k) && !(f1 && k == mm), 2 * nn * (mm + k) + 4 * j - 1 + 2 * mn}});
  }
  if (i > mm) {
    const Value k = i - mm;
    return ctx.Select(
        "flower-odd h' sum w(m+i)_0", cell,
        {{"i odd", Odd(k), 2 * mm * n2 + k * n2 + nn * (nn + 1) + n2 * (k - 1)},
         {"i even", Even(k), 2 * mm * n2 + 2 * n2 * (mm + k) + nn}});
  }
  if (j >= 1) {
    return Derived(ctx, "flower-odd h' sum wi_j = 8mn+g'", cell,
                   [&] { return Shift(GPrimeSum(x, m, n, v, ctx), 8 * mn); });
  }
  return Derived(ctx, "flower-odd h' sum wi_0 = 8mn^2+g'", cell,
                 [&] { return Shift(GPrimeSum(x, m, n, v, ctx), 8 * mm * n2); });
}

std::optional<Value> EvenPrimeSumImpl(const VertexId& x, int m, int n,
                                      const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mm = m, nn = n, mn = mm * nn, n2 = nn * nn,
              fl = mm / 4, cl = (mm + 3) / 4;
  const std::string cell = ToString(x);
  if (i == 0 && j == 0) return ctx.Single("flower-even h' sum center", 8 * mn * mn + mn);
  if (i == 0) {
    return ctx.Single("flower-even h' sum w0_j", 8 * mm * mn - 2 * mn + 4 * j * mm - mm);
  }
  if (i > mm && j >= 1) {
    const Value k = i - mm;
    const bool h1 = v.Patched(Patch::kHelmEvenFourPrecedence);
    const bool h2 = v.Patched(Patch::kHelmEvenPendantOddWindow);
    return ctx.Select(
        h1 || h2 ? "flower-even h' sum w(m+i)_j [H1,H2]" : "flower-even h' sum w(m+i)_j",
        cell,
        {{"2<=i<=2F, i even", 2 <= k && k <= 2 * fl && Even(k),
          4 * j - 2 + 2 * nn * (k - 2) + 2 * mn},
         {"i=m", k == mm, 4 * nn * fl + 4 * j - 2 + 2 * mn},
         {"2F+2<=i<=m-2, i even", 2 * fl + 2 <= k && k <= mm - 2 && Even(k),
          2 * mn + 2 * nn * k + 4 * j - 2},
         {"2C+1<=i<=m-1, i odd",
          2 * cl + 1 <= k && k <= mm - 1 && Odd(k) && !(h1 && mm == 4),
          6 * mn - 2 * nn * k + 4 * j - 2 * nn - 2},
         {"i=1, m!=4", k == 1 && mm != 4, 6 * mn - 4 * nn * cl + 4 * j - 2},
         {"3<=i<=2C-1, i odd, m!=4", 3 <= k && k <= 2 * cl - 1 && Odd(k) && mm != 4,
          h2 ? 2 * mn + 2 * (nn * (2 * mm + 1 - k) + 2 * j - 1)
             : 8 * mn - 8 * nn * cl + 2 * (3 - k) * nn + 4 * j - 2},
         {"i=1, m=4", k == 1 && mm == 4, 2 * mn + 8 * nn + 4 * j - 2},
         {"i=3, m=4", k == 3 && mm == 4, 2 * mn + 12 * nn + 4 * j - 2}});
  }
  if (i > mm) {
    return Derived(ctx, "flower-even h' sum w(m+i)_0 = 2mn^2+2g'", cell, [&] {
      const auto g = GPrimeSum(x, m, n, v, ctx);
      return g ? std::optional<Value>(2 * mm * n2 + 2 * *g) : std::nullopt;
    });
  }
  if (j >= 1) {
    return Derived(ctx, "flower-even h' sum wi_j = 8mn+g'", cell,
                   [&] { return Shift(GPrimeSum(x, m, n, v, ctx), 8 * mn); });
  }
  return Derived(ctx, "flower-even h' sum wi_0 = 8mn^2+g'", cell,
                 [&] { return Shift(GPrimeSum(x, m, n, v, ctx), 8 * mm * n2); });
}

std::optional<Value> OddClassSum(const VertexId& x, int m, int n, CaseClass cls,
                                 const SchemeVariant& v, FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mm = m, nn = n, mn = mm * nn, n2 = nn * nn;
  const std::string cell = ToString(x);
  const Thunk h = [&] { return FlowerPrimeSum(x, m, n, v, ctx); };
  if (cls == CaseClass::kGPrime) return h();
  const bool big = mm >= 5, three = mm == 3;
  const bool dbl = cls == CaseClass::kGDoublePrime;
  if (i == 0 && j == 0) {
    if (dbl) return Derived(ctx, "flower-odd h'' sum center = h'", cell, h);
    return ctx.SelectLazy("flower-odd h''' sum center", cell,
                          {{"m>=5", big, h},
                           {"m=3", three, [&] { return Shift(h(), -mn + nn); }}});
  }
  if (i == 0) {
    if (dbl) {
      return Derived(ctx, "flower-odd h'' sum w0_j = 4m^2n+h'", cell,
                     [&] { return Shift(h(), 4 * mm * mn); });
    }
    return ctx.SelectLazy(
        "flower-odd h''' sum w0_j", cell,
        {{"m>=5", big, h},
         {"m=3", three, [&] { return Shift(h(), -4 * mm * mn + 1); }}});
  }
  if (i > mm && j >= 1) {
    if (dbl) return Derived(ctx, "flower-odd h'' sum w(m+i)_j = h'", cell, h);
    const VertexId inner = VertexId::Product(static_cast<int>(i - mm), x.j);
    return ctx.SelectLazy(
        "flower-odd h''' sum w(m+i)_j", cell,
        {{"m>=5", big, h},
         {"i=2 & m=3", i - mm == 2 && three, [&] { return Shift(h(), 1); }},
         {"i!=2 & m=3", i - mm != 2 && three, [&] {
            return Shift(FlowerPrimeSum(inner, m, n, v, ctx), 4 * mn);
          }}});
  }
  if (i > mm) {
    if (dbl) {
      return Derived(ctx, "flower-odd h'' sum w(m+i)_0 = 6mn^2+n+h'", cell,
                     [&] { return Shift(h(), 6 * mm * n2 + nn); });
    }
    return ctx.SelectLazy(
        "flower-odd h''' sum w(m+i)_0", cell,
        {{"m>=5", big, h},
         {"i=1 & m=3", i - mm == 1 && three, [&] { return Shift(h(), 6 * mm * n2); }},
         {"i!=1 & m=3", i - mm != 1 && three,
          [&] { return Shift(h(), 6 * mm * n2 + nn); }}});
  }
  if (j >= 1) {
    if (dbl) {
      return Derived(ctx, "flower-odd h'' sum wi_j = 4mn+h'", cell,
                     [&] { return Shift(h(), 4 * mn); });
    }
    return ctx.SelectLazy("flower-odd h''' sum wi_j", cell,
                          {{"m>=5", big, h},
                           {"m=3", three, [&] { return Shift(h(), 4 * mn); }}});
  }
  if (dbl) {
    return Derived(ctx, "flower-odd h'' sum wi_0 = h'-6mn^2-n", cell,
                   [&] { return Shift(h(), -6 * mm * n2 - nn); });
  }
  return ctx.SelectLazy("flower-odd h''' sum wi_0", cell,
                        {{"m>=5", big, h},
                         {"m=3", three, [&] { return Shift(h(), -6 * mm * n2); }}});
}

std::optional<Value> EvenClassSum(const VertexId& x, int m, int n,
                                  CaseClass cls, const SchemeVariant& v,
                                  FormulaContext& ctx) {
  const Value i = x.i, j = x.j, mm = m, nn = n, mn = mm * nn, n2 = nn * nn;
  const std::string cell = ToString(x);
  const Thunk h = [&] { return FlowerPrimeSum(x, m, n, v, ctx); };
  if (cls == CaseClass::kGPrime) return h();
  const bool dbl = cls == CaseClass::kGDoublePrime;
  if (i == 0 && j == 0) {
    if (dbl) return Derived(ctx, "flower-even h'' sum center = h'", cell, h);
    return ctx.SelectLazy("flower-even h''' sum center", cell,
                          {{"n=2", nn == 2, h},
                           {"n>2", nn > 2, [&] { return Shift(h(), nn); }}});
  }
  if (i == 0) {
    if (dbl) {
      return Derived(ctx, "flower-even h'' sum w0_j = h'-4m^2n-1", cell,
                     [&] { return Shift(h(), -4 * mm * mn - 1); });
    }
    return ctx.SelectLazy("flower-even h''' sum w0_j", cell,
                          {{"n=2", nn == 2, h},
                           {"n!=2", nn != 2, [&] { return Shift(h(), -1); }}});
  }
  if (i > mm && j >= 1) {
    const Value k = i - mm;
    if (dbl) {
      const EdgeCell pendant{EdgeFamily::kPendantOuter, static_cast<int>(k), x.j};
      const Thunk p = [&] { return FlowerPrimeLabel(pendant, m, n, v, ctx); };
      return ctx.SelectLazy(
          "flower-even h'' sum w(m+i)_j", cell,
          {{"i=2", k == 2, [&] { return Shift(p(), 1 + 2 * j); }},
           {"i!=2", k != 2, [&] {
              const auto e = p();
              return e ? std::optional<Value>(2 * *e + 1 - 2 * mn) : std::nullopt;
            }}});
    }
    const EdgeCell hub{EdgeFamily::kOuterHubSpoke, static_cast<int>(k), x.j};
    const auto twice_plus = [&](Value delta) -> std::optional<Value> {
      const auto e = FlowerPrimeLabel(hub, m, n, v, ctx);
      return e ? std::optional<Value>(2 * *e + 2 * mn + delta) : std::nullopt;
    };
    if (nn == 2) {
      return Derived(ctx, "flower-even h''' sum w(m+i)_j n=2 = 2h'(outer-hub)+2mn+1",
                     cell, [&] { return twice_plus(1); });
    }
    return ctx.SelectLazy("flower-even h''' sum w(m+i)_j n>2", cell,
                          {{"i=2", k == 2, [&] { return twice_plus(2); }},
                           {"i!=2", k != 2, [&] { return twice_plus(1); }}});
  }
  if (i > mm) {
    const Value k = i - mm;
    if (dbl) {
      return ctx.SelectLazy(
          "flower-even h'' sum w(m+i)_0", cell,
          {{"i odd", Odd(k), [&] { return Shift(h(), 6 * mm * n2 - nn); }},
           {"i even", Even(k), [&] { return Shift(h(), 8 * mm * n2 - nn); }}});
    }
    if (nn == 2) {
      return ctx.Select("flower-even h''' sum w(m+i)_0 n=2", cell,
                        {{"i odd", Odd(k), 2 * mm * n2 + 2 * k * n2 + nn},
                         {"i even", Even(k), 6 * mm * n2 + 2 * n2 - 2 * k * n2 + nn}});
    }
    // The i = 1 case is also claimed by the odd-i case; reported, not patched.
    return ctx.Select("flower-even h''' sum w(m+i)_0 n!=2", cell,
                      {{"i=1", k == 1, 2 * mm * n2 + 2 * k * n2},
                       {"i odd", Odd(k), 2 * mm * n2 + 2 * k * n2 + nn},
                       {"i even", Even(k), 6 * mm * n2 + 2 * n2 - 2 * k * n2 + nn}});
  }
  if (j >= 1) {
    if (dbl) {
      return Derived(ctx, "flower-even h'' sum wi_j = 4mn-1+h'", cell,
                     [&] { return Shift(h(), 4 * mn - 1); });
    }
    return Derived(ctx, "flower-even h''' sum wi_j = h'-1", cell,
                   [&] { return Shift(h(), -1); });
  }
  if (dbl) {
    return Derived(ctx, "flower-even h'' sum wi_0 = h'-8mn^2+n", cell,
                   [&] { return Shift(h(), -8 * mm * n2 + nn); });
  }
  return Derived(ctx, "flower-even h''' sum wi_0 = h'+n", cell,
                 [&] { return Shift(h(), nn); });
}

}  // namespace

std::string FlowerFunctionName(int m, int n) {
  if (n == 1) return "f2";
  switch (HelmCaseClass(m, n)) {
    case CaseClass::kGPrime: return "h'";
    case CaseClass::kGDoublePrime: return "h''";
    case CaseClass::kGTriplePrime: return "h'''";
  }
  return "h'";
}

std::optional<Value> FlowerSingleLabel(const EdgeCell& cell, int m,
                                       const SchemeVariant& variant,
                                       FormulaContext& ctx) {
  return SingleLabel(cell, m, variant, ctx);
}

std::optional<Value> FlowerPrimeLabel(const EdgeCell& cell, int m, int n,
                                      const SchemeVariant& variant,
                                      FormulaContext& ctx) {
  if (Odd(m)) return OddPrime(cell, m, n, variant, ctx);
  return EvenPrime(cell, m, n, variant, ctx);
}

std::optional<Value> FlowerLabel(const EdgeCell& cell, int m, int n,
                                 CaseClass cls, const SchemeVariant& variant,
                                 FormulaContext& ctx) {
  if (Odd(m)) return OddClassLabel(cell, m, n, cls, variant, ctx);
  return EvenClassLabel(cell, m, n, cls, variant, ctx);
}

std::optional<Value> FlowerPrimeSum(const VertexId& v, int m, int n,
                                    const SchemeVariant& variant,
                                    FormulaContext& ctx) {
  if (Odd(m)) return OddPrimeSumImpl(v, m, n, variant, ctx);
  return EvenPrimeSumImpl(v, m, n, variant, ctx);
}

std::optional<Value> FlowerSum(const VertexId& v, int m, int n, CaseClass cls,
                               const SchemeVariant& variant,
                               FormulaContext& ctx) {
  if (Odd(m)) return OddClassSum(v, m, n, cls, variant, ctx);
  return EvenClassSum(v, m, n, cls, variant, ctx);
}

SchemeOutcome EvaluateFlowerSingle(int m, const SchemeVariant& variant) {
  SchemeOutcome out = EvaluateCells(
      SchemeFamily::kFlower, m, 1, [&](const EdgeCell& cell, FormulaContext& ctx) {
        return FlowerSingleLabel(cell, m, variant, ctx);
      });
  out.function = "f2";
  return out;
}

EdgeLabeling LabelFlowerSingle(int m, const SchemeVariant& variant) {
  return RequireCovered(EvaluateFlowerSingle(m, variant));
}

SchemeOutcome EvaluateFlowerProduct(int m, int n, const SchemeVariant& variant) {
  CheckSchemeParameters(m, n);
  if (n == 1) return EvaluateFlowerSingle(m, variant);
  const CaseClass cls = HelmCaseClass(m, n);
  SchemeOutcome out = EvaluateCells(
      SchemeFamily::kFlower, m, n, [&](const EdgeCell& cell, FormulaContext& ctx) {
        return FlowerLabel(cell, m, n, cls, variant, ctx);
      });
  out.function = FlowerFunctionName(m, n);
  out.case_class = cls;
  return out;
}

EdgeLabeling LabelFlowerProduct(int m, int n, const SchemeVariant& variant) {
  return RequireCovered(EvaluateFlowerProduct(m, n, variant));
}

ExpectedProfile EvaluateExpectedFlowerSums(int m, int n,
                                           const SchemeVariant& variant) {
  CheckSchemeParameters(m, n);
  ExpectedProfile out;
  FormulaContext ctx;
  std::optional<CaseClass> cls;
  if (n > 1) cls = HelmCaseClass(m, n);
  for (int i = 0; i <= 2 * m; ++i) {
    for (int j = 0; j <= n; ++j) {
      const VertexId x = VertexId::Product(i, j);
      if (!cls) {
        out.unspecified.push_back(x);
        continue;
      }
      if (auto s = FlowerSum(x, m, n, *cls, variant, ctx)) out.sums[x] = *s;
    }
  }
  out.coverage = ctx.issues();
  out.branch_hits = ctx.branch_hits();
  return out;
}

VertexSumProfile ExpectedFlowerSums(int m, int n, const SchemeVariant& variant) {
  return RequireCovered(EvaluateExpectedFlowerSums(m, n, variant));
}

}  // namespace antimagic
