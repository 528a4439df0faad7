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

#include "antimagic/scheme.h"

#include <array>
#include <string>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

constexpr std::array<EdgeFamily, 4> kWheelFamilies = {
    EdgeFamily::kHubSpoke, EdgeFamily::kRimForward, EdgeFamily::kRimBackward,
    EdgeFamily::kCenterSpoke};
constexpr std::array<EdgeFamily, 6> kHelmFamilies = {
    EdgeFamily::kHubSpoke,    EdgeFamily::kRimForward,
    EdgeFamily::kRimBackward, EdgeFamily::kCenterSpoke,
    EdgeFamily::kPendantInner, EdgeFamily::kPendantOuter};
constexpr std::array<EdgeFamily, 8> kFlowerFamilies = {
    EdgeFamily::kHubSpoke,     EdgeFamily::kRimForward,
    EdgeFamily::kRimBackward,  EdgeFamily::kCenterSpoke,
    EdgeFamily::kPendantInner, EdgeFamily::kPendantOuter,
    EdgeFamily::kOuterHubSpoke, EdgeFamily::kOuterCenterSpoke};

constexpr std::array<ErrataEntry, 12> kLedger = {{
    {Patch::kWheelOddRimForwardParity, "W1", SchemeFamily::kWheel,
     "wheel m odd, rim-forward label (wi_j, w(i+1)_0), i < m",
     "mn+in+j for odd i, in+j for even i (identical to rim-backward)",
     "in+j for odd i, mn+in+j for even i",
     "Both rim families printed with one formula cannot be a bijection; the "
     "printed sums for wi_j and wi_0 force the parity swap on this family "
     "alone."},
    {Patch::kWheelEvenHubEvenSpoke, "W2", SchemeFamily::kWheel,
     "wheel m even, hub-spoke label (w0_0, wi_j), even i != 1",
     "(4m+1-i)n-5+2j", "(4m-i)n+2j-1",
     "The printed values repeat rim labels unless n = 4; the replacement "
     "restores a bijection onto 1..4mn and agrees with the printed form at "
     "n = 4."},
    {Patch::kWheelEvenRimLeafSum, "W3", SchemeFamily::kWheel,
     "wheel m even, sum at wi_j, even i", "(8m-3i+2)n+4j-5",
     "(8m-3i+1)n+4j-1",
     "Companion of W2: the sum of the three incident labels once the hub "
     "spoke is patched."},
    {Patch::kWheelEvenRimCenterSumWindow, "W4", SchemeFamily::kWheel,
     "wheel m even, sum at wi_0, branch n^2(8m-3i+2)+2n",
     "window m-1 <= i <= 2*ceil(m/4)-1, i odd",
     "window 2*ceil(m/4)+1 <= i <= m-1, i odd",
     "The printed window is empty for every even m, so the odd cells "
     "2*ceil(m/4)+1..m-1 fall into no branch; the replacement is the window "
     "of the matching center-spoke label branch and reproduces the observed "
     "sums."},
    {Patch::kHelmEvenFourPrecedence, "H1", SchemeFamily::kHelm,
     "helm m even, pendant-outer and center-spoke labels and sum at wi_0, "
     "cell i = 3 when m = 4; the flower tables that repeat them",
     "both the m = 4 branch and the odd window 2*ceil(m/4)+1 <= i <= m-1 "
     "apply",
     "the m = 4 branch takes precedence",
     "Reading the odd window at m = 4, i = 3 repeats labels; only the "
     "precedence reading yields a bijection."},
    {Patch::kHelmEvenPendantOddWindow, "H2", SchemeFamily::kHelm,
     "helm m even, pendant-outer label (w(m+i)_j, wi_0), 3 <= i <= "
     "2*ceil(m/4)-1, i odd, m != 4; the flower outer-hub label and sum at "
     "w(m+i)_j that repeat it",
     "3mn-4n*ceil(m/4)+(3-i)n+2j-1", "n(2m+1-i)+2j-1",
     "Identical when m = 2 (mod 4). For m = 0 (mod 4) the printed value "
     "repeats labels; the printed sum at w3_0 for m = 8 matches only the "
     "replacement."},
    {Patch::kHelmOddTripleCenterTwo, "H3", SchemeFamily::kHelm,
     "helm m odd, n even class, center-spoke label and sum at w0_j when "
     "n = 2",
     "m = 3 branches for every n",
     "the m >= 5 branches also at m = 3 when n = 2",
     "At (3,2) the printed m = 3 branches repeat labels while the m >= 5 "
     "branches yield a bijection with distinct sums."},
    {Patch::kHelmEvenWrapIndex, "H4", SchemeFamily::kHelm,
     "helm m even, label 2mn+j on (wi_j, wm_0)",
     "i unbound, so the formula also claims the rim-forward cell i = m-1",
     "i = 1 only, the wrap edge (w1_j, wm_0)",
     "The m odd analogue binds i = 1; with that reading every cell is "
     "labeled once and the labeling is a bijection."},
    {Patch::kFlowerSingleRimReference, "F4", SchemeFamily::kFlower,
     "flower n = 1, rim labels 2m + f1(wi_1, w(i+1)_1) and the wrap "
     "2m + f1(wi_1, w(i+1)_0) with i unbound",
     "reference to a cell the helm labeling does not define",
     "2m + f1 of the same rim edge",
     "The nearest defined helm cell is the same rim edge; the alternative "
     "through the other rim family repeats labels for m = 3..8."},
    {Patch::kFlowerOddOuterHubLast, "F1", SchemeFamily::kFlower,
     "flower m odd, outer-hub label (w0_0, w(m+i)_j) and sum at w(m+i)_j, "
     "odd-i branch",
     "odd i, overlapping the i = m branch", "odd i != m",
     "m is odd, so the printed guards select two values at i = m."},
    {Patch::kFlowerOddTripleCenterTwo, "F2", SchemeFamily::kFlower,
     "flower m odd, n even class, center-spoke label when m = 3",
     "two branches with the guard i != 2 & m = 3",
     "first branch guarded by i = 2 & m = 3",
     "The printed guards overlap and leave i = 2 uncovered; the i = 2 "
     "reading is the only one yielding a bijection for n = 2, 4, 6."},
    {Patch::kFlowerEvenDoublePendant, "F3", SchemeFamily::kFlower,
     "flower m even, m < n class, pendant-outer label (w(m+i)_j, wi_0), "
     "i != 2",
     "h'", "h' - 2mn",
     "Both printed sums at w(m+i)_j and at wi_0 need the shift; the printed "
     "form repeats labels."},
}};

constexpr std::array<NotationNote, 2> kNotation = {{
    {"N1", SchemeFamily::kHelm,
     "Sums printed with subscripts g3' and g2' are read as sums under g'; "
     "only g', g'' and g''' are defined."},
    {"N2", SchemeFamily::kFlower,
     "The sum at w0_j listed twice as h'' is read as h'' then h'''."},
}};

}  // namespace

std::string_view ToString(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::kWheel: return "wheel";
    case SchemeFamily::kHelm: return "helm";
    case SchemeFamily::kFlower: return "flower";
  }
  return "wheel";
}

std::optional<SchemeFamily> ParseSchemeFamily(std::string_view text) {
  for (SchemeFamily f :
       {SchemeFamily::kWheel, SchemeFamily::kHelm, SchemeFamily::kFlower}) {
    if (ToString(f) == text) return f;
  }
  return std::nullopt;
}

std::string_view ToString(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::kHubSpoke: return "hub-spoke";
    case EdgeFamily::kRimForward: return "rim-forward";
    case EdgeFamily::kRimBackward: return "rim-backward";
    case EdgeFamily::kCenterSpoke: return "center-spoke";
    case EdgeFamily::kPendantInner: return "pendant-inner";
    case EdgeFamily::kPendantOuter: return "pendant-outer";
    case EdgeFamily::kOuterHubSpoke: return "outer-hub-spoke";
    case EdgeFamily::kOuterCenterSpoke: return "outer-center-spoke";
  }
  return "hub-spoke";
}

Edge CellEdge(const EdgeCell& c, int m) {
  const int next = c.i == m ? 1 : c.i + 1;
  switch (c.family) {
    case EdgeFamily::kHubSpoke:
      return Edge::Make(VertexId::Product(0, 0), VertexId::Product(c.i, c.j));
    case EdgeFamily::kRimForward:
      return Edge::Make(VertexId::Product(c.i, c.j),
                        VertexId::Product(next, 0));
    case EdgeFamily::kRimBackward:
      return Edge::Make(VertexId::Product(c.i, 0),
                        VertexId::Product(next, c.j));
    case EdgeFamily::kCenterSpoke:
      return Edge::Make(VertexId::Product(c.i, 0), VertexId::Product(0, c.j));
    case EdgeFamily::kPendantInner:
      return Edge::Make(VertexId::Product(c.i, c.j),
                        VertexId::Product(m + c.i, 0));
    case EdgeFamily::kPendantOuter:
      return Edge::Make(VertexId::Product(m + c.i, c.j),
                        VertexId::Product(c.i, 0));
    case EdgeFamily::kOuterHubSpoke:
      return Edge::Make(VertexId::Product(0, 0),
                        VertexId::Product(m + c.i, c.j));
    case EdgeFamily::kOuterCenterSpoke:
      return Edge::Make(VertexId::Product(m + c.i, 0),
                        VertexId::Product(0, c.j));
  }
  throw InvalidArgument("unknown edge family");
}

std::string CellName(const EdgeCell& c, int m) {
  return std::string(ToString(c.family)) + " i=" + std::to_string(c.i) +
         " j=" + std::to_string(c.j) + " " + ToString(CellEdge(c, m));
}

EdgeClass ClassOf(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::kHubSpoke:
    case EdgeFamily::kOuterHubSpoke:
      return EdgeClass::kSpoke;
    case EdgeFamily::kCenterSpoke:
    case EdgeFamily::kOuterCenterSpoke:
      return EdgeClass::kCenter;
    default:
      return EdgeClass::kZigzag;
  }
}

std::span<const EdgeFamily> FamiliesOf(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::kWheel: return kWheelFamilies;
    case SchemeFamily::kHelm: return kHelmFamilies;
    case SchemeFamily::kFlower: return kFlowerFamilies;
  }
  return kWheelFamilies;
}

void CheckSchemeParameters(int m, int n) {
  if (m < 3 || m > kMaxParameter) {
    throw InvalidArgument("m must lie in [3, " + std::to_string(kMaxParameter) +
                          "], got " + std::to_string(m));
  }
  if (n < 1 || n > kMaxParameter) {
    throw InvalidArgument("n must lie in [1, " + std::to_string(kMaxParameter) +
                          "], got " + std::to_string(n));
  }
}

std::vector<EdgeCell> SchemeCells(SchemeFamily f, int m, int n) {
  CheckSchemeParameters(m, n);
  std::vector<EdgeCell> cells;
  for (EdgeFamily family : FamiliesOf(f)) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) cells.push_back({family, i, j});
    }
  }
  return cells;
}

Graph SchemeGraph(SchemeFamily f, int m, int n) {
  CheckSchemeParameters(m, n);
  switch (f) {
    case SchemeFamily::kWheel: return TensorProduct(BuildWheel(m), BuildStar(n));
    case SchemeFamily::kHelm: return TensorProduct(BuildHelm(m), BuildStar(n));
    case SchemeFamily::kFlower:
      return TensorProduct(BuildFlower(m), BuildStar(n));
  }
  throw InvalidArgument("unknown scheme family");
}

std::string_view ToString(CaseClass c) {
  switch (c) {
    case CaseClass::kGPrime: return "G'";
    case CaseClass::kGDoublePrime: return "G''";
    case CaseClass::kGTriplePrime: return "G'''";
  }
  return "G'";
}

std::span<const ErrataEntry> ErrataLedger() { return kLedger; }

const ErrataEntry& LedgerEntry(Patch patch) {
  for (const ErrataEntry& e : kLedger) {
    if (e.patch == patch) return e;
  }
  throw InvalidArgument("patch missing from ledger");
}

std::span<const NotationNote> NotationNotes() { return kNotation; }

std::string_view ToString(SchemeMode mode) {
  return mode == SchemeMode::kAsPrinted ? "as-printed" : "errata";
}

std::optional<SchemeMode> ParseSchemeMode(std::string_view text) {
  if (text == "as-printed") return SchemeMode::kAsPrinted;
  if (text == "errata") return SchemeMode::kErrata;
  return std::nullopt;
}

SchemeVariant SchemeVariant::AsPrinted() {
  SchemeVariant v;
  v.mode_ = SchemeMode::kAsPrinted;
  v.patches_ = 0;
  return v;
}

SchemeVariant SchemeVariant::Errata() {
  SchemeVariant v;
  v.mode_ = SchemeMode::kErrata;
  for (const ErrataEntry& e : kLedger) {
    v.patches_ |= 1u << static_cast<unsigned>(e.patch);
  }
  return v;
}

SchemeVariant SchemeVariant::Without(Patch patch) const {
  SchemeVariant v = *this;
  v.patches_ &= ~(1u << static_cast<unsigned>(patch));
  return v;
}

bool SchemeVariant::Patched(Patch patch) const {
  return (patches_ >> static_cast<unsigned>(patch)) & 1u;
}

std::vector<const ErrataEntry*> SchemeVariant::Notes(SchemeFamily family) const {
  std::vector<const ErrataEntry*> out;
  for (const ErrataEntry& e : kLedger) {
    bool relevant = e.family == family ||
                    (family == SchemeFamily::kFlower &&
                     e.family == SchemeFamily::kHelm);
    if (relevant && Patched(e.patch)) out.push_back(&e);
  }
  return out;
}

EdgeLabeling RequireCovered(const SchemeOutcome& outcome) {
  if (!outcome.covered()) {
    std::string message = "formula coverage:";
    for (const CoverageIssue& issue : outcome.coverage) {
      message += "\n  " + issue.Describe();
    }
    throw CoverageError(message);
  }
  return outcome.labeling;
}

VertexSumProfile RequireCovered(const ExpectedProfile& profile) {
  if (!profile.coverage.empty()) {
    std::string message = "formula coverage:";
    for (const CoverageIssue& issue : profile.coverage) {
      message += "\n  " + issue.Describe();
    }
    throw CoverageError(message);
  }
  return profile.sums;
}

}  // namespace antimagic
