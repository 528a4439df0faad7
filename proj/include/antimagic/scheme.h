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

#ifndef ANTIMAGIC_SCHEME_H_
#define ANTIMAGIC_SCHEME_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/formula.h"
#include "antimagic/graph.h"
#include "antimagic/labeling.h"

namespace antimagic {

enum class SchemeFamily : std::uint8_t { kWheel, kHelm, kFlower };

std::string_view ToString(SchemeFamily f);
std::optional<SchemeFamily> ParseSchemeFamily(std::string_view text);

// Edge families of the product of a wheel, helm or flower with K_{1,n}.
// Rim families are indexed by i = 1..m; at i = m they wrap around to u1.
enum class EdgeFamily : std::uint8_t {
  kHubSpoke,          // (w0_0, wi_j)
  kRimForward,        // (wi_j, w(i+1)_0)
  kRimBackward,       // (wi_0, w(i+1)_j)
  kCenterSpoke,       // (wi_0, w0_j)
  kPendantInner,      // (wi_j, w(m+i)_0)
  kPendantOuter,      // (w(m+i)_j, wi_0)
  kOuterHubSpoke,     // (w0_0, w(m+i)_j)
  kOuterCenterSpoke,  // (w(m+i)_0, w0_j)
};

std::string_view ToString(EdgeFamily f);

struct EdgeCell {
  EdgeFamily family = EdgeFamily::kHubSpoke;
  int i = 1;
  int j = 1;

  friend auto operator<=>(const EdgeCell&, const EdgeCell&) = default;
};

Edge CellEdge(const EdgeCell& cell, int m);
std::string CellName(const EdgeCell& cell, int m);

// Spoke, rim/pendant and center classes of the edge partition.
enum class EdgeClass : std::uint8_t { kSpoke, kZigzag, kCenter };
EdgeClass ClassOf(EdgeFamily f);

std::span<const EdgeFamily> FamiliesOf(SchemeFamily f);
std::vector<EdgeCell> SchemeCells(SchemeFamily f, int m, int n);
// W_m, H_m or Fl_m tensored with K_{1,n}.
Graph SchemeGraph(SchemeFamily f, int m, int n);
// Throws InvalidArgument unless 3 <= m and 1 <= n, both at most kMaxParameter.
void CheckSchemeParameters(int m, int n);

enum class CaseClass : std::uint8_t { kGPrime, kGDoublePrime, kGTriplePrime };
std::string_view ToString(CaseClass c);

// Registered deviations from the printed formulas.
enum class Patch : std::uint8_t {
  kWheelOddRimForwardParity,
  kWheelEvenHubEvenSpoke,
  kWheelEvenRimLeafSum,
  kWheelEvenRimCenterSumWindow,
  kHelmEvenFourPrecedence,
  kHelmEvenPendantOddWindow,
  kHelmOddTripleCenterTwo,
  kHelmEvenWrapIndex,
  kFlowerSingleRimReference,
  kFlowerOddOuterHubLast,
  kFlowerOddTripleCenterTwo,
  kFlowerEvenDoublePendant,
};

struct ErrataEntry {
  Patch patch;
  std::string_view id;
  SchemeFamily family;
  std::string_view formula;
  std::string_view printed;
  std::string_view replacement;
  std::string_view evidence;
};

// Append-only ledger of every patch the errata variant applies.
std::span<const ErrataEntry> ErrataLedger();
const ErrataEntry& LedgerEntry(Patch patch);

// Readings that change no value: notation normalizations the formulas
// need before they can be evaluated at all.
struct NotationNote {
  std::string_view id;
  SchemeFamily family;
  std::string_view note;
};
std::span<const NotationNote> NotationNotes();

enum class SchemeMode : std::uint8_t { kAsPrinted, kErrata };
std::string_view ToString(SchemeMode mode);
std::optional<SchemeMode> ParseSchemeMode(std::string_view text);

class SchemeVariant {
 public:
  static SchemeVariant AsPrinted();
  static SchemeVariant Errata();

  // The errata variant with one patch withdrawn; used to show each patch is
  // needed.
  SchemeVariant Without(Patch patch) const;

  SchemeMode mode() const { return mode_; }
  bool Patched(Patch patch) const;
  std::vector<const ErrataEntry*> Notes(SchemeFamily family) const;

 private:
  SchemeMode mode_ = SchemeMode::kErrata;
  std::uint32_t patches_ = 0;
};

// Result of evaluating a labeling scheme on every cell. Cells whose formula
// failed to select a value stay unlabeled and are listed in coverage.
struct SchemeOutcome {
  std::string function;
  std::optional<CaseClass> case_class;
  EdgeLabeling labeling;
  std::vector<CoverageIssue> coverage;
  std::map<std::string, std::size_t> branch_hits;
  std::map<std::string, std::size_t> references;

  bool covered() const { return coverage.empty(); }
};

// Closed-form vertex sums. Vertices without a printed formula are listed in
// unspecified; vertices whose formula failed are listed in coverage.
struct ExpectedProfile {
  VertexSumProfile sums;
  std::vector<VertexId> unspecified;
  std::vector<CoverageIssue> coverage;
  std::map<std::string, std::size_t> branch_hits;
};

// Shared driver: evaluates label(cell) over every cell in canonical order.
template <typename LabelFn>
SchemeOutcome EvaluateCells(SchemeFamily family, int m, int n,
                            LabelFn&& label) {
  SchemeOutcome out;
  const auto cells = SchemeCells(family, m, n);
  out.labeling.set_target_q(static_cast<Label>(cells.size()));
  FormulaContext ctx;
  for (const EdgeCell& cell : cells) {
    if (auto value = label(cell, ctx)) {
      out.labeling.Assign(CellEdge(cell, m), *value);
    }
  }
  out.coverage = ctx.issues();
  out.branch_hits = ctx.branch_hits();
  out.references = ctx.references();
  return out;
}

// Throws CoverageError listing every issue if the outcome is incomplete.
EdgeLabeling RequireCovered(const SchemeOutcome& outcome);
VertexSumProfile RequireCovered(const ExpectedProfile& profile);

}  // namespace antimagic

#endif  // ANTIMAGIC_SCHEME_H_
