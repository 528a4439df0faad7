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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antimagic/cli.h"
#include "antimagic/conformance.h"
#include "antimagic/search.h"

namespace {

using namespace antimagic;
using Clock = std::chrono::steady_clock;

// Wall-clock limits, in seconds.
constexpr double kStructureLimit = 1.0;
constexpr double kWheelGridLimit = 10.0;
constexpr double kSearchLimit = 30.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexId W(int i, int j) { return VertexId::Product(i, j); }

std::string Cell(std::string_view family, int m, int n) {
  return std::string(family) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

Outcome StructuralLaws() {
  Outcome out;
  const auto start = Clock::now();
  int cells = 0;
  for (int m = 3; m <= 8; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const std::size_t v = (m + 1) * (n + 1), big = (2 * m + 1) * (n + 1);
      const std::size_t mn = m * n;
      const Graph w = TensorProduct(BuildWheel(m), BuildStar(n));
      const Graph h = TensorProduct(BuildHelm(m), BuildStar(n));
      const Graph f = TensorProduct(BuildFlower(m), BuildStar(n));
      if (w.order() != v || w.size() != 4 * mn) out.Fail(Cell("wheel", m, n));
      if (h.order() != big || h.size() != 6 * mn) out.Fail(Cell("helm", m, n));
      if (f.order() != big || f.size() != 8 * mn) out.Fail(Cell("flower", m, n));
      cells += 3;
    }
  }
  const double t = Seconds(start);
  if (t >= kStructureLimit) out.Fail("took " + std::to_string(t) + " s");
  if (out.ok) {
    out.detail = std::to_string(cells) + " products exact in " +
                 std::to_string(t) + " s (limit 1 s)";
  }
  return out;
}

Outcome WeichselAgreement() {
  Outcome out;
  std::vector<std::pair<std::string, Graph>> factors;
  for (int k = 2; k <= 4; ++k) factors.emplace_back("P" + std::to_string(k), BuildPath(k));
  for (int k = 3; k <= 5; ++k) factors.emplace_back("C" + std::to_string(k), BuildCycle(k));
  for (int k = 1; k <= 3; ++k) factors.emplace_back("K1," + std::to_string(k), BuildStar(k));
  for (int k = 3; k <= 5; ++k) factors.emplace_back("W" + std::to_string(k), BuildWheel(k));
  int pairs = 0, connected = 0;
  for (const auto& [gn, g] : factors) {
    for (const auto& [hn, h] : factors) {
      const bool predicted = WeichselConnected(g, h);
      const bool actual = IsConnected(TensorProduct(g, h));
      if (predicted != actual) out.Fail(gn + " x " + hn);
      ++pairs;
      connected += actual;
    }
  }
  if (out.ok) {
    out.detail = std::to_string(pairs) + " pairs agree (" + std::to_string(connected) +
                 " connected)";
  }
  return out;
}

Outcome WheelGrid() {
  Outcome out;
  const auto start = Clock::now();
  int cells = 0;
  for (int m : {3, 5, 7, 9, 4, 6, 8, 10}) {
    for (int n = 1; n <= 5; ++n) {
      const std::string where = Cell("wheel", m, n);
      const ConformanceReport r = WheelConformance(m, n, SchemeVariant::Errata());
      const Sum q = 4 * m * n;
      const Sum center = 3 * Sum{m} * m * n * n + (n % 2 == 0 ? n : 0);
      if (!r.verification.bijective) out.Fail(where + " not a bijection");
      else if (!r.verification.colliding_pairs.empty()) out.Fail(where + " sums collide");
      else if (!r.sums_match || r.sums_compared != static_cast<std::size_t>((m + 1) * (n + 1)))
        out.Fail(where + " " + r.first_violation);
      else if (r.q != q || r.observed_center != center)
        out.Fail(where + " center " + std::to_string(r.observed_center.value_or(-1)));
      ++cells;
    }
  }
  const double t = Seconds(start);
  if (t >= kWheelGridLimit) out.Fail("took " + std::to_string(t) + " s");
  if (out.ok) {
    out.detail = std::to_string(cells) + " cells conform in " + std::to_string(t) +
                 " s (limit 10 s)";
  }
  return out;
}

Outcome PrintedWheelDetection() {
  Outcome out;
  const Graph g = SchemeGraph(SchemeFamily::kWheel, 3, 1);
  const SchemeOutcome o =
      EvaluateScheme(SchemeFamily::kWheel, 3, 1, SchemeVariant::AsPrinted());
  const VerificationReport r = VerifyAntimagic(g, o.labeling);
  // Odd i repeats 5 on the pair below; even i also repeats 3, leaving 6 unused.
  const std::vector<Edge> five = {Edge::Make(W(1, 0), W(2, 1)),
                                  Edge::Make(W(1, 1), W(2, 0))};
  const std::vector<Edge> three = {Edge::Make(W(2, 0), W(3, 1)),
                                   Edge::Make(W(2, 1), W(3, 0))};
  const std::vector<DuplicateLabel> dups = {{3, three}, {5, five}};
  if (r.bijective) out.Fail("reported bijective");
  else if (r.duplicate_labels != dups) out.Fail("duplicate evidence differs");
  else if (r.missing_labels != std::vector<Label>{2, 6})
    out.Fail("missing-label evidence differs");
  if (out.ok) {
    out.detail = "label 5 on (w1_0,w2_1) and (w1_1,w2_0); label 2 missing "
                 "(also label 3 repeated, 6 missing)";
  }
  return out;
}

// Corrupts each label in turn; each corruption must be caught and pinpointed.
bool MutationsPinpointed(const Graph& g, const EdgeLabeling& good, std::size_t* count) {
  for (const auto& [e, label] : good.assignments()) {
    EdgeLabeling bad = good;
    const Label other = label == 1 ? 2 : label - 1;
    bad.Set(e, other);
    const VerificationReport r = VerifyAntimagic(g, bad);
    if (r.antimagic || r.duplicate_labels.size() != 1) return false;
    const auto& edges = r.duplicate_labels[0].edges;
    if (r.duplicate_labels[0].label != other ||
        std::find(edges.begin(), edges.end(), e) == edges.end() ||
        r.missing_labels != std::vector<Label>{label}) {
      return false;
    }
    ++*count;
  }
  return true;
}

bool NamesCell(const CoverageIssue& c) {
  return !c.cell.empty() &&
         (c.cell.find("i=") != std::string::npos || c.cell[0] == 'w');
}

Outcome SingleLeaf() {
  Outcome out;
  int reports = 0, centers = 0, issues = 0;
  std::size_t mutations = 0;
  for (SchemeFamily f : {SchemeFamily::kHelm, SchemeFamily::kFlower}) {
    for (int m = 3; m <= 10; ++m) {
      for (const SchemeVariant& v : {SchemeVariant::AsPrinted(), SchemeVariant::Errata()}) {
        const std::string where = Cell(ToString(f), m, 1) + " " + std::string(ToString(v.mode()));
        const ConformanceReport r = Conformance(f, m, 1, v);
        ++reports;
        const std::string fn = f == SchemeFamily::kHelm ? "f1" : "f2";
        if (r.function != fn || r.branch_hits.empty()) out.Fail(where + " no branch counts");
        for (const auto* list : {&r.label_coverage, &r.expected_coverage}) {
          for (const CoverageIssue& c : *list) {
            ++issues;
            if (!NamesCell(c)) out.Fail(where + " unnamed cell: " + c.Describe());
          }
        }
        if (f == SchemeFamily::kHelm && r.verification.antimagic) {
          const Sum center = 3 * m * m + m;
          if (r.observed_center != center || r.expected_center != center) {
            out.Fail(where + " center");
          }
          ++centers;
        }
        if (v.mode() == SchemeMode::kErrata) {
          if (!r.verification.antimagic) out.Fail(where + " " + r.first_violation);
          else if (!MutationsPinpointed(SchemeGraph(f, m, 1),
                                        LabelScheme(f, m, 1, v), &mutations))
            out.Fail(where + " mutation not pinpointed");
        }
      }
    }
  }
  // The printed single-leaf rims of the flower reference edges that do not
  // exist, and the printed helm sums overlap at m = 3; both must be caught.
  const auto printed = FlowerConformance(3, 1, SchemeVariant::AsPrinted());
  if (printed.label_coverage.empty() ||
      printed.label_coverage[0].cell != "rim-forward i=1 j=1 (w1_1,w2_0)") {
    out.Fail("printed flower rim reference not detected");
  }
  const auto helm3 = HelmConformance(3, 1, SchemeVariant::Errata());
  if (helm3.expected_coverage.empty() || helm3.expected_coverage[0].cell != "w2_0") {
    out.Fail("helm m=3 sum overlap not detected");
  }
  if (out.ok) {
    out.detail = std::to_string(reports) + " reports, " + std::to_string(centers) +
                 " helm centers 3m^2+m, " + std::to_string(issues) +
                 " coverage issues named, " + std::to_string(mutations) +
                 " mutations pinpointed";
  }
  return out;
}

Outcome MultiLeafGrid() {
  Outcome out;
  int pass = 0, fail = 0, literal = 0, triple = 0;
  for (SchemeFamily f : {SchemeFamily::kHelm, SchemeFamily::kFlower}) {
    for (int m = 3; m <= 8; ++m) {
      for (int n = 2; n <= 4; ++n) {
        const std::string where = Cell(ToString(f), m, n);
        const ConformanceReport r = Conformance(f, m, n, SchemeVariant::Errata());
        if (!r.pass) {
          if (r.first_violation.empty()) out.Fail(where + " FAIL without evidence");
          ++fail;
          continue;
        }
        ++pass;
        if (!r.handshake_full) out.Fail(where + " handshake");
        const Sum mn = Sum{m} * n;
        const Sum base = (f == SchemeFamily::kHelm ? 5 : 8) * mn * mn + mn;
        // The printed centers for the n-even class differ from base.
        Sum center = base;
        if (r.case_class == CaseClass::kGTriplePrime) {
          ++triple;
          if (f == SchemeFamily::kHelm) center = base - mn + n;
          else if (m == 3) center = base - mn + n;
          else if (m % 2 == 0 && n > 2) center = base + n;
        }
        if (center == base) ++literal;
        if (r.observed_center != center) {
          out.Fail(where + " center " + std::to_string(r.observed_center.value_or(-1)) +
                   " vs " + std::to_string(center));
        }
      }
    }
  }
  if (out.ok) {
    out.detail = std::to_string(pass) + " PASS, " + std::to_string(fail) +
                 " FAIL with evidence; PASS centers: " + std::to_string(literal) +
                 " at 5m^2n^2+mn/8m^2n^2+mn, " + std::to_string(pass - literal) +
                 " n-even cells at the printed n-even center (" +
                 std::to_string(triple) + " n-even PASS cells)";
  }
  return out;
}

bool NaiveAntimagic(const Graph& g) {
  std::vector<Label> labels(g.size());
  std::iota(labels.begin(), labels.end(), Label{1});
  do {
    std::vector<Sum> sums(g.order(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      sums[*g.IndexOf(g.edges()[k].a)] += labels[k];
      sums[*g.IndexOf(g.edges()[k].b)] += labels[k];
    }
    if (std::set<Sum>(sums.begin(), sums.end()).size() == sums.size()) return true;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return false;
}

Outcome SearchOracle() {
  Outcome out;
  const auto start = Clock::now();
  const SearchConfig config;
  auto check = [&](const std::string& name, const Graph& g, bool expect_found) {
    const SearchResult r = SearchAntimagic(g, config);
    const bool found = r.verdict == SearchVerdict::kFound;
    if (found != expect_found) out.Fail(name + " verdict " + std::string(ToString(r.verdict)));
    if (r.labeling && !VerifyAntimagic(g, *r.labeling).antimagic) {
      out.Fail(name + " returned an invalid labeling");
    }
    return found;
  };
  check("P2", BuildPath(2), false);
  check("P3", BuildPath(3), true);
  for (int k = 3; k <= 5; ++k) check("C" + std::to_string(k), BuildCycle(k), true);
  check("K4", BuildComplete(4), true);
  // K_{1,1} is P_2 itself.
  check("K1,1", BuildStar(1), false);
  for (int n = 2; n <= 5; ++n) check("K1," + std::to_string(n), BuildStar(n), true);

  // Every graph on u1..u5 with 1 to 6 edges, isolated vertices dropped.
  std::vector<Edge> all;
  for (int x = 1; x <= 5; ++x) {
    for (int y = x + 1; y <= 5; ++y) {
      all.push_back(Edge::Make(VertexId::Base(x), VertexId::Base(y)));
    }
  }
  int compared = 0;
  for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    std::vector<Edge> edges;
    std::set<VertexId> used;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask & (1u << k)) {
        edges.push_back(all[k]);
        used.insert(all[k].a);
        used.insert(all[k].b);
      }
    }
    const Graph g(std::vector<VertexId>(used.begin(), used.end()), edges);
    check("mask " + std::to_string(mask), g, NaiveAntimagic(g));
    ++compared;
  }
  const double t = Seconds(start);
  if (t >= kSearchLimit) out.Fail("took " + std::to_string(t) + " s");
  if (out.ok) {
    out.detail = "named graphs correct, " + std::to_string(compared) +
                 " graphs with q <= 6 match naive enumeration in " +
                 std::to_string(t) + " s (limit 30 s)";
  }
  return out;
}

std::string Grid(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome Determinism() {
  Outcome out;
  std::size_t bytes = 0;
  for (const char* family : {"wheel", "helm", "flower"}) {
    const std::vector<std::string> args = {"grid-report", "--family", family,
                                           "--m", "3..8", "--n", "1..4"};
    std::vector<std::string> parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "4"});
    const std::string a = Grid(args), b = Grid(args), c = Grid(parallel);
    if (a.rfind("0\n", 0) != 0) out.Fail(std::string(family) + " grid-report failed");
    if (a != b || a != c) out.Fail(std::string(family) + " output differs between runs");
    bytes += a.size();
  }
  if (out.ok) {
    out.detail = "3 grid reports byte-identical across reruns and --jobs 4 (" +
                 std::to_string(bytes) + " bytes each run)";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"structural laws", StructuralLaws},
      {"weichsel agreement", WeichselAgreement},
      {"wheel errata grid", WheelGrid},
      {"wheel as-printed detection", PrintedWheelDetection},
      {"helm/flower single leaf", SingleLeaf},
      {"helm/flower multi-leaf grid", MultiLeafGrid},
      {"search oracle", SearchOracle},
      {"determinism", Determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (k + 1) << " "
              << criteria[k].first << ": " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
