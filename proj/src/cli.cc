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

#include "antimagic/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include "antimagic/conformance.h"
#include "antimagic/errors.h"
#include "antimagic/graph_io.h"
#include "antimagic/report_json.h"
#include "antimagic/search.h"

namespace antimagic::cli {
namespace {

struct Options {
  std::string family;
  int m = 0;
  int n = 0;
  std::string variant = "errata";
  std::string grid_variant = "both";
  std::string input;
  std::string graph;
  std::string out;
  bool base = false;
  bool expected = false;
  bool timing = false;
  std::string format = "dot";
  std::string m_range;
  std::string n_range;
  int jobs = 1;
  std::string strategy = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t max_iterations = 200000;
  std::size_t max_edges = 10;
  std::uint64_t plateau = 64;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw FormatError("cannot write " + o.out);
  file << text;
}

SchemeFamily RequireFamily(const Options& o) {
  if (o.family.empty()) throw FormatError("--family is required");
  auto f = ParseSchemeFamily(o.family);
  if (!f) throw FormatError("unknown family '" + o.family + "'");
  return *f;
}

void RequireMN(const Options& o, bool need_n = true) {
  if (o.m == 0) throw FormatError("--m is required");
  if (need_n && o.n == 0) throw FormatError("--n is required");
}

SchemeVariant RequireVariant(const std::string& text) {
  auto mode = ParseSchemeMode(text);
  if (!mode) throw FormatError("unknown variant '" + text + "'");
  return *mode == SchemeMode::kAsPrinted ? SchemeVariant::AsPrinted()
                                         : SchemeVariant::Errata();
}

Graph BaseGraph(const std::string& family, int m) {
  if (family == "path") return BuildPath(m);
  if (family == "cycle") return BuildCycle(m);
  if (family == "star") return BuildStar(m);
  if (family == "wheel") return BuildWheel(m);
  if (family == "helm") return BuildHelm(m);
  if (family == "flower") return BuildFlower(m);
  if (family == "complete") return BuildComplete(m);
  throw FormatError("unknown family '" + family + "'");
}

Graph ProductGraph(const Options& o) {
  const SchemeFamily f = RequireFamily(o);
  RequireMN(o);
  return SchemeGraph(f, o.m, o.n);
}

// Scheme labeling, or the labeled edge list given with --input.
LabeledGraph LabeledInput(const Options& o) {
  if (!o.input.empty()) return ReadLabeledEdgeList(ReadFile(o.input));
  const Graph g = ProductGraph(o);
  return {g, LabelScheme(RequireFamily(o), o.m, o.n, RequireVariant(o.variant))};
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

int Construct(const Options& o, std::ostream& out) {
  if (o.base) {
    if (o.family.empty()) throw FormatError("--family is required");
    RequireMN(o, false);
    Emit(o, WriteEdgeList(BaseGraph(o.family, o.m)), out);
    return kOk;
  }
  Emit(o, WriteEdgeList(ProductGraph(o)), out);
  return kOk;
}

int Label(const Options& o, std::ostream& out) {
  const SchemeFamily f = RequireFamily(o);
  RequireMN(o);
  Graph g = SchemeGraph(f, o.m, o.n);
  if (!o.graph.empty()) {
    Graph given = ReadEdgeList(ReadFile(o.graph));
    if (!std::ranges::equal(given.edges(), g.edges())) {
      throw FormatError(o.graph + " is not the " + o.family + " product for m=" +
                        std::to_string(o.m) + ", n=" + std::to_string(o.n));
    }
    g = std::move(given);
  }
  const EdgeLabeling l = LabelScheme(f, o.m, o.n, RequireVariant(o.variant));
  Emit(o, WriteLabeledEdgeList(g, l), out);
  return kOk;
}

int Verify(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw FormatError("--input is required");
  LabeledGraph lg = ReadLabeledEdgeList(ReadFile(o.input));
  const Graph g = o.graph.empty() ? lg.graph : ReadEdgeList(ReadFile(o.graph));
  const VerificationReport r = VerifyAntimagic(g, lg.labeling);
  Emit(o, Dump(ToJson(r)), out);
  return r.antimagic ? kOk : kVerificationFailed;
}

int Sums(const Options& o, std::ostream& out) {
  if (o.expected) {
    const SchemeFamily f = RequireFamily(o);
    RequireMN(o);
    const ExpectedProfile p =
        EvaluateExpectedSums(f, o.m, o.n, RequireVariant(o.variant));
    Json j;
    j["sums"] = ToJson(p.sums);
    Json unspecified = Json::array();
    for (const VertexId& v : p.unspecified) unspecified.push_back(ToString(v));
    j["unspecified"] = unspecified;
    Json coverage = Json::array();
    for (const CoverageIssue& c : p.coverage) coverage.push_back(ToJson(c));
    j["coverage"] = coverage;
    Emit(o, Dump(j), out);
    return p.coverage.empty() ? kOk : kCoverageOrCapacity;
  }
  const LabeledGraph lg = LabeledInput(o);
  Emit(o, Dump(ToJson(PartialVertexSums(lg.graph, lg.labeling))), out);
  return kOk;
}

SearchConfig Config(const Options& o) {
  SearchConfig c;
  auto s = ParseSearchStrategy(o.strategy);
  if (!s) throw FormatError("unknown strategy '" + o.strategy + "'");
  c.strategy = *s;
  c.seed = o.seed;
  c.max_iterations = o.max_iterations;
  c.max_exhaustive_edges = o.max_edges;
  c.plateau_budget = o.plateau;
  return c;
}

int Search(const Options& o, std::ostream& out) {
  const SearchConfig config = Config(o);
  if (!o.family.empty() && o.input.empty()) {
    const SchemeFamily f = RequireFamily(o);
    RequireMN(o);
    const CrossValidation c =
        CrossValidate(f, o.m, o.n, RequireVariant(o.variant), config);
    Emit(o, Dump(ToJson(c, o.timing)), out);
    return c.search_antimagic ? kOk : kVerificationFailed;
  }
  if (o.input.empty()) throw FormatError("--input or --family is required");
  const Graph g = ReadEdgeList(ReadFile(o.input));
  const SearchResult r = SearchAntimagic(g, config);
  Emit(o, Dump(ToJson(r, g, o.timing)), out);
  return r.verdict == SearchVerdict::kFound ? kOk : kVerificationFailed;
}

int GridReport(const Options& o, std::ostream& out) {
  const SchemeFamily f = RequireFamily(o);
  if (o.m_range.empty() || o.n_range.empty()) {
    throw FormatError("--m and --n ranges are required");
  }
  const auto [m_lo, m_hi] = ParseRange(o.m_range);
  const auto [n_lo, n_hi] = ParseRange(o.n_range);
  std::vector<SchemeVariant> variants;
  if (o.grid_variant == "both") {
    variants = {SchemeVariant::AsPrinted(), SchemeVariant::Errata()};
  } else {
    variants = {RequireVariant(o.grid_variant)};
  }
  for (int m = m_lo; m <= m_hi; ++m) CheckSchemeParameters(m, n_lo);
  CheckSchemeParameters(m_lo, n_hi);
  if (o.jobs < 1) throw FormatError("--jobs must be positive");

  struct Cell {
    int m, n;
    SchemeVariant variant;
  };
  std::vector<Cell> cells;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) {
      for (const SchemeVariant& v : variants) cells.push_back({m, n, v});
    }
  }
  std::vector<std::string> lines(cells.size());
  auto work = [&](std::size_t k) {
    lines[k] = ToJson(Conformance(f, cells[k].m, cells[k].n, cells[k].variant))
                   .dump() + "\n";
  };
  // Cells are independent; lines are assembled in canonical order.
  for (std::size_t start = 0; start < cells.size();
       start += static_cast<std::size_t>(o.jobs)) {
    std::vector<std::future<void>> batch;
    const std::size_t end =
        std::min(cells.size(), start + static_cast<std::size_t>(o.jobs));
    for (std::size_t k = start; k < end; ++k) {
      batch.push_back(std::async(o.jobs > 1 ? std::launch::async
                                            : std::launch::deferred,
                                 work, k));
    }
    for (auto& fut : batch) fut.get();
  }
  std::string text;
  for (const std::string& line : lines) text += line;
  Emit(o, text, out);
  return kOk;
}

int Export(const Options& o, std::ostream& out) {
  if (o.format != "dot") throw FormatError("unknown export format '" + o.format + "'");
  const LabeledGraph lg = LabeledInput(o);
  Emit(o, WriteDot(lg.graph, lg.labeling), out);
  return kOk;
}

void AddScheme(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "wheel, helm or flower");
  cmd->add_option("--m", o.m, "base parameter m");
  cmd->add_option("--n", o.n, "star parameter n");
  cmd->add_option("--variant", o.variant, "as-printed or errata");
}

}  // namespace

std::pair<int, int> ParseRange(const std::string& text) {
  auto parse = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw FormatError("bad range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse(text);
    return {v, v};
  }
  const int lo = parse(std::string_view(text).substr(0, dots));
  const int hi = parse(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw FormatError("empty range '" + text + "'");
  return {lo, hi};
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Antimagic labelings of wheel, helm and flower products with stars"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "emit the canonical edge list");
  AddScheme(construct, o);
  construct->add_flag("--base", o.base,
                      "build the base graph (path, cycle, star, wheel, helm, "
                      "flower, complete) with parameter m");
  construct->add_option("--out", o.out);

  auto* label = app.add_subcommand("label", "emit the scheme's labeled edge list");
  AddScheme(label, o);
  label->add_option("--graph", o.graph, "edge list that must match the product");
  label->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "verify a labeled edge list");
  verify->add_option("--input", o.input, "labeled edge list")->required();
  verify->add_option("--graph", o.graph, "edge list to verify against");
  verify->add_option("--out", o.out);

  auto* sums = app.add_subcommand("sums", "emit vertex sums");
  AddScheme(sums, o);
  sums->add_option("--input", o.input, "labeled edge list");
  sums->add_flag("--expected", o.expected, "closed-form sums instead of observed");
  sums->add_option("--out", o.out);

  auto* search = app.add_subcommand("search", "search for an antimagic labeling");
  AddScheme(search, o);
  search->add_option("--input", o.input, "edge list");
  search->add_option("--strategy", o.strategy, "exhaustive or local");
  search->add_option("--seed", o.seed);
  search->add_option("--max-iterations", o.max_iterations);
  search->add_option("--max-edges", o.max_edges, "exhaustive edge limit");
  search->add_option("--plateau", o.plateau, "sideways moves before restart");
  search->add_flag("--timing", o.timing, "include wall time");
  search->add_option("--out", o.out);

  auto* grid = app.add_subcommand("grid-report", "conformance over an m x n grid");
  grid->add_option("--family", o.family)->required();
  grid->add_option("--m", o.m_range, "range a..b")->required();
  grid->add_option("--n", o.n_range, "range a..b")->required();
  grid->add_option("--variant", o.grid_variant, "as-printed, errata or both");
  grid->add_option("--jobs", o.jobs);
  grid->add_option("--out", o.out);

  auto* exp = app.add_subcommand("export", "render a labeled graph");
  AddScheme(exp, o);
  exp->add_option("--input", o.input, "labeled edge list");
  exp->add_option("--format", o.format, "dot");
  exp->add_option("--out", o.out);

  std::vector<std::string> argv_store{"antimagic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) return Construct(o, out);
    if (label->parsed()) return Label(o, out);
    if (verify->parsed()) return Verify(o, out);
    if (sums->parsed()) return Sums(o, out);
    if (search->parsed()) return Search(o, out);
    if (grid->parsed()) return GridReport(o, out);
    if (exp->parsed()) return Export(o, out);
  } catch (const CoverageError& e) {
    err << "coverage error: " << e.what() << "\n";
    return kCoverageOrCapacity;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCoverageOrCapacity;
  } catch (const TotalityError& e) {
    err << "totality error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace antimagic::cli
