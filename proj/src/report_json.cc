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

#include "antimagic/report_json.h"

#include <string>

namespace antimagic {
namespace {

Json Edges(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(ToString(e));
  return out;
}

Json Counts(const std::map<std::string, std::size_t>& counts) {
  Json out = Json::object();
  for (const auto& [k, v] : counts) out[k] = v;
  return out;
}

Json Issues(const std::vector<CoverageIssue>& issues) {
  Json out = Json::array();
  for (const CoverageIssue& i : issues) out.push_back(ToJson(i));
  return out;
}

template <typename T>
Json Optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json ToJson(const VerificationReport& r) {
  Json out;
  out["antimagic"] = r.antimagic;
  out["total"] = r.total;
  out["bijective"] = r.bijective;
  out["unlabeled_edges"] = Edges(r.unlabeled_edges);
  out["extraneous_edges"] = Edges(r.extraneous_edges);
  out["missing_labels"] = r.missing_labels;
  Json dup = Json::array();
  for (const DuplicateLabel& d : r.duplicate_labels) {
    Json item;
    item["label"] = d.label;
    item["edges"] = Edges(d.edges);
    dup.push_back(item);
  }
  out["duplicate_labels"] = dup;
  out["out_of_range_labels"] = r.out_of_range_labels;
  Json coll = Json::array();
  for (const SumCollision& c : r.colliding_pairs) {
    Json item;
    item["u"] = ToString(c.u);
    item["v"] = ToString(c.v);
    item["sum"] = c.sum;
    coll.push_back(item);
  }
  out["colliding_pairs"] = coll;
  return out;
}

Json ToJson(const VertexSumProfile& sums) {
  Json out = Json::object();
  for (const auto& [v, s] : sums) out[ToString(v)] = s;
  return out;
}

Json ToJson(const CoverageIssue& issue) {
  Json out;
  out["kind"] = std::string(ToString(issue.kind));
  out["formula"] = issue.formula;
  out["cell"] = issue.cell;
  out["branches"] = issue.branches;
  out["detail"] = issue.detail;
  return out;
}

Json ToJson(const ConformanceReport& r) {
  Json out;
  out["family"] = std::string(ToString(r.family));
  out["m"] = r.m;
  out["n"] = r.n;
  out["variant"] = std::string(ToString(r.mode));
  out["function"] = r.function;
  out["case_class"] =
      r.case_class ? Json(std::string(ToString(*r.case_class))) : Json(nullptr);
  out["q"] = r.q;
  out["pass"] = r.pass;
  out["first_violation"] = r.first_violation;
  out["errata_applied"] = r.errata_applied;
  out["label_coverage"] = Issues(r.label_coverage);
  out["verification"] = ToJson(r.verification);
  out["handshake"] = r.handshake;
  out["handshake_q_q_plus_1"] = r.handshake_full;
  out["observed_center"] = Optional(r.observed_center);
  out["expected_center"] = Optional(r.expected_center);
  out["sums_compared"] = r.sums_compared;
  out["sums_unspecified"] = r.sums_unspecified;
  out["sums_match"] = r.sums_match;
  Json mism = Json::array();
  for (const SumMismatch& s : r.mismatches) {
    Json item;
    item["vertex"] = ToString(s.vertex);
    item["observed"] = s.observed;
    item["expected"] = s.expected;
    mism.push_back(item);
  }
  out["sum_mismatches"] = mism;
  out["expected_coverage"] = Issues(r.expected_coverage);
  out["degree_two_in_range"] = Optional(r.degree_two_in_range);
  out["branch_hits"] = Counts(r.branch_hits);
  out["expected_branch_hits"] = Counts(r.expected_branch_hits);
  out["references"] = Counts(r.references);
  return out;
}

Json ToJson(const SearchStats& s, bool with_time) {
  Json out;
  out["nodes"] = s.nodes;
  out["prunes"] = s.prunes;
  out["iterations"] = s.iterations;
  out["restarts"] = s.restarts;
  if (with_time) {
    out["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(s.wall_time).count();
  }
  return out;
}

Json ToJson(const SearchResult& r, const Graph& g, bool with_time) {
  Json out;
  out["verdict"] = std::string(ToString(r.verdict));
  if (r.labeling) {
    Json labels = Json::array();
    for (const Edge& e : g.edges()) {
      Json item;
      item["edge"] = ToString(e);
      item["label"] = *r.labeling->Find(e);
      labels.push_back(item);
    }
    out["labeling"] = labels;
    out["verification"] = ToJson(VerifyAntimagic(g, *r.labeling));
  } else {
    out["labeling"] = nullptr;
  }
  out["stats"] = ToJson(r.stats, with_time);
  return out;
}

Json ToJson(const CrossValidation& c, bool with_time) {
  Json out;
  out["family"] = std::string(ToString(c.family));
  out["m"] = c.m;
  out["n"] = c.n;
  out["function"] = c.function;
  out["scheme_antimagic"] = c.scheme_antimagic;
  out["scheme_evidence"] = c.scheme_evidence;
  out["search_verdict"] = std::string(ToString(c.search_verdict));
  out["search_antimagic"] = c.search_antimagic;
  out["search_stats"] = ToJson(c.search_stats, with_time);
  return out;
}

}  // namespace antimagic
