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

#ifndef ANTIMAGIC_REPORT_JSON_H_
#define ANTIMAGIC_REPORT_JSON_H_

#include <json.hpp>

#include "antimagic/conformance.h"
#include "antimagic/labeling.h"
#include "antimagic/search.h"

namespace antimagic {

// Field order is fixed by insertion so serialized reports diff cleanly.
using Json = nlohmann::ordered_json;

Json ToJson(const VerificationReport& report);
Json ToJson(const VertexSumProfile& sums);
Json ToJson(const CoverageIssue& issue);
Json ToJson(const ConformanceReport& report);
// Wall time is included only when requested; it is the one field that
// differs between identical runs.
Json ToJson(const SearchStats& stats, bool with_time);
Json ToJson(const SearchResult& result, const Graph& g, bool with_time);
Json ToJson(const CrossValidation& record, bool with_time);

}  // namespace antimagic

#endif  // ANTIMAGIC_REPORT_JSON_H_
