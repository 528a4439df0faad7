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

#ifndef ANTIMAGIC_SEARCH_H_
#define ANTIMAGIC_SEARCH_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "antimagic/graph.h"
#include "antimagic/labeling.h"
#include "antimagic/scheme.h"

namespace antimagic {

enum class SearchStrategy : std::uint8_t { kExhaustive, kLocalSearch };
std::string_view ToString(SearchStrategy s);
std::optional<SearchStrategy> ParseSearchStrategy(std::string_view text);

struct SearchConfig {
  std::size_t max_exhaustive_edges = 10;
  std::uint64_t max_iterations = 200000;
  std::uint64_t seed = 1;
  SearchStrategy strategy = SearchStrategy::kExhaustive;
  // Sideways moves allowed before a local-search restart.
  std::uint64_t plateau_budget = 64;
};

enum class SearchVerdict : std::uint8_t {
  kFound,
  kNoneExists,  // exhaustive enumeration completed without a hit
  kNotFound,    // local search ran out of iterations; inconclusive
};
std::string_view ToString(SearchVerdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t iterations = 0;
  std::uint64_t restarts = 0;
  // Excluded from equality: the only nondeterministic field.
  std::chrono::nanoseconds wall_time{0};

  friend bool operator==(const SearchStats& l, const SearchStats& r) {
    return l.nodes == r.nodes && l.prunes == r.prunes &&
           l.iterations == r.iterations && l.restarts == r.restarts;
  }
};

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::kNotFound;
  std::optional<EdgeLabeling> labeling;
  SearchStats stats;
};

// Exhaustive: labels are placed on canonically ordered edges in
// lexicographic order, pruning as soon as two finalized vertex sums collide.
// Throws CapacityError if q exceeds max_exhaustive_edges.
// LocalSearch: steepest descent on the number of vertex pairs sharing a sum,
// over all label transpositions, with a plateau budget and seeded restarts.
// Throws InvalidArgument on an edgeless graph.
SearchResult SearchAntimagic(const Graph& g, const SearchConfig& config);

// Draws uniformly from [0, bound) by rejection; the mapping from engine output
// to value is fixed so results do not depend on the standard library.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

struct CrossValidation {
  SchemeFamily family = SchemeFamily::kWheel;
  int m = 0;
  int n = 0;
  std::string function;
  bool scheme_antimagic = false;
  std::string scheme_evidence;
  SearchVerdict search_verdict = SearchVerdict::kNotFound;
  bool search_antimagic = false;
  SearchStats search_stats;
};

// Runs the scheme and the searcher on the same product graph. An exhaustive
// request on a product above the edge limit runs local search instead.
CrossValidation CrossValidate(SchemeFamily family, int m, int n,
                              const SchemeVariant& variant,
                              const SearchConfig& config);

}  // namespace antimagic

#endif  // ANTIMAGIC_SEARCH_H_
