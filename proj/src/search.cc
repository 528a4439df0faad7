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

#include "antimagic/search.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "antimagic/conformance.h"
#include "antimagic/errors.h"

namespace antimagic {
namespace {

using Clock = std::chrono::steady_clock;

EdgeLabeling ToLabeling(const Graph& g, const std::vector<Label>& labels) {
  EdgeLabeling out(static_cast<Label>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) out.Assign(g.edges()[k], labels[k]);
  return out;
}

// Every returned labeling passes the verifier; anything else is a bug here.
EdgeLabeling Certified(const Graph& g, const std::vector<Label>& labels) {
  EdgeLabeling out = ToLabeling(g, labels);
  if (!VerifyAntimagic(g, out).antimagic) {
    throw std::logic_error("search produced a labeling the verifier rejects");
  }
  return out;
}

class Exhaustive {
 public:
  Exhaustive(const Graph& g, SearchStats& stats) : g_(g), stats_(stats) {
    const std::size_t q = g.size();
    endpoints_.resize(q);
    finalized_at_.resize(q);
    std::vector<std::size_t> last(g.order(), 0);
    std::vector<bool> touched(g.order(), false);
    for (std::size_t k = 0; k < q; ++k) {
      const Edge& e = g.edges()[k];
      endpoints_[k] = {*g.IndexOf(e.a), *g.IndexOf(e.b)};
      for (std::size_t v : {endpoints_[k].first, endpoints_[k].second}) {
        last[v] = k;
        touched[v] = true;
      }
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (touched[v]) finalized_at_[last[v]].push_back(v);
      else isolated_ += 1;
    }
    sums_.assign(g.order(), 0);
    labels_.assign(q, 0);
    used_.assign(q + 1, false);
  }

  std::optional<std::vector<Label>> Run() {
    // Two isolated vertices share the sum 0 whatever the labels are.
    if (isolated_ > 1) return std::nullopt;
    if (isolated_ == 1) final_sums_[0] = 1;
    if (Place(0)) return labels_;
    return std::nullopt;
  }

 private:
  bool Place(std::size_t k) {
    if (k == labels_.size()) return true;
    const auto [a, b] = endpoints_[k];
    for (Label l = 1; l <= static_cast<Label>(labels_.size()); ++l) {
      if (used_[l]) continue;
      ++stats_.nodes;
      used_[l] = true;
      labels_[k] = l;
      sums_[a] += l;
      sums_[b] += l;
      std::size_t added = 0;
      bool clash = false;
      for (std::size_t v : finalized_at_[k]) {
        if (final_sums_[sums_[v]]++ > 0) clash = true;
        ++added;
      }
      if (clash) {
        ++stats_.prunes;
      } else if (Place(k + 1)) {
        return true;
      }
      for (std::size_t t = 0; t < added; ++t) {
        const std::size_t v = finalized_at_[k][t];
        if (--final_sums_[sums_[v]] == 0) final_sums_.erase(sums_[v]);
      }
      sums_[a] -= l;
      sums_[b] -= l;
      used_[l] = false;
    }
    labels_[k] = 0;
    return false;
  }

  const Graph& g_;
  SearchStats& stats_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<std::vector<std::size_t>> finalized_at_;
  std::size_t isolated_ = 0;
  std::vector<Sum> sums_;
  std::vector<Label> labels_;
  std::vector<bool> used_;
  std::map<Sum, std::size_t> final_sums_;
};

class LocalSearch {
 public:
  LocalSearch(const Graph& g, const SearchConfig& config, SearchStats& stats)
      : g_(g), config_(config), stats_(stats), rng_(config.seed) {
    for (const Edge& e : g.edges()) {
      endpoints_.emplace_back(*g.IndexOf(e.a), *g.IndexOf(e.b));
    }
    labels_.resize(g.size());
    std::iota(labels_.begin(), labels_.end(), Label{1});
  }

  std::optional<std::vector<Label>> Run() {
    Reset();
    std::uint64_t plateau = 0;
    while (objective_ > 0) {
      if (stats_.iterations >= config_.max_iterations) return std::nullopt;
      ++stats_.iterations;
      std::int64_t best = 0;
      std::vector<std::pair<std::size_t, std::size_t>> moves;
      const std::size_t q = labels_.size();
      for (std::size_t x = 0; x < q; ++x) {
        for (std::size_t y = x + 1; y < q; ++y) {
          const std::int64_t d = SwapDelta(x, y);
          if (moves.empty() || d < best) {
            best = d;
            moves.assign(1, {x, y});
          } else if (d == best) {
            moves.emplace_back(x, y);
          }
        }
      }
      if (moves.empty()) return std::nullopt;  // q = 1 with a collision
      if (best == 0) {
        if (++plateau > config_.plateau_budget) {
          Restart();
          plateau = 0;
          continue;
        }
      } else if (best < 0) {
        plateau = 0;
      } else {
        Restart();
        plateau = 0;
        continue;
      }
      const auto [x, y] = moves[UniformBelow(rng_, moves.size())];
      Swap(x, y);
    }
    return labels_;
  }

 private:
  void Reset() {
    sums_.assign(g_.order(), 0);
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      sums_[endpoints_[k].first] += labels_[k];
      sums_[endpoints_[k].second] += labels_[k];
    }
    counts_.clear();
    objective_ = 0;
    for (Sum s : sums_) Add(s);
  }

  void Restart() {
    ++stats_.restarts;
    // Fisher-Yates with the documented uniform draw.
    for (std::size_t k = labels_.size(); k > 1; --k) {
      std::swap(labels_[k - 1], labels_[UniformBelow(rng_, k)]);
    }
    Reset();
  }

  void Add(Sum s) { objective_ += static_cast<std::int64_t>(counts_[s]++); }
  void Remove(Sum s) {
    auto it = counts_.find(s);
    objective_ -= static_cast<std::int64_t>(--it->second);
    if (it->second == 0) counts_.erase(it);
  }

  // Vertices whose sum changes when edges x and y swap labels.
  std::vector<std::pair<std::size_t, Sum>> Affected(std::size_t x,
                                                    std::size_t y) const {
    const Sum d = labels_[y] - labels_[x];
    std::vector<std::pair<std::size_t, Sum>> out;
    auto bump = [&](std::size_t v, Sum delta) {
      for (auto& [u, total] : out) {
        if (u == v) {
          total += delta;
          return;
        }
      }
      out.emplace_back(v, delta);
    };
    bump(endpoints_[x].first, d);
    bump(endpoints_[x].second, d);
    bump(endpoints_[y].first, -d);
    bump(endpoints_[y].second, -d);
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    return out;
  }

  std::int64_t SwapDelta(std::size_t x, std::size_t y) {
    const auto affected = Affected(x, y);
    const std::int64_t before = objective_;
    for (const auto& [v, d] : affected) Remove(sums_[v]);
    for (const auto& [v, d] : affected) Add(sums_[v] + d);
    const std::int64_t delta = objective_ - before;
    for (const auto& [v, d] : affected) Remove(sums_[v] + d);
    for (const auto& [v, d] : affected) Add(sums_[v]);
    return delta;
  }

  void Swap(std::size_t x, std::size_t y) {
    const auto affected = Affected(x, y);
    for (const auto& [v, d] : affected) Remove(sums_[v]);
    for (const auto& [v, d] : affected) {
      sums_[v] += d;
      Add(sums_[v]);
    }
    std::swap(labels_[x], labels_[y]);
  }

  const Graph& g_;
  const SearchConfig& config_;
  SearchStats& stats_;
  std::mt19937_64 rng_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<Label> labels_;
  std::vector<Sum> sums_;
  std::map<Sum, std::size_t> counts_;
  std::int64_t objective_ = 0;
};

}  // namespace

std::string_view ToString(SearchStrategy s) {
  return s == SearchStrategy::kExhaustive ? "exhaustive" : "local";
}

std::optional<SearchStrategy> ParseSearchStrategy(std::string_view text) {
  if (text == "exhaustive") return SearchStrategy::kExhaustive;
  if (text == "local") return SearchStrategy::kLocalSearch;
  return std::nullopt;
}

std::string_view ToString(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::kFound: return "found";
    case SearchVerdict::kNoneExists: return "none-exists";
    case SearchVerdict::kNotFound: return "not-found";
  }
  return "not-found";
}

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

SearchResult SearchAntimagic(const Graph& g, const SearchConfig& config) {
  if (g.size() == 0) throw InvalidArgument("search needs at least one edge");
  SearchResult result;
  const auto start = Clock::now();
  std::optional<std::vector<Label>> labels;
  if (config.strategy == SearchStrategy::kExhaustive) {
    if (g.size() > config.max_exhaustive_edges) {
      throw CapacityError("exhaustive search limited to " +
                          std::to_string(config.max_exhaustive_edges) +
                          " edges, graph has " + std::to_string(g.size()) +
                          "; use local search");
    }
    labels = Exhaustive(g, result.stats).Run();
    result.verdict = labels ? SearchVerdict::kFound : SearchVerdict::kNoneExists;
  } else {
    labels = LocalSearch(g, config, result.stats).Run();
    result.verdict = labels ? SearchVerdict::kFound : SearchVerdict::kNotFound;
  }
  if (labels) result.labeling = Certified(g, *labels);
  result.stats.wall_time =
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

CrossValidation CrossValidate(SchemeFamily family, int m, int n,
                              const SchemeVariant& variant,
                              const SearchConfig& config) {
  CrossValidation out;
  out.family = family;
  out.m = m;
  out.n = n;
  const Graph g = SchemeGraph(family, m, n);
  const SchemeOutcome scheme = EvaluateScheme(family, m, n, variant);
  out.function = scheme.function;
  if (!scheme.covered()) {
    out.scheme_evidence = scheme.coverage.front().Describe();
  } else {
    const VerificationReport r = VerifyAntimagic(g, scheme.labeling);
    out.scheme_antimagic = r.antimagic;
    if (!r.antimagic) {
      out.scheme_evidence = !r.duplicate_labels.empty()
                                ? "duplicate label " +
                                      std::to_string(r.duplicate_labels.front().label)
                                : "sum collision";
    }
  }
  SearchConfig cfg = config;
  if (cfg.strategy == SearchStrategy::kExhaustive &&
      g.size() > cfg.max_exhaustive_edges) {
    cfg.strategy = SearchStrategy::kLocalSearch;
  }
  const SearchResult found = SearchAntimagic(g, cfg);
  out.search_verdict = found.verdict;
  out.search_antimagic =
      found.labeling && VerifyAntimagic(g, *found.labeling).antimagic;
  out.search_stats = found.stats;
  return out;
}

}  // namespace antimagic
