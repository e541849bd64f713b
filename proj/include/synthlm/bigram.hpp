#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "synthlm/common.hpp"
#include "synthlm/distribution.hpp"
#include "synthlm/rng.hpp"

namespace synthlm {

/// Successor distribution for one context token, stored sparse over the
/// observed successors. Entries are kept sorted by successor id.
struct BigramRow {
  std::vector<TokenId> next;
  std::vector<double> prob;

  double prob_sum() const;
};

/// Per-context successor statistics plus the two fallback distributions:
/// `start` for the first token of a sequence and `backoff` (the uni-gram
/// estimate of the same corpus) for contexts with no stored row.
struct BigramModel {
  int content_size = 0;
  TokenDistribution start;
  TokenDistribution backoff;
  std::unordered_map<TokenId, BigramRow> rows;

  const BigramRow* row(TokenId context) const;
  /// Throws unless every row sums to 1 within tol and start/backoff are
  /// valid distributions.
  void validate(double tol = 1e-9) const;

  nlohmann::json to_json() const;
  static BigramModel from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static BigramModel load(const std::string& path);
};

/// Prebuilt alias tables for every row plus start/backoff; O(1) per draw.
class BigramSampler {
 public:
  explicit BigramSampler(const BigramModel& model);

  TokenId sample_start(Rng& rng) const { return start_->sample(rng); }
  /// Draws from the context row, backing off to the uni-gram distribution
  /// when the context was never observed.
  TokenId sample_next(TokenId context, Rng& rng) const;

 private:
  std::unique_ptr<CategoricalSampler> start_;
  std::unique_ptr<CategoricalSampler> backoff_;
  std::unordered_map<TokenId, CategoricalSampler> rows_;
};

}  // namespace synthlm
