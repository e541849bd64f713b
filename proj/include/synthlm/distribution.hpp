#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "synthlm/common.hpp"
#include "synthlm/rng.hpp"

namespace synthlm {

/// Probability per token id, indexed by id. Target distributions are
/// defined over content ids; model predictive distributions cover the full
/// vocabulary including specials.
struct TokenDistribution {
  std::vector<double> probs;

  TokenDistribution() = default;
  explicit TokenDistribution(std::vector<double> p) : probs(std::move(p)) {}

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }

  /// Throws unless entries are >= 0 and sum to 1 within `tol`.
  void validate(double tol = 1e-9) const;

  nlohmann::json to_json() const;
  static TokenDistribution from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static TokenDistribution load(const std::string& path);
};

/// p(k) proportional to (k+1)^-s over content ids. s = 0 is the uniform
/// limit.
TokenDistribution zipf_distribution(int content_size, double exponent);

TokenDistribution uniform_distribution(int content_size);

/// KL(p || q) in nats. Zero-probability entries of q are floored at
/// eps = 1e-10 so the sum is always finite; the result is clamped at 0.
double kl_divergence(const TokenDistribution& p, const TokenDistribution& q);

/// Walker alias table: O(n) build, O(1) per draw. Supports a sparse value
/// set so bigram rows can sample without densifying.
class CategoricalSampler {
 public:
  /// Dense: value i has probability probs[i].
  explicit CategoricalSampler(const std::vector<double>& probs);
  /// Sparse: values[i] has probability probs[i]. probs must sum to 1.
  CategoricalSampler(std::vector<TokenId> values,
                     const std::vector<double>& probs);

  TokenId sample(Rng& rng) const;
  std::size_t support_size() const { return values_.size(); }

 private:
  void build(const std::vector<double>& probs);

  std::vector<TokenId> values_;
  std::vector<double> accept_;       // probability of keeping the slot
  std::vector<std::uint32_t> alias_;
};

}  // namespace synthlm
