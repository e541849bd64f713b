#include "synthlm/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace synthlm {

using nlohmann::json;

namespace {
constexpr double kKlEps = 1e-10;
}

void TokenDistribution::validate(double tol) const {
  if (probs.empty()) throw Error("TokenDistribution: empty");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw Error("TokenDistribution: negative or NaN entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw Error("TokenDistribution: probabilities sum to " +
                std::to_string(sum) + ", expected 1");
  }
}

json TokenDistribution::to_json() const {
  json j;
  j["type"] = "token_distribution";
  j["size"] = probs.size();
  j["probs"] = probs;
  return j;
}

TokenDistribution TokenDistribution::from_json(const json& j) {
  TokenDistribution d;
  d.probs = j.at("probs").get<std::vector<double>>();
  return d;
}

void TokenDistribution::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open distribution file for writing: " + path);
  out << to_json().dump(2) << "\n";
  if (!out) throw Error("I/O failure writing distribution: " + path);
}

TokenDistribution TokenDistribution::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open distribution file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed distribution file " + path + ": " + e.what());
  }
  return from_json(j);
}

TokenDistribution zipf_distribution(int content_size, double exponent) {
  if (content_size < 1) throw Error("zipf_distribution: content_size < 1");
  if (exponent < 0.0) throw Error("zipf_distribution: exponent < 0");
  std::vector<double> p(static_cast<std::size_t>(content_size));
  double norm = 0.0;
  for (int k = 0; k < content_size; ++k) {
    p[static_cast<std::size_t>(k)] = std::pow(static_cast<double>(k + 1), -exponent);
    norm += p[static_cast<std::size_t>(k)];
  }
  for (double& x : p) x /= norm;
  return TokenDistribution(std::move(p));
}

TokenDistribution uniform_distribution(int content_size) {
  if (content_size < 1) throw Error("uniform_distribution: content_size < 1");
  return TokenDistribution(std::vector<double>(
      static_cast<std::size_t>(content_size), 1.0 / content_size));
}

double kl_divergence(const TokenDistribution& p, const TokenDistribution& q) {
  if (p.size() != q.size()) {
    throw Error("kl_divergence: size mismatch (" + std::to_string(p.size()) +
                " vs " + std::to_string(q.size()) + ")");
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.probs[i];
    if (pi <= 0.0) continue;
    const double qi = std::max(q.probs[i], kKlEps);
    kl += pi * std::log(pi / qi);
  }
  return std::max(kl, 0.0);
}

CategoricalSampler::CategoricalSampler(const std::vector<double>& probs) {
  values_.resize(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    values_[i] = static_cast<TokenId>(i);
  }
  build(probs);
}

CategoricalSampler::CategoricalSampler(std::vector<TokenId> values,
                                       const std::vector<double>& probs)
    : values_(std::move(values)) {
  if (values_.size() != probs.size()) {
    throw Error("CategoricalSampler: values/probs size mismatch");
  }
  build(probs);
}

void CategoricalSampler::build(const std::vector<double>& probs) {
  const std::size_t n = probs.size();
  if (n == 0) throw Error("CategoricalSampler: empty distribution");
  accept_.assign(n, 1.0);
  alias_.assign(n, 0);

  std::vector<double> scaled(n);
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw Error("CategoricalSampler: negative probability");
    sum += p;
  }
  if (sum <= 0.0) throw Error("CategoricalSampler: zero-mass distribution");
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = probs[i] * static_cast<double>(n) / sum;
  }

  std::vector<std::uint32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    large.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  // Leftovers are all (numerically) exactly 1.
  for (std::uint32_t i : small) accept_[i] = 1.0;
  for (std::uint32_t i : large) accept_[i] = 1.0;
}

TokenId CategoricalSampler::sample(Rng& rng) const {
  const std::size_t slot =
      static_cast<std::size_t>(rng.uniform_int(values_.size()));
  const double u = rng.uniform_real();
  const std::size_t idx = u < accept_[slot] ? slot : alias_[slot];
  return values_[idx];
}

}  // namespace synthlm
