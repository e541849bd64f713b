#include "synthlm/bigram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace synthlm {

using nlohmann::json;

double BigramRow::prob_sum() const {
  double s = 0.0;
  for (double p : prob) s += p;
  return s;
}

const BigramRow* BigramModel::row(TokenId context) const {
  auto it = rows.find(context);
  return it == rows.end() ? nullptr : &it->second;
}

void BigramModel::validate(double tol) const {
  start.validate(tol);
  backoff.validate(tol);
  for (const auto& [ctx, row] : rows) {
    if (row.next.size() != row.prob.size() || row.next.empty()) {
      throw Error("BigramModel: malformed row for context " +
                  std::to_string(ctx));
    }
    if (std::abs(row.prob_sum() - 1.0) > tol) {
      throw Error("BigramModel: row for context " + std::to_string(ctx) +
                  " sums to " + std::to_string(row.prob_sum()));
    }
  }
}

json BigramModel::to_json() const {
  json j;
  j["type"] = "bigram_model";
  j["content_size"] = content_size;
  j["start"] = start.probs;
  j["backoff"] = backoff.probs;
  json rows_json = json::object();
  // Deterministic file bytes: emit rows in ascending context order.
  std::vector<TokenId> contexts;
  contexts.reserve(rows.size());
  for (const auto& [ctx, _] : rows) contexts.push_back(ctx);
  std::sort(contexts.begin(), contexts.end());
  for (TokenId ctx : contexts) {
    const BigramRow& row = rows.at(ctx);
    json entries = json::array();
    for (std::size_t i = 0; i < row.next.size(); ++i) {
      entries.push_back({row.next[i], row.prob[i]});
    }
    rows_json[std::to_string(ctx)] = std::move(entries);
  }
  j["rows"] = std::move(rows_json);
  return j;
}

BigramModel BigramModel::from_json(const json& j) {
  BigramModel m;
  m.content_size = j.at("content_size").get<int>();
  m.start.probs = j.at("start").get<std::vector<double>>();
  m.backoff.probs = j.at("backoff").get<std::vector<double>>();
  for (const auto& [key, entries] : j.at("rows").items()) {
    BigramRow row;
    for (const auto& e : entries) {
      row.next.push_back(e.at(0).get<TokenId>());
      row.prob.push_back(e.at(1).get<double>());
    }
    m.rows.emplace(static_cast<TokenId>(std::stol(key)), std::move(row));
  }
  return m;
}

void BigramModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open bigram file for writing: " + path);
  out << to_json().dump() << "\n";
  if (!out) throw Error("I/O failure writing bigram model: " + path);
}

BigramModel BigramModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open bigram file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed bigram file " + path + ": " + e.what());
  }
  return from_json(j);
}

BigramSampler::BigramSampler(const BigramModel& model) {
  start_ = std::make_unique<CategoricalSampler>(model.start.probs);
  backoff_ = std::make_unique<CategoricalSampler>(model.backoff.probs);
  rows_.reserve(model.rows.size());
  for (const auto& [ctx, row] : model.rows) {
    rows_.emplace(ctx, CategoricalSampler(row.next, row.prob));
  }
}

TokenId BigramSampler::sample_next(TokenId context, Rng& rng) const {
  auto it = rows_.find(context);
  if (it == rows_.end()) return backoff_->sample(rng);
  return it->second.sample(rng);
}

}  // namespace synthlm
