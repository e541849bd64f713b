#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "synthlm/common.hpp"

namespace synthlm {

enum class GeneratorKind {
  kUniform,
  kUnigram,
  kBigram,
  kFlatParens,
  kNestingParens,
  kShuffleN,
};

std::string kind_name(GeneratorKind kind);
GeneratorKind kind_from_name(const std::string& name);

/// Everything needed to regenerate a corpus byte-for-byte: the grammar, its
/// parameters, and the master seed. Serialized into the corpus manifest.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniform;
  int content_size = 64;
  int min_len = 100;
  int max_len = 120;
  std::uint64_t num_sequences = 0;
  std::uint64_t master_seed = 0;

  // FlatParens: inclusive token span limit of a depending pair. A value
  // >= max_len selects the unconstrained duplicate-and-shuffle mode.
  int max_span = 128;
  // NestingParens: probability of pushing at an unforced step.
  double push_prob = 0.4;
  // ShuffleN: block size.
  int block_size = 4;

  // Target distribution for Unigram / FlatParens / NestingParens sampling;
  // empty means Zipf(zipf_exponent) over the content ids.
  std::string dist_file;
  // Target model for Bigram generation; required for that kind.
  std::string bigram_file;
  double zipf_exponent = 1.1;

  bool is_parens() const {
    return kind == GeneratorKind::kFlatParens ||
           kind == GeneratorKind::kNestingParens;
  }

  void validate() const;

  nlohmann::json to_json() const;
  static GeneratorSpec from_json(const nlohmann::json& j);
  std::string to_json_string() const;
  static GeneratorSpec from_json_string(const std::string& s);
};

}  // namespace synthlm
