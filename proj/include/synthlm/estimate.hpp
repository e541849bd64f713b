#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synthlm/bigram.hpp"
#include "synthlm/common.hpp"
#include "synthlm/distribution.hpp"
#include "synthlm/vocab.hpp"

namespace synthlm {

/// Raw occurrence counts used by estimation, validation and the
/// frequency_rank remap.
struct UnigramCounts {
  std::vector<std::int64_t> counts;  // indexed by content id
  std::int64_t total = 0;

  void add(const Sequence& seq);
  TokenDistribution to_distribution() const;
};

/// Adjacent-pair counts within sequences (no cross-sequence pairs), stored
/// as packed (context, next) keys so 10M-token corpora fit comfortably.
struct BigramCounts {
  std::vector<std::uint64_t> pairs;       // (ctx << 32) | next, unsorted
  std::vector<std::int64_t> first_token;  // counts of sequence-initial tokens
  UnigramCounts unigram;

  explicit BigramCounts(int content_size);
  void add(const Sequence& seq);
  BigramModel to_model() const;
};

TokenDistribution estimate_unigram(const std::vector<Sequence>& corpus,
                                   const Vocabulary& vocab);
TokenDistribution estimate_unigram_file(const std::string& path,
                                        const Vocabulary& vocab);
UnigramCounts count_unigrams_file(const std::string& path,
                                  const Vocabulary& vocab);

BigramModel estimate_bigram(const std::vector<Sequence>& corpus,
                            const Vocabulary& vocab);
BigramModel estimate_bigram_file(const std::string& path,
                                 const Vocabulary& vocab);

}  // namespace synthlm
