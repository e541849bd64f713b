#include "synthlm/estimate.hpp"

#include <algorithm>

#include "synthlm/corpus_io.hpp"

namespace synthlm {

void UnigramCounts::add(const Sequence& seq) {
  for (TokenId id : seq) {
    if (id < 0 || static_cast<std::size_t>(id) >= counts.size()) {
      throw Error("unigram count: token id " + std::to_string(id) +
                  " outside content range");
    }
    ++counts[static_cast<std::size_t>(id)];
  }
  total += static_cast<std::int64_t>(seq.size());
}

TokenDistribution UnigramCounts::to_distribution() const {
  if (total == 0) throw Error("estimate_unigram: empty corpus");
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return TokenDistribution(std::move(p));
}

BigramCounts::BigramCounts(int content_size)
    : first_token(static_cast<std::size_t>(content_size), 0) {
  unigram.counts.assign(static_cast<std::size_t>(content_size), 0);
}

void BigramCounts::add(const Sequence& seq) {
  if (seq.empty()) return;
  unigram.add(seq);
  ++first_token[static_cast<std::size_t>(seq.front())];
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    pairs.push_back((static_cast<std::uint64_t>(static_cast<std::uint32_t>(seq[i])) << 32) |
                    static_cast<std::uint32_t>(seq[i + 1]));
  }
}

BigramModel BigramCounts::to_model() const {
  if (unigram.total == 0) throw Error("estimate_bigram: empty corpus");
  BigramModel model;
  model.content_size = static_cast<int>(unigram.counts.size());
  model.backoff = unigram.to_distribution();

  std::int64_t first_total = 0;
  for (std::int64_t c : first_token) first_total += c;
  std::vector<double> start(first_token.size());
  for (std::size_t i = 0; i < first_token.size(); ++i) {
    start[i] = static_cast<double>(first_token[i]) / static_cast<double>(first_total);
  }
  model.start = TokenDistribution(std::move(start));

  std::vector<std::uint64_t> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    const TokenId ctx = static_cast<TokenId>(sorted[i] >> 32);
    // Count per-context totals over the contiguous run sharing the context.
    std::size_t ctx_end = i;
    while (ctx_end < sorted.size() &&
           static_cast<TokenId>(sorted[ctx_end] >> 32) == ctx) {
      ++ctx_end;
    }
    const double ctx_total = static_cast<double>(ctx_end - i);
    BigramRow row;
    while (i < ctx_end) {
      const std::uint64_t key = sorted[i];
      std::size_t run_end = i;
      while (run_end < ctx_end && sorted[run_end] == key) ++run_end;
      row.next.push_back(static_cast<TokenId>(key & 0xFFFFFFFFULL));
      row.prob.push_back(static_cast<double>(run_end - i) / ctx_total);
      i = run_end;
    }
    model.rows.emplace(ctx, std::move(row));
  }
  return model;
}

TokenDistribution estimate_unigram(const std::vector<Sequence>& corpus,
                                   const Vocabulary& vocab) {
  UnigramCounts counts;
  counts.counts.assign(static_cast<std::size_t>(vocab.content_size()), 0);
  for (const auto& seq : corpus) counts.add(seq);
  return counts.to_distribution();
}

UnigramCounts count_unigrams_file(const std::string& path,
                                  const Vocabulary& vocab) {
  UnigramCounts counts;
  counts.counts.assign(static_cast<std::size_t>(vocab.content_size()), 0);
  for_each_sequence(path, [&](const Sequence& seq) { counts.add(seq); });
  return counts;
}

TokenDistribution estimate_unigram_file(const std::string& path,
                                        const Vocabulary& vocab) {
  return count_unigrams_file(path, vocab).to_distribution();
}

BigramModel estimate_bigram(const std::vector<Sequence>& corpus,
                            const Vocabulary& vocab) {
  BigramCounts counts(vocab.content_size());
  for (const auto& seq : corpus) counts.add(seq);
  return counts.to_model();
}

BigramModel estimate_bigram_file(const std::string& path,
                                 const Vocabulary& vocab) {
  BigramCounts counts(vocab.content_size());
  for_each_sequence(path, [&](const Sequence& seq) { counts.add(seq); });
  return counts.to_model();
}

}  // namespace synthlm
