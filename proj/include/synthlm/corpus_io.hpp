#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "synthlm/common.hpp"
#include "synthlm/vocab.hpp"

namespace synthlm {

/// Provenance sidecar written next to every generated corpus as
/// "<corpus>.manifest.json". generator_spec is kept as raw JSON here so the
/// core layer does not depend on the generator module.
struct CorpusManifest {
  std::string generator_spec_json;  // serialized GeneratorSpec ("" if unknown)
  std::uint64_t master_seed = 0;
  std::uint64_t num_sequences = 0;
  int content_size = 0;
  std::uint64_t token_count = 0;
  int format_version = 1;
  // Per-content-id occurrence counts; empty when not recorded. Needed by
  // the frequency_rank remap strategy.
  std::vector<std::int64_t> token_counts;

  nlohmann::json to_json() const;
  static CorpusManifest from_json(const nlohmann::json& j);
};

std::string manifest_path_for(const std::string& corpus_path);
void write_manifest(const CorpusManifest& m, const std::string& corpus_path);
std::optional<CorpusManifest> read_manifest(const std::string& corpus_path);

/// Streaming reader over the corpus text format: one sequence per line,
/// space-separated base-10 token ids. Malformed content throws Error with
/// the 1-based line number. If a vocabulary is given, ids are range-checked.
class CorpusReader {
 public:
  explicit CorpusReader(const std::string& path,
                        std::optional<Vocabulary> vocab = std::nullopt);

  /// Fills `out` with the next sequence; returns false at end of file.
  bool next(Sequence& out);

  std::uint64_t line_number() const { return line_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ifstream in_;
  std::optional<Vocabulary> vocab_;
  std::uint64_t line_ = 0;
  std::string buf_;
};

/// Reads a whole corpus into memory. Desk-scale corpora are small; use
/// CorpusReader directly for the 10M-token runs.
std::vector<Sequence> read_corpus(const std::string& path,
                                  std::optional<Vocabulary> vocab = std::nullopt);

/// Streaming writer. Writes to "<path>.tmp" and renames on finish() so a
/// failed run never leaves a half-written corpus behind.
class CorpusWriter {
 public:
  explicit CorpusWriter(const std::string& path);
  ~CorpusWriter();

  void write(const Sequence& seq);
  /// Writes a preformatted line (tokens already space-joined, no newline).
  void write_line(const std::string& line, std::uint64_t tokens_in_line);

  /// Validates the manifest against what was streamed, then commits the
  /// corpus file and the manifest sidecar. Throws (and removes the temp
  /// file) on count mismatch.
  void finish(const CorpusManifest& manifest);

  std::uint64_t sequences_written() const { return sequences_; }
  std::uint64_t tokens_written() const { return tokens_; }

 private:
  std::string path_;
  std::string tmp_path_;
  std::ofstream out_;
  std::uint64_t sequences_ = 0;
  std::uint64_t tokens_ = 0;
  bool finished_ = false;
};

void write_corpus(const std::vector<Sequence>& sequences,
                  const std::string& path, const CorpusManifest& manifest);

/// Single-space-joined decimal ids, no trailing space, no newline.
std::string format_sequence(const Sequence& seq);

/// Applies `fn` to every sequence in file order. Convenience for folds.
void for_each_sequence(const std::string& path,
                       const std::function<void(const Sequence&)>& fn,
                       std::optional<Vocabulary> vocab = std::nullopt);

}  // namespace synthlm
