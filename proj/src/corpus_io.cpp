#include "synthlm/corpus_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>

#include <nlohmann/json.hpp>

namespace synthlm {

namespace fs = std::filesystem;
using nlohmann::json;

json CorpusManifest::to_json() const {
  json j;
  j["format_version"] = format_version;
  if (!generator_spec_json.empty()) {
    j["generator_spec"] = json::parse(generator_spec_json);
  }
  j["master_seed"] = master_seed;
  j["num_sequences"] = num_sequences;
  j["content_size"] = content_size;
  j["token_count"] = token_count;
  if (!token_counts.empty()) j["token_counts"] = token_counts;
  return j;
}

CorpusManifest CorpusManifest::from_json(const json& j) {
  CorpusManifest m;
  m.format_version = j.value("format_version", 1);
  if (j.contains("generator_spec")) {
    m.generator_spec_json = j.at("generator_spec").dump();
  }
  m.master_seed = j.value("master_seed", std::uint64_t{0});
  m.num_sequences = j.value("num_sequences", std::uint64_t{0});
  m.content_size = j.value("content_size", 0);
  m.token_count = j.value("token_count", std::uint64_t{0});
  if (j.contains("token_counts")) {
    m.token_counts = j.at("token_counts").get<std::vector<std::int64_t>>();
  }
  return m;
}

std::string manifest_path_for(const std::string& corpus_path) {
  return corpus_path + ".manifest.json";
}

void write_manifest(const CorpusManifest& m, const std::string& corpus_path) {
  const std::string path = manifest_path_for(corpus_path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open manifest for writing: " + path);
  out << m.to_json().dump(2) << "\n";
  if (!out) throw Error("I/O failure writing manifest: " + path);
}

std::optional<CorpusManifest> read_manifest(const std::string& corpus_path) {
  const std::string path = manifest_path_for(corpus_path);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed manifest " + path + ": " + e.what());
  }
  return CorpusManifest::from_json(j);
}

CorpusReader::CorpusReader(const std::string& path,
                           std::optional<Vocabulary> vocab)
    : path_(path), in_(path, std::ios::binary), vocab_(vocab) {
  if (!in_) throw Error("cannot open corpus file: " + path);
}

bool CorpusReader::next(Sequence& out) {
  out.clear();
  if (!std::getline(in_, buf_)) return false;
  ++line_;
  const char* p = buf_.data();
  const char* end = p + buf_.size();
  // Strip a stray '\r' from files written on other platforms.
  if (end > p && end[-1] == '\r') --end;
  while (p < end) {
    while (p < end && *p == ' ') ++p;
    if (p >= end) break;
    TokenId id = 0;
    auto [next_p, ec] = std::from_chars(p, end, id);
    if (ec != std::errc{} || (next_p < end && *next_p != ' ')) {
      throw Error(path_ + ": parse error at line " + std::to_string(line_) +
                  ": malformed token '" +
                  std::string(p, next_p < end ? next_p + 1 : end) + "'");
    }
    if (vocab_ && !vocab_->is_valid(id)) {
      throw Error(path_ + ": parse error at line " + std::to_string(line_) +
                  ": token id " + std::to_string(id) +
                  " out of range for vocabulary of size " +
                  std::to_string(vocab_->total_size()));
    }
    out.push_back(id);
    p = next_p;
  }
  return true;
}

std::vector<Sequence> read_corpus(const std::string& path,
                                  std::optional<Vocabulary> vocab) {
  CorpusReader reader(path, vocab);
  std::vector<Sequence> result;
  Sequence seq;
  while (reader.next(seq)) result.push_back(seq);
  return result;
}

void for_each_sequence(const std::string& path,
                       const std::function<void(const Sequence&)>& fn,
                       std::optional<Vocabulary> vocab) {
  CorpusReader reader(path, vocab);
  Sequence seq;
  while (reader.next(seq)) fn(seq);
}

std::string format_sequence(const Sequence& seq) {
  std::string line;
  line.reserve(seq.size() * 4);
  char buf[16];
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) line.push_back(' ');
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), seq[i]);
    line.append(buf, p);
  }
  return line;
}

CorpusWriter::CorpusWriter(const std::string& path)
    : path_(path), tmp_path_(path + ".tmp"), out_(tmp_path_, std::ios::binary) {
  if (!out_) throw Error("cannot open corpus file for writing: " + tmp_path_);
}

CorpusWriter::~CorpusWriter() {
  if (!finished_) {
    out_.close();
    std::error_code ec;
    fs::remove(tmp_path_, ec);
  }
}

void CorpusWriter::write(const Sequence& seq) {
  write_line(format_sequence(seq), seq.size());
}

void CorpusWriter::write_line(const std::string& line,
                              std::uint64_t tokens_in_line) {
  out_ << line << '\n';
  if (!out_) throw Error("I/O failure writing corpus: " + tmp_path_);
  ++sequences_;
  tokens_ += tokens_in_line;
}

void CorpusWriter::finish(const CorpusManifest& manifest) {
  if (finished_) throw Error("CorpusWriter::finish called twice");
  if (manifest.num_sequences != sequences_ ||
      manifest.token_count != tokens_) {
    throw Error("manifest mismatch for " + path_ + ": manifest says " +
                std::to_string(manifest.num_sequences) + " sequences / " +
                std::to_string(manifest.token_count) + " tokens, stream has " +
                std::to_string(sequences_) + " / " + std::to_string(tokens_));
  }
  out_.flush();
  if (!out_) throw Error("I/O failure writing corpus: " + tmp_path_);
  out_.close();
  fs::rename(tmp_path_, path_);
  write_manifest(manifest, path_);
  finished_ = true;
}

void write_corpus(const std::vector<Sequence>& sequences,
                  const std::string& path, const CorpusManifest& manifest) {
  CorpusWriter writer(path);
  for (const auto& seq : sequences) writer.write(seq);
  writer.finish(manifest);
}

}  // namespace synthlm
