#pragma once

#include <array>
#include <string>

#include "synthlm/common.hpp"

namespace synthlm {

/// Token space shared by the generators and the model: content ids
/// 0..content_size-1 plus five reserved special ids placed directly after
/// the content range, so generator output uses the plain integers
/// 0..content_size-1.
class Vocabulary {
 public:
  static constexpr int kNumSpecial = 5;

  explicit Vocabulary(int content_size) : content_size_(content_size) {
    if (content_size < 2) {
      throw Error("Vocabulary: content_size must be >= 2, got " +
                  std::to_string(content_size));
    }
  }

  int content_size() const { return content_size_; }
  int total_size() const { return content_size_ + kNumSpecial; }

  TokenId pad() const { return content_size_ + 0; }
  TokenId mask() const { return content_size_ + 1; }
  TokenId cls() const { return content_size_ + 2; }
  TokenId sep() const { return content_size_ + 3; }
  TokenId unk() const { return content_size_ + 4; }

  bool is_content(TokenId id) const { return id >= 0 && id < content_size_; }
  bool is_special(TokenId id) const {
    return id >= content_size_ && id < total_size();
  }
  bool is_valid(TokenId id) const { return id >= 0 && id < total_size(); }

  std::string special_name(TokenId id) const {
    static constexpr std::array<const char*, kNumSpecial> names = {
        "[PAD]", "[MASK]", "[CLS]", "[SEP]", "[UNK]"};
    if (!is_special(id)) throw Error("special_name: not a special id");
    return names[static_cast<std::size_t>(id - content_size_)];
  }

  bool operator==(const Vocabulary& other) const {
    return content_size_ == other.content_size_;
  }

 private:
  int content_size_;
};

}  // namespace synthlm
