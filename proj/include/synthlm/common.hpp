#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace synthlm {

using TokenId = std::int32_t;
using Sequence = std::vector<TokenId>;

/// Error type thrown by all synthlm operations. The CLI maps these to
/// exit code 3 (runtime error) unless noted otherwise.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace synthlm
