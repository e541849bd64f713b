#include "synthlm/threading.hpp"

#include <cstdlib>
#include <string>

namespace synthlm {

int default_threads() {
  if (const char* env = std::getenv("SYNTHLM_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  return 1;
}

}  // namespace synthlm
