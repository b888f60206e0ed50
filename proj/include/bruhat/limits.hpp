#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bruhat {

// Enumeration caps shared by every operation that walks R(w), S_n or an
// interval. Exceeding a cap throws CapExceeded; nothing is truncated.
struct Limits {
  int max_n = 8;
  int max_length = 15;
  std::size_t max_words = 1'000'000;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_group_size(int n, const Limits& limits) {
  if (n > limits.max_n) {
    throw CapExceeded("group size " + std::to_string(n) +
                      " exceeds configured cap max_n=" +
                      std::to_string(limits.max_n));
  }
}

}  // namespace bruhat
