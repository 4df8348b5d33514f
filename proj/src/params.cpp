// SPDX-License-Identifier: Apache-2.0
#include "dupread/params.hpp"

#include <cstdlib>

namespace dupread {

void Params::validate() const {
  if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
  if (ell < 1) throw std::invalid_argument("window length ell must be >= 1");
  if (k < 1) throw std::invalid_argument("duplication length k must be >= 1");
  if (n < 1) throw std::invalid_argument("length n must be >= 1");
  if (t && *t < 0) throw std::invalid_argument("error budget t must be >= 0");
}

std::uint64_t default_size_guard() {
  if (const char* env = std::getenv("DUPREAD_SIZE_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

std::uint64_t checked_power(int q, long long n, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (long long i = 0; i < n; ++i) {
    if (total > guard / static_cast<std::uint64_t>(q)) {
      throw size_guard_error("state space " + std::to_string(q) + "^" +
                             std::to_string(n) + " exceeds the size guard of " +
                             std::to_string(guard) + " states");
    }
    total *= static_cast<std::uint64_t>(q);
  }
  if (total > guard) {
    throw size_guard_error("state space exceeds the size guard");
  }
  return total;
}

}  // namespace dupread
