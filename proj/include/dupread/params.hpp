// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dupread {

/// Thrown when an exhaustive enumeration would exceed the configured state
/// budget (see default_size_guard()).
class size_guard_error : public std::runtime_error {
 public:
  explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Channel and code parameters.
///
/// `t` is the correctable-error budget of the bounded-error code; an empty
/// optional means the unbounded regime.
struct Params {
  int q = 2;               ///< alphabet size, >= 2
  int ell = 1;             ///< window length, >= 1
  int k = 1;               ///< duplication length, >= 1
  long long n = 1;         ///< message length, >= 1
  std::optional<int> t{};  ///< error budget; nullopt = unbounded

  void validate() const;  // throws std::invalid_argument
};

/// Enumeration budget: 2^24 states unless overridden by the
/// DUPREAD_SIZE_GUARD environment variable.
std::uint64_t default_size_guard();

/// q^n when it does not exceed `guard`; otherwise throws size_guard_error.
std::uint64_t checked_power(int q, long long n, std::uint64_t guard);

}  // namespace dupread
