// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dupread/channel.hpp"

namespace dupread {

/// Subset of Z_m whose integer combinations with non-negative coefficients
/// summing to at most `order` all have distinct residues (the empty sum 0
/// included).
struct SidonSet {
  long long modulus = 0;
  std::vector<long long> elements;
  int order = 0;
};

/// Exhaustive check of the defining property, enumerating every multiset of
/// at most `order` elements.
bool verify_sidon(const std::vector<long long>& elements, long long modulus,
                  int order);
bool verify_sidon(const SidonSet& b);

/// Grows a set from candidates 1, 2, ... in Z_m, accepting an element iff
/// all new sums stay distinct; doubles m and restarts when Z_m is exhausted
/// before reaching `count` elements. The result always re-verifies.
SidonSet greedy_sidon(std::size_t count, int order, long long modulus_start);

/// Inverse map from a syndrome difference to the unique coefficient vector
/// (sparse, 0-based indices) with coefficient sum <= order that produces it.
class SyndromeTable {
 public:
  explicit SyndromeTable(const SidonSet& b);

  /// nullptr when `value` is not a reachable difference.
  const std::vector<std::pair<std::size_t, int>>* lookup(long long value) const;

  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<long long, std::vector<std::pair<std::size_t, int>>> table_;
};

/// Coset code for the bounded-error regime: all x whose sigma vector has dot
/// product g with the Sidon element vector, mod m.
struct SidonCode {
  Params params;
  SidonSet sidon;
  long long g = 0;
};

long long syndrome_of_sigma(const std::vector<int>& sigma, const SidonSet& b);
long long syndrome(const Sequence& x, const SidonSet& b, const Params& p);

/// Scans Z_q^n, returns the most populous syndrome value (smallest on ties)
/// and its count. The count is always >= ceil(q^n / m).
std::pair<long long, std::uint64_t> best_coset(
    const Params& p, const SidonSet& b,
    std::uint64_t guard = default_size_guard());

std::vector<Sequence> coset_members(const Params& p, const SidonSet& b,
                                    long long g,
                                    std::uint64_t guard = default_size_guard());

enum class DecodeStatus {
  ok,
  syndrome_miss,        ///< difference not in the table: > t errors or foreign word
  negative_sigma,       ///< corrected sigma went negative: inconsistent input
  invalid_read_vector,  ///< reconstruction is not a read vector
};

const char* to_string(DecodeStatus s);

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::ok;
  Sequence x;  ///< valid only when status == ok
};

/// Decodes a received vector hit by at most t duplications of length k:
/// derive, split off sigma, identify the inserted zero blocks from the
/// syndrome difference, undo them, integrate and invert the read map.
DecodeOutcome decode(const EntryVector& received, const SidonCode& code,
                     const SyndromeTable& table);

}  // namespace dupread
