// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dupread/derivative.hpp"

namespace dupread {

using BigInt = boost::multiprecision::cpp_int;

/// Code for the unbounded-error regime: one representative per nucleus class
/// of Z_q^n. Representatives are the lexicographically smallest class
/// members, listed in lexicographic order.
struct NucleusClassCode {
  Params params;
  std::vector<Sequence> representatives;
  /// canonical nucleus key -> index into representatives
  std::unordered_map<std::string, std::size_t> class_index;
};

NucleusClassCode build_nucleus_code(const Params& p,
                                    std::uint64_t guard = default_size_guard());

/// canonical_key(nucleus(x, q, ell, k)) computed in a single streaming pass
/// with no intermediate vectors; the hot path of build_nucleus_code.
std::string nucleus_key(const Sequence& x, int q, int ell, int k);

/// (depth, class count) pairs in increasing depth order; counts sum to the
/// code size.
std::vector<std::pair<int, std::uint64_t>> depth_partition(
    const NucleusClassCode& code);

/// Start of the first k-periodic window of length 2k + ell - 1, if any
/// (0-based).
std::optional<std::size_t> first_periodic_window(const Sequence& x, int k,
                                                 int ell);

/// True iff x contains no k-periodic factor of length 2k + ell - 1.
bool is_fine(const Sequence& x, int k, int ell);

/// |F_{k,ell}(n)| by depth-first scan of Z_q^n with pruning at the first
/// periodic window.
std::uint64_t count_fine_bruteforce(int q, int k, int ell, int n,
                                    std::uint64_t guard = default_size_guard());

/// Number of q-ary length-m strings with no run of limit+1 zeros, by the
/// standard first-nonzero recurrence. Exact.
BigInt rll_count(int q, int limit, long long m);

/// |F_{k,ell}(n)| in closed form: q^k * rll_count(q, k+ell-2, n-k) for
/// n >= k, and q^n below that. The first k positions of the k-step
/// derivative of the plain sequence are unconstrained, which is why the run
/// restriction applies only to the final n - k derivative positions.
BigInt count_fine_fast(int q, int k, int ell, long long n);

/// Deletes the first k symbols of the first k-periodic window of length
/// 2k + ell - 1. Throws std::invalid_argument when x is fine.
Sequence del_step(const Sequence& x, int k, int ell);

/// Removes the k all-zero entries starting at `pos` (0-based). Throws
/// std::invalid_argument when the window is not all-zero.
DeltaVector rem_step(const DeltaVector& d, std::size_t pos, int k);

/// Fixed point of del_step: iterates until the sequence is fine.
Sequence del_star(const Sequence& x, int k, int ell);

/// Number of windows w of length 2k + ell - 1 over Z_q whose k consecutive
/// composition equalities hold, i.e. the contexts that put a k-zero block in
/// the derivative of the read vector.
std::uint64_t count_duplication_contexts(int q, int k, int ell,
                                         std::uint64_t guard = default_size_guard());

}  // namespace dupread
