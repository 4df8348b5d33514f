// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dupread/params.hpp"

namespace dupread {

using Symbol = int;
using Sequence = std::vector<Symbol>;

/// Window composition: counts[a] = multiplicity of symbol a; the count sum is
/// at most the window length.
using Composition = std::vector<int>;

/// Sliding-window composition vector of a sequence; entry i holds the
/// composition of the length-ell window ending at position i (windows at both
/// ends overlap the sequence only partially, giving the triangular ramp).
/// Length is n + ell - 1.
using ReadVector = std::vector<Composition>;

/// Count vector of the symbols of w. Additive over concatenation.
Composition composition(const Sequence& w, int q);

ReadVector read_vector(const Sequence& x, int q, int ell);

/// Recovers x from its composition read vector. Returns nullopt when z is not
/// the read vector of any sequence: wrong ramp totals, a step that is not a
/// single symbol exchange, or inconsistent trailing entries.
std::optional<Sequence> invert_read(const ReadVector& z, int q, int ell);

/// Removes the half-open index window [first, last).
Sequence remove_window(const Sequence& x, std::size_t first, std::size_t last);

/// True iff x[i + m] == x[i] for every valid i. Requires 1 <= m < |x|.
bool is_periodic(const Sequence& x, std::size_t m);

/// All compositions of windows of length <= ell, i.e. the read alphabet.
std::vector<Composition> composition_alphabet(int q, int ell);

/// Sequence at position `idx` in the lexicographic order of Z_q^n
/// (most significant symbol first).
Sequence sequence_at(std::uint64_t idx, int q, long long n);

/// In-place lexicographic successor; returns false after the last sequence.
bool next_sequence(Sequence& x, int q);

/// Lexicographic enumeration of Z_q^n.
template <class Fn>
void for_each_sequence(int q, long long n, Fn&& fn) {
  Sequence x(static_cast<std::size_t>(n), 0);
  do {
    fn(static_cast<const Sequence&>(x));
  } while (next_sequence(x, q));
}

}  // namespace dupread
