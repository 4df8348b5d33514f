// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dupread/derivative.hpp"

namespace dupread {

/// A vector over the read alphabet or its difference set; the common shape of
/// read vectors, received words and derivative vectors.
using EntryVector = std::vector<std::vector<int>>;

/// Tandem duplication: the `len` entries after a length-`pos` prefix are
/// repeated in place.
struct DuplicationEvent {
  std::size_t pos = 0;
  std::size_t len = 0;
};

EntryVector duplicate(const EntryVector& z, const DuplicationEvent& ev);

/// Exact set of vectors reachable by exactly t duplications of length k,
/// deduplicated, in breadth-first discovery order.
std::vector<EntryVector> descendants(const EntryVector& z, int k, int t);

/// Union of descendants over 0..t duplications.
std::vector<EntryVector> ball(const EntryVector& z, int k, int t);

struct ChannelDraw {
  EntryVector output;
  std::vector<DuplicationEvent> events;
};

/// Applies exactly t uniformly chosen valid duplications. Deterministic for a
/// fixed seed (positions are drawn by modulo reduction of a mt19937_64
/// stream, so the event list is platform independent).
ChannelDraw random_duplications(const EntryVector& z, int k, int t,
                                std::uint64_t seed);

/// When x and x' have equal nuclei, returns a vector lying in the unbounded
/// duplication balls of both read vectors (gap-wise sum of the two sigma
/// vectors, recomposed and integrated); otherwise nullopt.
std::optional<EntryVector> common_descendant(const Sequence& x,
                                             const Sequence& xp, int q,
                                             int ell, int k);

/// Whether the unbounded-radius duplication balls of the two read vectors
/// intersect; equivalent to nucleus equality.
bool balls_intersect(const Sequence& x, const Sequence& xp, int q, int ell,
                     int k);

}  // namespace dupread
