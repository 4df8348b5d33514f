// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dupread/channel.hpp"

namespace dupread::fixtures {

// The running quaternary example used across the test suites.
inline Sequence quaternary_x() { return {1, 2, 0, 1, 3, 1, 2, 2, 0, 0}; }

// Its window-2 composition read vector.
inline EntryVector quaternary_read() {
  return {{0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0},
          {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 2, 0},
          {1, 0, 1, 0}, {2, 0, 0, 0}, {1, 0, 0, 0}};
}

// Same vector after a length-3 duplication following a length-5 prefix.
inline EntryVector quaternary_read_duplicated() {
  return {{0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0},
          {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 2, 0},
          {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 2, 0}, {1, 0, 1, 0},
          {2, 0, 0, 0}, {1, 0, 0, 0}};
}

// 3-step derivative of the clean read vector; no zero entries.
inline EntryVector quaternary_derivative() {
  return {{0, 1, 0, 0},   {0, 1, 1, 0},  {1, 0, 1, 0},  {1, 0, 0, 0},
          {0, 0, -1, 1},  {-1, 1, -1, 1}, {-1, 0, 1, 0}, {0, -1, 2, -1},
          {1, -1, 1, -1}, {2, -1, -1, 0}, {1, 0, -2, 0}};
}

// Alternating binary sequence whose derivative carries a 3-zero block.
inline Sequence alternating_binary() { return {0, 1, 0, 1, 0, 1, 0}; }

inline EntryVector alternating_derivative() {
  return {{1, 0}, {1, 1}, {1, 1}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, -1}};
}

}  // namespace dupread::fixtures
