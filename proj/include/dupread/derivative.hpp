// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dupread/composition.hpp"

namespace dupread {

/// Signed composition difference, one entry of a derivative vector.
using DeltaEntry = std::vector<int>;
using DeltaVector = std::vector<DeltaEntry>;

/// Entry-wise k-step difference y_i - y_{i-k}, with y_j = 0 for j out of
/// range. Output length equals input length. Works on read vectors and on
/// derivative vectors alike.
DeltaVector delta_k(const std::vector<std::vector<int>>& y, int k);

/// Inverse of delta_k: out_i = d_i + out_{i-k}.
DeltaVector delta_k_inverse(const DeltaVector& d, int k);

bool is_zero_entry(const DeltaEntry& e);

/// Zero-run decomposition of a derivative vector.
///
/// Writing y = (0^{m_0}, y_1, 0^{m_1}, ..., y_s, 0^{m_s}) with all y_i
/// nonzero, `mu` keeps each run reduced to m_i mod k and `sigma` holds the
/// quotients floor(m_i / k), one per gap (s + 1 in total). recompose() is the
/// exact inverse.
struct Decomposition {
  DeltaVector mu;
  std::vector<int> sigma;
};

Decomposition decompose(const DeltaVector& y, int k);

/// Re-inserts k * sigma[j] zeros into gap j of mu. `q` is only consulted to
/// materialize zero entries when mu itself is empty. Throws
/// std::invalid_argument when |sigma| != (nonzero entries of mu) + 1.
DeltaVector recompose(const DeltaVector& mu, const std::vector<int>& sigma,
                      int k, int q);

/// The duplication-invariant part of x: mu_k(delta_k(read_vector(x))).
DeltaVector nucleus(const Sequence& x, int q, int ell, int k);

/// L1 norm of the sigma part of x's derivative: the number of removable
/// k-zero blocks. At most floor((n + ell - 1) / k).
int depth(const Sequence& x, int q, int ell, int k);

/// Canonical byte encoding (length-prefixed, one byte per coordinate) used
/// for hashing, deduplication, and class identity.
std::string canonical_key(const std::vector<std::vector<int>>& v);

}  // namespace dupread
