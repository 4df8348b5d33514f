// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dupread {

/// Extended-precision scalar for the rate engine. The distance of the
/// constrained-capacity root from q shrinks like q^-(order+1), far below
/// double resolution for large orders; public entry points return double,
/// computed from this type.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

/// f(x) = x^(order+2) - q x^(order+1) + q - 1, whose largest real root
/// governs the growth of zero-run-limited sequences.
Real rll_polynomial(const Real& x, int order, int q);

/// Largest real root of rll_polynomial, in (q - 1, q] for order >= 1 and
/// exactly q - 1 for order 0. Bisection on [q - 1 + 1e-9, q] followed by
/// Newton polish, all in extended precision.
Real lambda_root_mp(int order, int q);
double lambda_root(int order, int q);

Real log_q_lambda_mp(int order, int q);
double log_q_lambda(int order, int q);

/// Principal-branch Lambert W on (-1/e, 0], by Newton iteration.
Real lambert_w_mp(const Real& u);

/// Closed bracket for log_q lambda_{k+ell-2,q}:
///   1 - alpha (q-1) log_q e / q^(k+ell)  <=  log_q lambda  <=
///   1 - (q-1) log_q e / q^(k+ell)
/// with alpha = exp(-W(-(q-1)(k+ell)/q^(k+ell))). Throws std::domain_error
/// when the W argument falls at or below -1/e (cannot happen on the grids
/// this engine serves: q >= 2 with k + ell >= 4).
std::pair<Real, Real> alpha_envelope_mp(int k, int ell, int q);
std::pair<double, double> alpha_envelope(int k, int ell, int q);

/// Exact asymptotic rate for k = 1, ell >= 2: log_q(q - 1).
double rate_exact_k1(int q);

/// log_q lambda_{k+ell-2,q}; an upper bound in general and the exact rate
/// when ell divides k.
double rate_upper(int k, int ell, int q);

/// Local-lemma lower bound for k, ell >= 2. Empty when the alphabet is too
/// small for the bound's validity condition (checked in exact integer
/// arithmetic).
std::optional<double> rate_lower_lll(int k, int ell, int q);

/// 1 - (1/k) log_q(q / (q-1)); valid for every q >= 2.
double rate_lower_simple(int k, int q);

struct RateBounds {
  int k = 0;
  int ell = 0;
  int q = 0;
  double lower = 0;
  double upper = 0;
  std::optional<double> exact;  ///< present iff ell == 1, k == 1, or ell | k
  std::string method_lower;
  std::string method_upper;
};

/// One row per (k, ell): the exact rate where known, otherwise the best
/// applicable lower bound and the upper bound. Full precision is kept in the
/// fields; rounding to 6 decimals happens only at rendering.
std::vector<RateBounds> rate_table(const std::vector<int>& ks,
                                   const std::vector<int>& ells, int q);

}  // namespace dupread
