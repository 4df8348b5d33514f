// SPDX-License-Identifier: Apache-2.0
#include "dupread/rates.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace dupread {

namespace {

using boost::multiprecision::cpp_int;

void check_root_args(int order, int q) {
  if (order < 0) throw std::invalid_argument("polynomial order must be >= 0");
  if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
}

Real powi(const Real& x, int e) { return boost::multiprecision::pow(x, e); }

cpp_int factorial(int v) {
  cpp_int f = 1;
  for (int i = 2; i <= v; ++i) f *= i;
  return f;
}

}  // namespace

Real rll_polynomial(const Real& x, int order, int q) {
  return powi(x, order + 2) - q * powi(x, order + 1) + (q - 1);
}

Real lambda_root_mp(int order, int q) {
  check_root_args(order, q);
  if (order == 0) {
    // x^2 - qx + q - 1 = (x - 1)(x - (q - 1)); the largest root is q - 1
    return Real(q - 1);
  }
  // f(q-1+eps) < 0 < f(q) = q - 1; the offset keeps the ever-present root
  // at x = 1 outside the bracket when q = 2
  Real lo = Real(q - 1) + Real(1) / 1000000000;
  Real hi = Real(q);
  for (int i = 0; i < 200; ++i) {
    const Real mid = (lo + hi) / 2;
    if (rll_polynomial(mid, order, q) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Real x = (lo + hi) / 2;
  for (int i = 0; i < 5; ++i) {
    const Real fx = rll_polynomial(x, order, q);
    const Real dfx = (order + 2) * powi(x, order + 1) - Real(q) * (order + 1) * powi(x, order);
    x -= fx / dfx;
    if (x < lo) x = lo;
    if (x > hi) x = hi;
  }
  return x;
}

double lambda_root(int order, int q) {
  return lambda_root_mp(order, q).convert_to<double>();
}

Real log_q_lambda_mp(int order, int q) {
  return log(lambda_root_mp(order, q)) / log(Real(q));
}

double log_q_lambda(int order, int q) {
  return log_q_lambda_mp(order, q).convert_to<double>();
}

Real lambert_w_mp(const Real& u) {
  if (u <= -exp(Real(-1))) {
    throw std::domain_error("lambert w argument at or below -1/e");
  }
  if (u > 0) throw std::domain_error("expected a non-positive argument");
  Real w = u;  // principal branch, |u| < 1/e: the series starts at u
  for (int i = 0; i < 200; ++i) {
    const Real ew = exp(w);
    const Real step = (w * ew - u) / (ew * (w + 1));
    w -= step;
    if (abs(step) <= abs(w) * std::numeric_limits<Real>::epsilon() * 4) break;
  }
  return w;
}

std::pair<Real, Real> alpha_envelope_mp(int k, int ell, int q) {
  if (q < 2 || k + ell < 3) throw std::invalid_argument("need q >= 2, k + ell >= 3");
  const Real qs = powi(Real(q), k + ell);
  const Real u = -Real(q - 1) * (k + ell) / qs;
  const Real alpha = exp(-lambert_w_mp(u));
  const Real base = Real(q - 1) / (qs * log(Real(q)));  // (q-1) log_q(e) / q^(k+ell)
  return {1 - alpha * base, 1 - base};
}

std::pair<double, double> alpha_envelope(int k, int ell, int q) {
  const auto [lo, hi] = alpha_envelope_mp(k, ell, q);
  return {lo.convert_to<double>(), hi.convert_to<double>()};
}

double rate_exact_k1(int q) {
  if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
  return std::log(static_cast<double>(q - 1)) / std::log(static_cast<double>(q));
}

double rate_upper(int k, int ell, int q) {
  if (k < 1 || ell < 1) throw std::invalid_argument("need k, ell >= 1");
  return log_q_lambda(k + ell - 2, q);
}

std::optional<double> rate_lower_lll(int k, int ell, int q) {
  if (k < 2 || ell < 2) throw std::invalid_argument("need k, ell >= 2");
  if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
  const long long span = 16LL * k + 8LL * ell - 16;
  const cpp_int numerator = factorial(std::min(k, ell)) * span;
  const int exponent = (ell <= k) ? (k + ell - 1) : (2 * k - 1);
  // validity: q^exponent >= numerator, i.e. q >= ceil(numerator^(1/exponent))
  if (boost::multiprecision::pow(cpp_int(q), exponent) < numerator) {
    return std::nullopt;
  }
  const Real ratio = Real(numerator) / powi(Real(q), exponent);
  const Real c = (1 - sqrt(1 - ratio)) / (8 * k + 4 * ell - 8);
  const Real rate = 1 + log(1 - c) / log(Real(q));
  return rate.convert_to<double>();
}

double rate_lower_simple(int k, int q) {
  if (k < 1 || q < 2) throw std::invalid_argument("need k >= 1 and q >= 2");
  return 1.0 - std::log(q / static_cast<double>(q - 1)) /
                   (k * std::log(static_cast<double>(q)));
}

std::vector<RateBounds> rate_table(const std::vector<int>& ks,
                                   const std::vector<int>& ells, int q) {
  std::vector<RateBounds> rows;
  rows.reserve(ks.size() * ells.size());
  for (int ell : ells) {
    for (int k : ks) {
      RateBounds row;
      row.k = k;
      row.ell = ell;
      row.q = q;
      if (ell == 1) {
        row.exact = log_q_lambda(k - 1, q);
        row.method_lower = row.method_upper = "exact-rll";
      } else if (k == 1) {
        row.exact = rate_exact_k1(q);
        row.method_lower = row.method_upper = "exact-k1";
      } else if (k % ell == 0) {
        row.exact = log_q_lambda(k + ell - 2, q);
        row.method_lower = row.method_upper = "exact-rll";
      }
      if (row.exact) {
        row.lower = row.upper = *row.exact;
      } else {
        row.upper = rate_upper(k, ell, q);
        row.method_upper = "rll";
        const auto lll = rate_lower_lll(k, ell, q);
        const double simple = rate_lower_simple(k, q);
        if (lll && *lll >= simple) {
          row.lower = *lll;
          row.method_lower = "lll";
        } else {
          row.lower = simple;
          row.method_lower = "simple";
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace dupread
