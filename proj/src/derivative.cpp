// SPDX-License-Identifier: Apache-2.0
#include "dupread/derivative.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupread {

DeltaVector delta_k(const std::vector<std::vector<int>>& y, int k) {
  if (k < 1) throw std::invalid_argument("step k must be >= 1");
  DeltaVector out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = y[i];
    if (i >= static_cast<std::size_t>(k)) {
      const auto& prev = y[i - static_cast<std::size_t>(k)];
      if (prev.size() != out[i].size()) {
        throw std::invalid_argument("ragged entry vector");
      }
      for (std::size_t a = 0; a < prev.size(); ++a) out[i][a] -= prev[a];
    }
  }
  return out;
}

DeltaVector delta_k_inverse(const DeltaVector& d, int k) {
  if (k < 1) throw std::invalid_argument("step k must be >= 1");
  DeltaVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out[i] = d[i];
    if (i >= static_cast<std::size_t>(k)) {
      const auto& prev = out[i - static_cast<std::size_t>(k)];
      if (prev.size() != out[i].size()) {
        throw std::invalid_argument("ragged entry vector");
      }
      for (std::size_t a = 0; a < prev.size(); ++a) out[i][a] += prev[a];
    }
  }
  return out;
}

bool is_zero_entry(const DeltaEntry& e) {
  return std::all_of(e.begin(), e.end(), [](int c) { return c == 0; });
}

Decomposition decompose(const DeltaVector& y, int k) {
  if (k < 1) throw std::invalid_argument("step k must be >= 1");
  Decomposition out;
  const std::size_t q = y.empty() ? 0 : y[0].size();
  int run = 0;
  auto flush_run = [&] {
    out.sigma.push_back(run / k);
    for (int r = 0; r < run % k; ++r) {
      out.mu.emplace_back(q, 0);
    }
    run = 0;
  };
  for (const auto& e : y) {
    if (is_zero_entry(e)) {
      ++run;
    } else {
      flush_run();
      out.mu.push_back(e);
    }
  }
  flush_run();
  return out;
}

DeltaVector recompose(const DeltaVector& mu, const std::vector<int>& sigma,
                      int k, int q) {
  if (k < 1) throw std::invalid_argument("step k must be >= 1");
  std::size_t nonzero = 0;
  for (const auto& e : mu) {
    if (!is_zero_entry(e)) ++nonzero;
  }
  if (sigma.size() != nonzero + 1) {
    throw std::invalid_argument("sigma length " + std::to_string(sigma.size()) +
                                " does not match " + std::to_string(nonzero + 1) +
                                " gaps");
  }
  const std::size_t width = mu.empty() ? static_cast<std::size_t>(q) : mu[0].size();
  DeltaVector out;
  std::size_t gap = 0;
  auto emit_zeros = [&](long long count) {
    for (long long r = 0; r < count; ++r) out.emplace_back(width, 0);
  };
  emit_zeros(static_cast<long long>(sigma[gap]) * k);
  for (const auto& e : mu) {
    out.push_back(e);
    if (!is_zero_entry(e)) {
      ++gap;
      emit_zeros(static_cast<long long>(sigma[gap]) * k);
    }
  }
  return out;
}

DeltaVector nucleus(const Sequence& x, int q, int ell, int k) {
  return decompose(delta_k(read_vector(x, q, ell), k), k).mu;
}

int depth(const Sequence& x, int q, int ell, int k) {
  const auto sigma = decompose(delta_k(read_vector(x, q, ell), k), k).sigma;
  int total = 0;
  for (int s : sigma) total += s;
  return total;
}

std::string canonical_key(const std::vector<std::vector<int>>& v) {
  std::string key;
  key.reserve(4 + v.size() * (v.empty() ? 0 : v[0].size()));
  const std::uint32_t len = static_cast<std::uint32_t>(v.size());
  for (int b = 0; b < 4; ++b) {
    key.push_back(static_cast<char>((len >> (8 * b)) & 0xff));
  }
  for (const auto& e : v) {
    for (int c : e) {
      if (c < -128 || c > 127) {
        throw std::invalid_argument("entry magnitude too large for byte key");
      }
      key.push_back(static_cast<char>(c));
    }
  }
  return key;
}

}  // namespace dupread
