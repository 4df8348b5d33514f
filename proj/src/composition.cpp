// SPDX-License-Identifier: Apache-2.0
#include "dupread/composition.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupread {

namespace {

void check_symbol(Symbol s, int q) {
  if (s < 0 || s >= q) {
    throw std::invalid_argument("symbol " + std::to_string(s) +
                                " outside alphabet of size " + std::to_string(q));
  }
}

// exactly one coordinate equal to 1, everything else 0
std::optional<int> unit_index(const std::vector<int>& v) {
  int idx = -1;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] == 0) continue;
    if (v[a] != 1 || idx >= 0) return std::nullopt;
    idx = static_cast<int>(a);
  }
  if (idx < 0) return std::nullopt;
  return idx;
}

}  // namespace

Composition composition(const Sequence& w, int q) {
  if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
  Composition counts(static_cast<std::size_t>(q), 0);
  for (Symbol s : w) {
    check_symbol(s, q);
    ++counts[static_cast<std::size_t>(s)];
  }
  return counts;
}

ReadVector read_vector(const Sequence& x, int q, int ell) {
  if (q < 2 || ell < 1) throw std::invalid_argument("need q >= 2 and ell >= 1");
  if (x.empty()) throw std::invalid_argument("sequence must be non-empty");
  const std::size_t n = x.size();
  for (Symbol s : x) check_symbol(s, q);

  ReadVector out;
  out.reserve(n + static_cast<std::size_t>(ell) - 1);
  Composition window(static_cast<std::size_t>(q), 0);
  // entry i covers positions (i - ell, i] (0-based, half open); slide by one
  for (std::size_t i = 0; i < n + static_cast<std::size_t>(ell) - 1; ++i) {
    if (i < n) ++window[static_cast<std::size_t>(x[i])];
    if (i >= static_cast<std::size_t>(ell)) {
      --window[static_cast<std::size_t>(x[i - static_cast<std::size_t>(ell)])];
    }
    out.push_back(window);
  }
  return out;
}

std::optional<Sequence> invert_read(const ReadVector& z, int q, int ell) {
  if (q < 2 || ell < 1) throw std::invalid_argument("need q >= 2 and ell >= 1");
  const std::size_t L = z.size();
  if (L < static_cast<std::size_t>(ell)) return std::nullopt;
  const std::size_t n = L - static_cast<std::size_t>(ell) + 1;

  // shape and ramp totals first: entry i covers the in-range part of the
  // window (i - ell, i], which has min(i+1, n) - max(i+1-ell, 0) positions
  for (std::size_t i = 0; i < L; ++i) {
    if (z[i].size() != static_cast<std::size_t>(q)) return std::nullopt;
    long long sum = 0;
    for (int c : z[i]) {
      if (c < 0) return std::nullopt;
      sum += c;
    }
    const long long i1 = static_cast<long long>(i) + 1;
    const long long expect = std::min<long long>(i1, static_cast<long long>(n)) -
                             std::max<long long>(i1 - ell, 0);
    if (sum != expect) return std::nullopt;
  }

  Sequence x;
  x.reserve(n);
  const auto first = unit_index(z[0]);
  if (!first) return std::nullopt;
  x.push_back(*first);

  std::vector<int> diff(static_cast<std::size_t>(q), 0);
  for (std::size_t i = 1; i < L; ++i) {
    for (std::size_t a = 0; a < static_cast<std::size_t>(q); ++a) {
      diff[a] = z[i][a] - z[i - 1][a];
    }
    // the step drops the symbol that left the window, if one did
    if (i >= static_cast<std::size_t>(ell)) {
      ++diff[static_cast<std::size_t>(x[i - static_cast<std::size_t>(ell)])];
    }
    if (i < n) {
      const auto sym = unit_index(diff);
      if (!sym) return std::nullopt;
      x.push_back(*sym);
    } else {
      // trailing ramp: nothing entered the window
      if (std::any_of(diff.begin(), diff.end(), [](int c) { return c != 0; })) {
        return std::nullopt;
      }
    }
  }
  return x;
}

Sequence remove_window(const Sequence& x, std::size_t first, std::size_t last) {
  if (first > last || last > x.size()) {
    throw std::out_of_range("remove_window: bad range");
  }
  Sequence out;
  out.reserve(x.size() - (last - first));
  out.insert(out.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(first));
  out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(last), x.end());
  return out;
}

bool is_periodic(const Sequence& x, std::size_t m) {
  if (m < 1 || m + 1 > x.size()) {
    throw std::out_of_range("period must satisfy 1 <= m <= |x| - 1");
  }
  for (std::size_t i = 0; i + m < x.size(); ++i) {
    if (x[i] != x[i + m]) return false;
  }
  return true;
}

std::vector<Composition> composition_alphabet(int q, int ell) {
  if (q < 2 || ell < 0) throw std::invalid_argument("need q >= 2 and ell >= 0");
  std::vector<Composition> out;
  Composition cur(static_cast<std::size_t>(q), 0);
  // enumerate count vectors with sum <= ell, coordinate by coordinate
  auto rec = [&](auto&& self, std::size_t a, int remaining) -> void {
    if (a + 1 == static_cast<std::size_t>(q)) {
      for (int c = 0; c <= remaining; ++c) {
        cur[a] = c;
        out.push_back(cur);
      }
      cur[a] = 0;
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      cur[a] = c;
      self(self, a + 1, remaining - c);
    }
    cur[a] = 0;
  };
  rec(rec, 0, ell);
  return out;
}

Sequence sequence_at(std::uint64_t idx, int q, long long n) {
  Sequence x(static_cast<std::size_t>(n), 0);
  for (long long pos = n - 1; pos >= 0; --pos) {
    x[static_cast<std::size_t>(pos)] =
        static_cast<Symbol>(idx % static_cast<std::uint64_t>(q));
    idx /= static_cast<std::uint64_t>(q);
  }
  return x;
}

bool next_sequence(Sequence& x, int q) {
  for (std::size_t pos = x.size(); pos-- > 0;) {
    if (x[pos] + 1 < q) {
      ++x[pos];
      return true;
    }
    x[pos] = 0;
  }
  return false;
}

}  // namespace dupread
