// SPDX-License-Identifier: Apache-2.0
#include "dupread/nucleus_code.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace dupread {

namespace {

unsigned worker_count(std::uint64_t total) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::uint64_t by_size = total / 4096 + 1;
  return static_cast<unsigned>(
      std::min<std::uint64_t>({hw, 8, by_size}));
}

// Streaming form of canonical_key(nucleus(x, q, ell, k)): slides the window
// counts, keeps the last k read entries in a ring to difference against, and
// reduces zero runs modulo k on the fly. Buffers are reused across calls.
class NucleusKeyBuilder {
 public:
  NucleusKeyBuilder(int q, int ell, int k)
      : q_(q), ell_(ell), k_(k),
        ring_(static_cast<std::size_t>(k) * q, 0),
        window_(static_cast<std::size_t>(q), 0) {}

  std::string operator()(const Sequence& x) {
    const long long n = static_cast<long long>(x.size());
    const long long total = n + ell_ - 1;
    body_.clear();
    run_ = 0;
    std::fill(window_.begin(), window_.end(), 0);
    std::fill(ring_.begin(), ring_.end(), 0);
    for (long long i = 0; i < total; ++i) {
      if (i < n) ++window_[static_cast<std::size_t>(x[i])];
      if (i >= ell_) --window_[static_cast<std::size_t>(x[i - ell_])];
      int* prev = ring_.data() + (i % k_) * q_;
      bool zero = true;
      for (int a = 0; a < q_; ++a) zero = zero && window_[a] == prev[a];
      if (zero) {
        ++run_;
      } else {
        flush_run();
        for (int a = 0; a < q_; ++a) push(window_[a] - prev[a]);
      }
      std::copy(window_.begin(), window_.end(), prev);
    }
    flush_run();
    std::string key;
    key.reserve(4 + body_.size());
    const std::uint32_t len =
        static_cast<std::uint32_t>(body_.size() / static_cast<std::size_t>(q_));
    for (int b = 0; b < 4; ++b) {
      key.push_back(static_cast<char>((len >> (8 * b)) & 0xff));
    }
    key += body_;
    return key;
  }

 private:
  void push(int c) {
    if (c < -128 || c > 127) {
      throw std::invalid_argument("entry magnitude too large for byte key");
    }
    body_.push_back(static_cast<char>(c));
  }
  void flush_run() {
    for (int r = 0; r < run_ % k_; ++r) body_.append(static_cast<std::size_t>(q_), '\0');
    run_ = 0;
  }

  int q_, ell_, k_;
  std::vector<int> ring_;
  std::vector<int> window_;
  std::string body_;
  int run_ = 0;
};

}  // namespace

std::string nucleus_key(const Sequence& x, int q, int ell, int k) {
  if (q < 2 || ell < 1 || k < 1) throw std::invalid_argument("bad parameters");
  return NucleusKeyBuilder(q, ell, k)(x);
}

NucleusClassCode build_nucleus_code(const Params& p, std::uint64_t guard) {
  p.validate();
  const std::uint64_t total = checked_power(p.q, p.n, guard);
  const unsigned workers = worker_count(total);

  using Shard = std::unordered_map<std::string, Sequence>;
  auto scan = [&p](std::uint64_t begin, std::uint64_t end) {
    Shard best;
    NucleusKeyBuilder key(p.q, p.ell, p.k);
    Sequence x = sequence_at(begin, p.q, p.n);
    for (std::uint64_t i = begin; i < end; ++i) {
      // first member seen per key is the lexicographically smallest
      best.try_emplace(key(x), x);
      next_sequence(x, p.q);
    }
    return best;
  };

  std::vector<std::future<Shard>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
    futures.push_back(std::async(std::launch::async, scan, begin, end));
  }

  std::vector<std::pair<std::string, Sequence>> classes;
  {
    Shard merged;
    for (auto& f : futures) {
      for (auto& [key, seq] : f.get()) {
        merged.emplace(std::move(key), std::move(seq));  // shard order: first wins
      }
    }
    classes.assign(std::make_move_iterator(merged.begin()),
                   std::make_move_iterator(merged.end()));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  NucleusClassCode code;
  code.params = p;
  code.representatives.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    code.class_index.emplace(std::move(classes[i].first), i);
    code.representatives.push_back(std::move(classes[i].second));
  }
  return code;
}

std::vector<std::pair<int, std::uint64_t>> depth_partition(
    const NucleusClassCode& code) {
  const auto& p = code.params;
  std::map<int, std::uint64_t> counts;
  for (const auto& x : code.representatives) {
    ++counts[depth(x, p.q, p.ell, p.k)];
  }
  return {counts.begin(), counts.end()};
}

std::optional<std::size_t> first_periodic_window(const Sequence& x, int k,
                                                 int ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("need k >= 1 and ell >= 1");
  const std::size_t window = 2 * static_cast<std::size_t>(k) + ell - 1;
  if (x.size() < window) return std::nullopt;
  // window at i is k-periodic iff the k-apart matches run through
  // positions i .. i + k + ell - 2
  const std::size_t need = static_cast<std::size_t>(k) + ell - 1;
  std::size_t run = 0;
  for (std::size_t j = 0; j + static_cast<std::size_t>(k) < x.size(); ++j) {
    run = (x[j] == x[j + static_cast<std::size_t>(k)]) ? run + 1 : 0;
    if (run >= need) return j + 1 - need;
  }
  return std::nullopt;
}

bool is_fine(const Sequence& x, int k, int ell) {
  return !first_periodic_window(x, k, ell).has_value();
}

std::uint64_t count_fine_bruteforce(int q, int k, int ell, int n,
                                    std::uint64_t guard) {
  if (q < 2 || k < 1 || ell < 1 || n < 0) {
    throw std::invalid_argument("bad parameters for fine counting");
  }
  checked_power(q, n, guard);
  const int need = k + ell - 1;
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  std::vector<int> runs(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  // depth-first over prefixes; a completed periodic window kills the subtree
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      ++count;
      return;
    }
    for (Symbol a = 0; a < q; ++a) {
      x[static_cast<std::size_t>(pos)] = a;
      int run = 0;
      if (pos >= k && x[static_cast<std::size_t>(pos)] == x[static_cast<std::size_t>(pos - k)]) {
        run = (pos - 1 >= k ? runs[static_cast<std::size_t>(pos - 1)] : 0) + 1;
      }
      if (run >= need) continue;
      runs[static_cast<std::size_t>(pos)] = run;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return count;
}

BigInt rll_count(int q, int limit, long long m) {
  if (q < 2 || limit < 0 || m < 0) {
    throw std::invalid_argument("bad parameters for run-limited counting");
  }
  std::vector<BigInt> a(static_cast<std::size_t>(m) + 1);
  a[0] = 1;
  for (long long i = 1; i <= m; ++i) {
    BigInt total = (i <= limit) ? 1 : 0;  // the all-zero string, when allowed
    // condition on the number of leading zeros before the first nonzero
    for (long long z = 0; z <= std::min<long long>(limit, i - 1); ++z) {
      total += (q - 1) * a[static_cast<std::size_t>(i - 1 - z)];
    }
    a[static_cast<std::size_t>(i)] = std::move(total);
  }
  return a[static_cast<std::size_t>(m)];
}

BigInt count_fine_fast(int q, int k, int ell, long long n) {
  if (q < 2 || k < 1 || ell < 1 || n < 0) {
    throw std::invalid_argument("bad parameters for fine counting");
  }
  if (n < k) return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)) *
         rll_count(q, k + ell - 2, n - k);
}

Sequence del_step(const Sequence& x, int k, int ell) {
  const auto start = first_periodic_window(x, k, ell);
  if (!start) throw std::invalid_argument("sequence has no periodic window");
  return remove_window(x, *start, *start + static_cast<std::size_t>(k));
}

DeltaVector rem_step(const DeltaVector& d, std::size_t pos, int k) {
  if (k < 1 || pos + static_cast<std::size_t>(k) > d.size()) {
    throw std::invalid_argument("removal window out of range");
  }
  for (std::size_t i = pos; i < pos + static_cast<std::size_t>(k); ++i) {
    if (!is_zero_entry(d[i])) {
      throw std::invalid_argument("removal window is not all-zero");
    }
  }
  DeltaVector out;
  out.reserve(d.size() - static_cast<std::size_t>(k));
  out.insert(out.end(), d.begin(), d.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), d.begin() + static_cast<std::ptrdiff_t>(pos + k), d.end());
  return out;
}

Sequence del_star(const Sequence& x, int k, int ell) {
  Sequence cur = x;
  while (auto start = first_periodic_window(cur, k, ell)) {
    cur = remove_window(cur, *start, *start + static_cast<std::size_t>(k));
  }
  return cur;
}

std::uint64_t count_duplication_contexts(int q, int k, int ell,
                                         std::uint64_t guard) {
  if (q < 2 || k < 1 || ell < 1) throw std::invalid_argument("bad parameters");
  const long long window = 2LL * k + ell - 1;
  checked_power(q, window, guard);
  std::uint64_t count = 0;
  for_each_sequence(q, window, [&](const Sequence& w) {
    // the k consecutive composition equalities between the two copies
    std::vector<int> diff(static_cast<std::size_t>(q), 0);
    auto add = [&](std::size_t lo, std::size_t hi, int sign) {
      for (std::size_t i = lo; i < hi; ++i) {
        diff[static_cast<std::size_t>(w[i])] += sign;
      }
    };
    add(0, static_cast<std::size_t>(ell), +1);
    add(static_cast<std::size_t>(k), static_cast<std::size_t>(k + ell), -1);
    for (int j = 0;; ++j) {
      if (std::any_of(diff.begin(), diff.end(), [](int c) { return c != 0; })) {
        return;
      }
      if (j + 1 >= k) break;
      // slide both windows one step right
      ++diff[static_cast<std::size_t>(w[static_cast<std::size_t>(j + ell)])];
      --diff[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])];
      --diff[static_cast<std::size_t>(w[static_cast<std::size_t>(j + k + ell)])];
      ++diff[static_cast<std::size_t>(w[static_cast<std::size_t>(j + k)])];
    }
    ++count;
  });
  return count;
}

}  // namespace dupread
