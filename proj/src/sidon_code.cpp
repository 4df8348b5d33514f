// SPDX-License-Identifier: Apache-2.0
#include "dupread/sidon_code.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace dupread {

namespace {

long long positive_mod(long long v, long long m) {
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

void check_set_shape(const std::vector<long long>& b, long long m, int t) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  if (t < 0) throw std::invalid_argument("order must be >= 0");
  std::unordered_set<long long> seen;
  for (long long e : b) {
    if (e < 1 || e >= m) {
      throw std::invalid_argument("elements must lie in [1, m-1]");
    }
    if (!seen.insert(e).second) {
      throw std::invalid_argument("elements must be distinct");
    }
  }
}

// sums over the current set, partitioned by how many elements (with
// multiplicity) each sum uses; values are globally distinct
struct SumState {
  long long m;
  int order;
  std::vector<std::unordered_set<long long>> by_count;
  std::unordered_set<long long> all;

  SumState(long long m_, int order_) : m(m_), order(order_) {
    by_count.resize(static_cast<std::size_t>(order_) + 1);
    by_count[0].insert(0);
    all.insert(0);
  }

  bool try_add(long long e) {
    std::vector<std::vector<long long>> added(by_count.size());
    std::unordered_set<long long> fresh;
    for (int j = 1; j <= order; ++j) {
      const long long je = positive_mod(static_cast<long long>(j) * e, m);
      for (int c = 0; c + j <= order; ++c) {
        for (long long s : by_count[static_cast<std::size_t>(c)]) {
          const long long v = positive_mod(s + je, m);
          if (all.count(v) || !fresh.insert(v).second) return false;
          added[static_cast<std::size_t>(c + j)].push_back(v);
        }
      }
    }
    for (std::size_t c = 0; c < added.size(); ++c) {
      for (long long v : added[c]) {
        by_count[c].insert(v);
        all.insert(v);
      }
    }
    return true;
  }
};

}  // namespace

bool verify_sidon(const std::vector<long long>& elements, long long modulus,
                  int order) {
  check_set_shape(elements, modulus, order);
  std::unordered_set<long long> sums;
  bool ok = true;
  // every multiset of <= order elements corresponds to one node of this
  // non-decreasing-index recursion
  auto rec = [&](auto&& self, std::size_t start, int remaining,
                 long long sum) -> void {
    if (!ok) return;
    if (!sums.insert(sum).second) {
      ok = false;
      return;
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < elements.size(); ++i) {
      self(self, i, remaining - 1, positive_mod(sum + elements[i], modulus));
    }
  };
  rec(rec, 0, order, 0);
  return ok;
}

bool verify_sidon(const SidonSet& b) {
  return verify_sidon(b.elements, b.modulus, b.order);
}

SidonSet greedy_sidon(std::size_t count, int order, long long modulus_start) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (count == 0) throw std::invalid_argument("need at least one element");
  long long m = std::max<long long>(modulus_start, static_cast<long long>(count) + 1);
  for (;; m *= 2) {
    if (m > (1LL << 40)) {
      throw std::runtime_error("sidon search exceeded the modulus budget");
    }
    SumState state(m, order);
    std::vector<long long> elems;
    for (long long e = 1; e < m && elems.size() < count; ++e) {
      if (state.try_add(e)) elems.push_back(e);
    }
    if (elems.size() == count) {
      SidonSet out{m, std::move(elems), order};
      if (!verify_sidon(out)) {
        throw std::logic_error("greedy sidon construction failed verification");
      }
      return out;
    }
  }
}

SyndromeTable::SyndromeTable(const SidonSet& b) {
  check_set_shape(b.elements, b.modulus, b.order);
  std::vector<std::pair<std::size_t, int>> coeffs;
  auto rec = [&](auto&& self, std::size_t start, int remaining,
                 long long sum) -> void {
    if (!table_.emplace(sum, coeffs).second) {
      throw std::invalid_argument("elements do not form a sidon set of this order");
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < b.elements.size(); ++i) {
      if (!coeffs.empty() && coeffs.back().first == i) {
        ++coeffs.back().second;
      } else {
        coeffs.emplace_back(i, 1);
      }
      self(self, i, remaining - 1, positive_mod(sum + b.elements[i], b.modulus));
      if (coeffs.back().second == 1) {
        coeffs.pop_back();
      } else {
        --coeffs.back().second;
      }
    }
  };
  rec(rec, 0, b.order, 0);
}

const std::vector<std::pair<std::size_t, int>>* SyndromeTable::lookup(
    long long value) const {
  const auto it = table_.find(value);
  return it == table_.end() ? nullptr : &it->second;
}

long long syndrome_of_sigma(const std::vector<int>& sigma, const SidonSet& b) {
  if (sigma.size() > b.elements.size()) {
    throw std::invalid_argument("sigma longer than the sidon element vector");
  }
  long long acc = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    acc = positive_mod(acc + positive_mod(sigma[i], b.modulus) * b.elements[i],
                       b.modulus);
  }
  return acc;
}

long long syndrome(const Sequence& x, const SidonSet& b, const Params& p) {
  const auto sigma = decompose(delta_k(read_vector(x, p.q, p.ell), p.k), p.k).sigma;
  return syndrome_of_sigma(sigma, b);
}

std::pair<long long, std::uint64_t> best_coset(const Params& p,
                                               const SidonSet& b,
                                               std::uint64_t guard) {
  p.validate();
  const std::uint64_t total = checked_power(p.q, p.n, guard);
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>({workers, 8, total / 4096 + 1}));

  using Histogram = std::unordered_map<long long, std::uint64_t>;
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    Histogram h;
    Sequence x = sequence_at(begin, p.q, p.n);
    for (std::uint64_t i = begin; i < end; ++i) {
      ++h[syndrome(x, b, p)];
      next_sequence(x, p.q);
    }
    return h;
  };

  std::vector<std::future<Histogram>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin =
        total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t end =
        begin + total / workers + (w < total % workers ? 1 : 0);
    futures.push_back(std::async(std::launch::async, scan, begin, end));
  }
  std::map<long long, std::uint64_t> merged;
  for (auto& f : futures) {
    for (const auto& [g, c] : f.get()) merged[g] += c;
  }
  std::pair<long long, std::uint64_t> best{0, 0};
  for (const auto& [g, c] : merged) {  // ascending g: smallest wins ties
    if (c > best.second) best = {g, c};
  }
  return best;
}

std::vector<Sequence> coset_members(const Params& p, const SidonSet& b,
                                    long long g, std::uint64_t guard) {
  p.validate();
  checked_power(p.q, p.n, guard);
  std::vector<Sequence> out;
  for_each_sequence(p.q, p.n, [&](const Sequence& x) {
    if (syndrome(x, b, p) == g) out.push_back(x);
  });
  return out;
}

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::ok: return "ok";
    case DecodeStatus::syndrome_miss: return "syndrome-miss";
    case DecodeStatus::negative_sigma: return "negative-sigma";
    case DecodeStatus::invalid_read_vector: return "invalid-read-vector";
  }
  return "unknown";
}

DecodeOutcome decode(const EntryVector& received, const SidonCode& code,
                     const SyndromeTable& table) {
  const auto& p = code.params;
  auto dec = decompose(delta_k(received, p.k), p.k);
  const long long g_received = syndrome_of_sigma(dec.sigma, code.sidon);
  const long long difference =
      positive_mod(g_received - code.g, code.sidon.modulus);
  const auto* coeffs = table.lookup(difference);
  if (!coeffs) return {DecodeStatus::syndrome_miss, {}};
  for (const auto& [idx, cnt] : *coeffs) {
    if (idx >= dec.sigma.size() || dec.sigma[idx] < cnt) {
      return {DecodeStatus::negative_sigma, {}};
    }
    dec.sigma[idx] -= cnt;
  }
  const auto z = delta_k_inverse(recompose(dec.mu, dec.sigma, p.k, p.q), p.k);
  auto x = invert_read(z, p.q, p.ell);
  if (!x || static_cast<long long>(x->size()) != p.n) {
    return {DecodeStatus::invalid_read_vector, {}};
  }
  return {DecodeStatus::ok, std::move(*x)};
}

}  // namespace dupread
