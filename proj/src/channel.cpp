// SPDX-License-Identifier: Apache-2.0
#include "dupread/channel.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

namespace dupread {

EntryVector duplicate(const EntryVector& z, const DuplicationEvent& ev) {
  if (ev.len == 0 || ev.pos + ev.len > z.size()) {
    throw std::out_of_range("duplication event outside the vector");
  }
  EntryVector out;
  out.reserve(z.size() + ev.len);
  const auto mid = z.begin() + static_cast<std::ptrdiff_t>(ev.pos + ev.len);
  out.insert(out.end(), z.begin(), mid);
  out.insert(out.end(), z.begin() + static_cast<std::ptrdiff_t>(ev.pos), mid);
  out.insert(out.end(), mid, z.end());
  return out;
}

namespace {

std::vector<EntryVector> expand_levels(const EntryVector& z, int k, int t,
                                       bool keep_all) {
  if (k < 1) throw std::invalid_argument("duplication length k must be >= 1");
  if (t < 0) throw std::invalid_argument("descendant count t must be >= 0");
  std::vector<EntryVector> level{z};
  std::vector<EntryVector> all;
  if (keep_all) all.push_back(z);
  for (int step = 0; step < t; ++step) {
    std::vector<EntryVector> next;
    std::unordered_set<std::string> seen;
    for (const auto& v : level) {
      if (v.size() < static_cast<std::size_t>(k)) continue;
      for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= v.size(); ++i) {
        auto child = duplicate(v, {i, static_cast<std::size_t>(k)});
        if (seen.insert(canonical_key(child)).second) {
          next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
    if (keep_all) all.insert(all.end(), level.begin(), level.end());
  }
  return keep_all ? all : level;
}

}  // namespace

std::vector<EntryVector> descendants(const EntryVector& z, int k, int t) {
  return expand_levels(z, k, t, /*keep_all=*/false);
}

std::vector<EntryVector> ball(const EntryVector& z, int k, int t) {
  return expand_levels(z, k, t, /*keep_all=*/true);
}

ChannelDraw random_duplications(const EntryVector& z, int k, int t,
                                std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("duplication length k must be >= 1");
  if (t < 0) throw std::invalid_argument("event count t must be >= 0");
  ChannelDraw draw{z, {}};
  std::mt19937_64 engine(seed);
  for (int step = 0; step < t; ++step) {
    if (draw.output.size() < static_cast<std::size_t>(k)) {
      throw std::invalid_argument("vector shorter than the duplication length");
    }
    const std::uint64_t choices = draw.output.size() - static_cast<std::size_t>(k) + 1;
    const DuplicationEvent ev{static_cast<std::size_t>(engine() % choices),
                              static_cast<std::size_t>(k)};
    draw.output = duplicate(draw.output, ev);
    draw.events.push_back(ev);
  }
  return draw;
}

std::optional<EntryVector> common_descendant(const Sequence& x,
                                             const Sequence& xp, int q,
                                             int ell, int k) {
  const auto dx = decompose(delta_k(read_vector(x, q, ell), k), k);
  const auto dy = decompose(delta_k(read_vector(xp, q, ell), k), k);
  if (canonical_key(dx.mu) != canonical_key(dy.mu)) return std::nullopt;
  std::vector<int> sum(dx.sigma.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = dx.sigma[i] + dy.sigma[i];
  }
  return delta_k_inverse(recompose(dx.mu, sum, k, q), k);
}

bool balls_intersect(const Sequence& x, const Sequence& xp, int q, int ell,
                     int k) {
  return canonical_key(nucleus(x, q, ell, k)) ==
         canonical_key(nucleus(xp, q, ell, k));
}

}  // namespace dupread
