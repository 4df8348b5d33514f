// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <unordered_map>

#include "dupread/json_io.hpp"
#include "dupread/sidon_code.hpp"
#include "fixtures.hpp"

using namespace dupread;

TEST_CASE("sidon verification") {
  CHECK(verify_sidon({1, 3, 9}, 13, 2));
  CHECK_FALSE(verify_sidon({1, 2, 5, 11}, 1000, 2));  // 1+1 collides with 2
  CHECK(verify_sidon({1, 2, 5, 11}, 1000, 0));        // order 0: only the empty sum
  CHECK(verify_sidon({1, 2, 3, 4, 5, 6}, 7, 1));
  CHECK_THROWS_AS(verify_sidon({0, 1}, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_sidon({1, 1}, 7, 1), std::invalid_argument);
}

TEST_CASE("greedy construction always verifies") {
  const auto small = greedy_sidon(3, 2, 13);
  CHECK(small.elements == std::vector<long long>{1, 3, 9});
  CHECK(small.modulus == 13);
  CHECK(verify_sidon(small));

  const auto order1 = greedy_sidon(6, 1, 7);
  CHECK(order1.modulus == 7);
  CHECK(order1.elements == std::vector<long long>{1, 2, 3, 4, 5, 6});

  for (std::size_t r : {1, 4, 8, 12}) {
    for (int t : {0, 1, 2, 3}) {
      const auto b = greedy_sidon(r, t, 2);
      CHECK(b.elements.size() == r);
      CHECK(verify_sidon(b));
    }
  }
}

TEST_CASE("sidon sets survive the json round trip and are verified on load") {
  const auto b = greedy_sidon(8, 2, 2);
  const auto j = sidon_to_json(b);
  const auto back = sidon_from_json(j);
  CHECK(back.modulus == b.modulus);
  CHECK(back.elements == b.elements);
  CHECK(back.order == b.order);

  auto bad = j;
  bad["elements"] = std::vector<long long>{1, 2, 3};  // 1+1 collides with 2
  CHECK_THROWS_AS(sidon_from_json(bad), std::invalid_argument);
}

TEST_CASE("syndrome table inverts every reachable difference") {
  const auto b = greedy_sidon(6, 2, 2);
  const SyndromeTable table(b);
  // C(6,1) + C(7,2) multisets plus the empty one
  CHECK(table.size() == 1 + 6 + 21);
  const auto* empty = table.lookup(0);
  REQUIRE(empty != nullptr);
  CHECK(empty->empty());
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    for (std::size_t j = i; j < b.elements.size(); ++j) {
      const long long sum = (b.elements[i] + b.elements[j]) % b.modulus;
      const auto* coeffs = table.lookup(sum);
      REQUIRE(coeffs != nullptr);
      int total = 0;
      long long recon = 0;
      for (const auto& [idx, cnt] : *coeffs) {
        total += cnt;
        recon += cnt * b.elements[idx];
      }
      CHECK(total == 2);
      CHECK(recon % b.modulus == sum);
    }
  }
}

TEST_CASE("table construction rejects sets with colliding sums") {
  const SidonSet bogus{1000, {1, 2, 5, 11}, 2};
  REQUIRE_FALSE(verify_sidon(bogus));
  CHECK_THROWS_AS(SyndromeTable{bogus}, std::invalid_argument);
}

TEST_CASE("syndromes split the space into cosets") {
  Params p{2, 2, 2, 4, 1};
  const SidonSet b{7, {1, 2, 3, 4, 5, 6}, 1};
  REQUIRE(verify_sidon(b));

  // depth-0 words have the zero syndrome
  CHECK(syndrome({0, 0, 1, 1}, b, p) == 0);

  std::map<long long, std::uint64_t> histogram;
  for_each_sequence(p.q, p.n, [&](const Sequence& x) {
    ++histogram[syndrome(x, b, p)];
  });
  std::uint64_t total = 0;
  for (const auto& [g, c] : histogram) total += c;
  CHECK(total == 16);

  const auto [g, size] = best_coset(p, b);
  CHECK(size >= (16 + 6) / 7);
  CHECK(histogram[g] == size);
  for (const auto& [gg, c] : histogram) CHECK(c <= size);
  CHECK(coset_members(p, b, g).size() == size);
}

TEST_CASE("decoding corrects single duplications across a small coset") {
  Params p{2, 2, 2, 4, 1};
  const SidonSet b{7, {1, 2, 3, 4, 5, 6}, 1};
  const SyndromeTable table(b);
  const auto [g, size] = best_coset(p, b);
  const auto members = coset_members(p, b, g);
  REQUIRE(members.size() == size);
  REQUIRE(size >= 3);
  const SidonCode code{p, b, g};
  for (const auto& x : members) {
    const auto z = read_vector(x, p.q, p.ell);
    CHECK(decode(z, code, table).x == x);
    for (std::size_t pos = 0; pos + 2 <= z.size(); ++pos) {
      const auto out = decode(duplicate(z, {pos, 2}), code, table);
      REQUIRE(out.status == DecodeStatus::ok);
      CHECK(out.x == x);
    }
  }
}

TEST_CASE("bounded balls of one coset are pairwise disjoint") {
  for (int t : {1, 2}) {
    for (int n = 2; n <= 6; ++n) {
      for (auto [k, ell] : {std::pair{2, 2}, std::pair{3, 2}}) {
        Params p{2, ell, k, n, t};
        const auto b = greedy_sidon(static_cast<std::size_t>(n + ell), t, 2);
        const auto [g, size] = best_coset(p, b);
        const auto members = coset_members(p, b, g);
        REQUIRE(members.size() == size);
        std::unordered_map<std::string, std::size_t> owner;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (const auto& v : ball(read_vector(members[i], p.q, p.ell), k, t)) {
            const auto [it, inserted] = owner.emplace(canonical_key(v), i);
            CHECK((inserted || it->second == i));
          }
        }
      }
    }
  }
}

TEST_CASE("decoder failure modes are reported") {
  Params p{2, 2, 2, 4, 1};
  const SidonSet b{7, {1, 2, 3, 4, 5, 6}, 1};
  const SyndromeTable table(b);
  const Sequence x{0, 0, 1, 1};
  const SidonCode code{p, b, syndrome(x, b, p)};
  const auto z = read_vector(x, p.q, p.ell);

  // two errors against a single-error table: the difference leaves the table
  const auto twice = duplicate(duplicate(z, {0, 2}), {3, 2});
  const auto miss = decode(twice, code, table);
  CHECK(miss.status != DecodeStatus::ok);

  // a received word from a different coset decodes to a different sequence
  // or fails; it never silently returns x
  const SidonCode other{p, b, (code.g + 1) % b.modulus};
  const auto wrong = decode(z, other, table);
  CHECK((wrong.status != DecodeStatus::ok || wrong.x != x));

  // corrupt vector: right shape, impossible steps
  EntryVector garbage(5, Composition{1, 1});
  CHECK(decode(garbage, code, table).status != DecodeStatus::ok);
}

TEST_CASE("randomized double-error recovery at quaternary parameters") {
  Params p{4, 2, 3, 8, 2};
  const auto b = greedy_sidon(static_cast<std::size_t>(p.n + p.ell), 2, 2);
  const SyndromeTable table(b);
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 500; ++trial) {
    Sequence x;
    for (int i = 0; i < p.n; ++i) x.push_back(static_cast<int>(rng() % 4));
    const SidonCode code{p, b, syndrome(x, b, p)};
    const auto draw = random_duplications(read_vector(x, 4, 2), 3, 2, rng());
    const auto out = decode(draw.output, code, table);
    REQUIRE(out.status == DecodeStatus::ok);
    CHECK(out.x == x);
  }
}
