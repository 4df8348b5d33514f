// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_map>
#include <unordered_set>

#include "dupread/nucleus_code.hpp"
#include "fixtures.hpp"

using namespace dupread;

TEST_CASE("duplication repeats the factor in place") {
  CHECK(duplicate(fixtures::quaternary_read(), {5, 3}) ==
        fixtures::quaternary_read_duplicated());

  const EntryVector abc{{1, 0}, {0, 1}, {1, 1}};
  CHECK(duplicate(abc, {0, 2}) ==
        EntryVector{{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(duplicate(abc, {2, 2}), std::out_of_range);

  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    const int len = 1 + static_cast<int>(rng() % 10);
    EntryVector z(static_cast<std::size_t>(len), {1});
    const std::size_t k = 1 + rng() % static_cast<std::size_t>(len);
    const std::size_t pos = rng() % (static_cast<std::size_t>(len) - k + 1);
    CHECK(duplicate(z, {pos, k}).size() == z.size() + k);
  }
}

TEST_CASE("duplication inserts a zero block into the derivative") {
  // exhaustive at small sizes: derivative of the duplicate equals the
  // derivative with k zeros spliced in after position pos + k
  for (int q : {2, 3}) {
    for (int ell : {1, 2}) {
      for (int k : {1, 2, 3}) {
        for (int n = 1; n <= 5; ++n) {
          for_each_sequence(q, n, [&](const Sequence& x) {
            const auto z = read_vector(x, q, ell);
            if (z.size() < static_cast<std::size_t>(k)) return;
            for (std::size_t pos = 0; pos + static_cast<std::size_t>(k) <= z.size(); ++pos) {
              const auto d = delta_k(z, k);
              auto expected = d;
              expected.insert(expected.begin() + static_cast<std::ptrdiff_t>(pos + k),
                              static_cast<std::size_t>(k),
                              DeltaEntry(static_cast<std::size_t>(q), 0));
              CHECK(delta_k(duplicate(z, {pos, static_cast<std::size_t>(k)}), k) ==
                    expected);
            }
          });
        }
      }
    }
  }
}

TEST_CASE("descendant sets") {
  const EntryVector z{{1, 0}, {0, 1}, {1, 1}};
  CHECK(descendants(z, 1, 0) == std::vector<EntryVector>{z});

  const auto once = descendants(z, 1, 1);
  REQUIRE(once.size() == 3);
  CHECK(once[0] == EntryVector{{1, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(once[1] == EntryVector{{1, 0}, {0, 1}, {0, 1}, {1, 1}});
  CHECK(once[2] == EntryVector{{1, 0}, {0, 1}, {1, 1}, {1, 1}});

  // the duplicated example is reachable in one step of length 3
  const auto level = descendants(fixtures::quaternary_read(), 3, 1);
  const auto key = canonical_key(fixtures::quaternary_read_duplicated());
  bool found = false;
  for (const auto& v : level) found = found || canonical_key(v) == key;
  CHECK(found);
  // no entry equals the one three steps later, so all 9 events differ
  CHECK(level.size() == 9);

  const auto b = ball(fixtures::quaternary_read(), 3, 1);
  CHECK(b.size() == level.size() + 1);
}

TEST_CASE("descendants deduplicate equal outcomes") {
  // constant vector: every event yields the same child
  const EntryVector z(5, DeltaEntry{1, 0});
  CHECK(descendants(z, 2, 1).size() == 1);
  CHECK(ball(z, 2, 2).size() == 3);
}

TEST_CASE("random duplications are reproducible and sized") {
  const auto z = fixtures::quaternary_read();
  const auto a = random_duplications(z, 3, 4, 99);
  const auto b = random_duplications(z, 3, 4, 99);
  REQUIRE(a.events.size() == 4);
  CHECK(a.output.size() == z.size() + 12);
  CHECK(a.output == b.output);
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].pos == b.events[i].pos);
    CHECK(a.events[i].len == 3);
  }
  const auto none = random_duplications(z, 3, 0, 1);
  CHECK(none.output == z);
  CHECK(none.events.empty());
}

TEST_CASE("common descendant construction") {
  // identical depth-zero inputs come back as the read vector itself
  const auto x = fixtures::quaternary_x();
  const auto self = common_descendant(x, x, 4, 2, 3);
  REQUIRE(self.has_value());
  CHECK(*self == fixtures::quaternary_read());

  // distinct nuclei: no common point
  CHECK_FALSE(common_descendant({0, 1}, {0, 0}, 2, 1, 1).has_value());
  CHECK(balls_intersect({0, 1}, {0, 1}, 2, 1, 1));
  CHECK_FALSE(balls_intersect({0, 1}, {0, 0}, 2, 1, 1));
}

TEST_CASE("common descendant lies in both balls (exhaustive small)") {
  for (int k : {1, 2}) {
    for (int ell : {1, 2}) {
      for (int n = 1; n <= 6; ++n) {
        std::unordered_map<std::string, std::vector<Sequence>> classes;
        for_each_sequence(2, n, [&](const Sequence& x) {
          classes[canonical_key(nucleus(x, 2, ell, k))].push_back(x);
        });
        for (const auto& [key, members] : classes) {
          for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i; j < members.size(); ++j) {
              const auto point = common_descendant(members[i], members[j], 2, ell, k);
              REQUIRE(point.has_value());
              for (const auto& from : {members[i], members[j]}) {
                const auto z = read_vector(from, 2, ell);
                REQUIRE(point->size() >= z.size());
                REQUIRE((point->size() - z.size()) % static_cast<std::size_t>(k) == 0);
                const int steps =
                    static_cast<int>((point->size() - z.size()) / static_cast<std::size_t>(k));
                bool reached = false;
                for (const auto& v : descendants(z, k, steps)) {
                  reached = reached || v == *point;
                }
                CHECK(reached);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("bounded balls of distinct code representatives stay disjoint") {
  struct Config {
    int k, ell;
  };
  for (const Config cfg : {Config{1, 2}, Config{2, 2}, Config{2, 4}, Config{3, 2}}) {
    for (int n = 1; n <= 7; ++n) {
      Params p{2, cfg.ell, cfg.k, n, std::nullopt};
      const auto code = build_nucleus_code(p);
      std::unordered_map<std::string, std::size_t> owner;
      for (std::size_t idx = 0; idx < code.representatives.size(); ++idx) {
        const auto z = read_vector(code.representatives[idx], 2, cfg.ell);
        for (const auto& v : ball(z, cfg.k, 3)) {
          const auto [it, inserted] = owner.emplace(canonical_key(v), idx);
          CHECK((inserted || it->second == idx));
        }
      }
    }
  }
}
