// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "dupread/derivative.hpp"
#include "fixtures.hpp"

using namespace dupread;

TEST_CASE("composition counts symbols") {
  CHECK(composition({}, 4) == Composition{0, 0, 0, 0});
  CHECK(composition(fixtures::quaternary_x(), 4) == Composition{3, 3, 3, 1});
  CHECK_THROWS_AS(composition({0, 4}, 4), std::invalid_argument);
}

TEST_CASE("composition is additive over concatenation") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 4);
    Sequence u, v;
    for (std::size_t i = 0; i < rng() % 12; ++i) u.push_back(static_cast<int>(rng() % q));
    for (std::size_t i = 0; i < rng() % 12; ++i) v.push_back(static_cast<int>(rng() % q));
    Sequence uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    auto sum = composition(u, q);
    const auto cv = composition(v, q);
    for (int a = 0; a < q; ++a) sum[a] += cv[a];
    CHECK(composition(uv, q) == sum);
  }
}

TEST_CASE("read vector of the running example") {
  const auto rv = read_vector(fixtures::quaternary_x(), 4, 2);
  CHECK(rv == fixtures::quaternary_read());
}

TEST_CASE("window length one reproduces the sequence as unit vectors") {
  const Sequence x{2, 0, 1};
  const auto rv = read_vector(x, 3, 1);
  REQUIRE(rv.size() == 3);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Composition unit(3, 0);
    unit[static_cast<std::size_t>(x[i])] = 1;
    CHECK(rv[i] == unit);
  }
}

TEST_CASE("single symbol with a wide window ramps up and down") {
  const auto rv = read_vector({0}, 2, 3);
  REQUIRE(rv.size() == 3);
  for (const auto& entry : rv) CHECK(entry == Composition{1, 0});
}

TEST_CASE("read vector length and ramp totals") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const int ell = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 10);
    Sequence x;
    for (int i = 0; i < n; ++i) x.push_back(static_cast<int>(rng() % q));
    const auto rv = read_vector(x, q, ell);
    REQUIRE(static_cast<int>(rv.size()) == n + ell - 1);
    for (std::size_t i = 0; i < rv.size(); ++i) {
      int sum = 0;
      for (int c : rv[i]) sum += c;
      const int i1 = static_cast<int>(i) + 1;
      CHECK(sum == std::min(i1, n) - std::max(i1 - ell, 0));
    }
  }
}

TEST_CASE("inversion undoes the read map") {
  CHECK(invert_read(fixtures::quaternary_read(), 4, 2) == fixtures::quaternary_x());

  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 1000; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const int ell = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 12);
    Sequence x;
    for (int i = 0; i < n; ++i) x.push_back(static_cast<int>(rng() % q));
    const auto back = invert_read(read_vector(x, q, ell), q, ell);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("inversion is exhaustively exact at small binary sizes") {
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 1; n <= 10; ++n) {
      for_each_sequence(2, n, [&](const Sequence& x) {
        const auto back = invert_read(read_vector(x, 2, ell), 2, ell);
        REQUIRE(back.has_value());
        CHECK(*back == x);
      });
    }
  }
}

TEST_CASE("inversion accepts exactly the image of the read map") {
  // exhaustive cross-check against the image set for q = 2, ell = 2
  const int q = 2, ell = 2;
  for (int n = 1; n <= 6; ++n) {
    std::unordered_set<std::string> image;
    for_each_sequence(q, n, [&](const Sequence& x) {
      image.insert(canonical_key(read_vector(x, q, ell)));
    });
    const auto alphabet = composition_alphabet(q, ell);
    EntryVector z(static_cast<std::size_t>(n + ell - 1));
    std::uint64_t accepted = 0;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == z.size()) {
        const bool inverted = invert_read(z, q, ell).has_value();
        const bool in_image = image.count(canonical_key(z)) > 0;
        CHECK(inverted == in_image);
        accepted += inverted;
        return;
      }
      for (const auto& entry : alphabet) {
        z[pos] = entry;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    CHECK(accepted == image.size());
  }
}

TEST_CASE("duplicated read vectors are rejected by inversion") {
  CHECK_FALSE(invert_read(fixtures::quaternary_read_duplicated(), 4, 2).has_value());
}

TEST_CASE("window removal") {
  // dropping positions 1..3 of (0,1,1,0,0,0,1) keeps (0,0,0,1)
  CHECK(remove_window({0, 1, 1, 0, 0, 0, 1}, 1, 4) == Sequence{0, 0, 0, 1});
  CHECK(remove_window({1, 2, 3}, 0, 3).empty());
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Sequence x;
    for (int i = 0; i < n; ++i) x.push_back(static_cast<int>(rng() % 3));
    const std::size_t i = rng() % x.size();
    CHECK(remove_window(x, i, i + 1).size() == x.size() - 1);
  }
  CHECK_THROWS_AS(remove_window({0, 1}, 1, 3), std::out_of_range);
}

TEST_CASE("periodicity predicate") {
  CHECK(is_periodic({0, 1, 0, 1, 0}, 2));
  CHECK_FALSE(is_periodic({0, 1, 1, 1, 0}, 2));
  CHECK_THROWS_AS(is_periodic({0, 1}, 2), std::out_of_range);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int len = m + 1 + static_cast<int>(rng() % 10);
    Sequence u;
    for (int i = 0; i < m; ++i) u.push_back(static_cast<int>(rng() % 3));
    Sequence x;
    for (int i = 0; i < len; ++i) x.push_back(u[static_cast<std::size_t>(i % m)]);
    CHECK(is_periodic(x, static_cast<std::size_t>(m)));
  }
}

TEST_CASE("read alphabet size is binomial(ell + q, ell)") {
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / i;
    return r;
  };
  for (int q = 2; q <= 5; ++q) {
    for (int ell = 1; ell <= 5; ++ell) {
      CHECK(composition_alphabet(q, ell).size() == binom(ell + q, ell));
    }
  }
}
