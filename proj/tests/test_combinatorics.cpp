#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kneser/combinatorics.hpp"

using namespace kneser;

TEST_CASE("binomial table") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(11, 5) == 462);
  CHECK(binomial(16, 7) == 11440);
  CHECK(binomial(19, 8) == 75582);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534LL);
  CHECK_THROWS_AS(binomial(65, 1), std::invalid_argument);
}

TEST_CASE("vertex_from_elements") {
  CHECK(vertex_from_elements({1, 2}, 5).bits == 0b00011);
  CHECK(vertex_from_elements({}, 5).bits == 0);
  CHECK(vertex_from_elements({1, 3, 5}, 5).bits == 0b10101);
  CHECK(vertex_from_elements({1, 3, 5}, 5).elements() == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(vertex_from_elements({6}, 5), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_elements({0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_elements({2, 2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_elements({1}, 65), std::invalid_argument);
}

TEST_CASE("intersection_size") {
  const Vertex a = vertex_from_elements({1, 2}, 5);
  const Vertex b = vertex_from_elements({1, 3}, 5);
  const Vertex c = vertex_from_elements({3, 4}, 5);
  CHECK(intersection_size(a, b) == 1);
  CHECK(intersection_size(a, a) == 2);
  CHECK(intersection_size(a, c) == 0);
  CHECK_THROWS_AS(intersection_size(a, vertex_from_elements({1, 2}, 6)), std::invalid_argument);
}

TEST_CASE("rank/unrank endpoints") {
  CHECK(rank_colex(vertex_from_elements({1, 2}, 5), 2) == 0);
  const Vertex last = unrank_colex(binomial(9, 4) - 1, 9, 4);
  CHECK(last.elements() == std::vector<int>{6, 7, 8, 9});
  CHECK_THROWS_AS(unrank_colex(binomial(9, 4), 9, 4), std::invalid_argument);
  CHECK_THROWS_AS(unrank_colex(-1, 9, 4), std::invalid_argument);
  CHECK_THROWS_AS(rank_colex(vertex_from_elements({1, 2}, 5), 3), std::invalid_argument);
}

TEST_CASE("rank/unrank round trip for every subset up to n = 12") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::int64_t total = binomial(n, k);
      std::uint64_t mask = first_k_subset_mask(k);
      for (std::int64_t rank = 0; rank < total; ++rank) {
        const Vertex v{mask, n};
        REQUIRE(rank_colex(v, k) == rank);
        REQUIRE(unrank_colex(rank, n, k) == v);
        if (rank + 1 < total) mask = next_k_subset_mask(mask);
      }
    }
  }
}

TEST_CASE("canonical_pair realizes every intersection size") {
  SUBCASE("spec examples") {
    auto [a, b] = canonical_pair(11, 5, 2);
    CHECK(a.elements() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(b.elements() == std::vector<int>{1, 2, 6, 7, 8});
    auto [c, d] = canonical_pair(11, 5, 5);
    CHECK(c == d);
    auto [e, f] = canonical_pair(5, 2, 0);
    CHECK(e.elements() == std::vector<int>{1, 2});
    CHECK(f.elements() == std::vector<int>{3, 4});
  }
  SUBCASE("every s on a small sweep") {
    for (int k = 1; k <= 9; ++k)
      for (int r = 1; r <= 4 && 2 * k + r <= 22; ++r)
        for (int s = 0; s <= k; ++s) {
          const auto [a, b] = canonical_pair(2 * k + r, k, s);
          REQUIRE(a.popcount() == k);
          REQUIRE(b.popcount() == k);
          REQUIRE(intersection_size(a, b) == s);
        }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(canonical_pair(5, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(canonical_pair(5, 3, 0), std::invalid_argument);  // needs 6 elements
  }
}

TEST_CASE("intersection_size is symmetric and bounded (random pairs)") {
  std::mt19937_64 rng(20240817);
  for (int round = 0; round < 2000; ++round) {
    const int n = 4 + static_cast<int>(rng() % 17);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const auto a = unrank_colex(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(binomial(n, k))), n, k);
    const auto b = unrank_colex(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(binomial(n, k))), n, k);
    const int s = intersection_size(a, b);
    REQUIRE(s == intersection_size(b, a));
    REQUIRE(s >= 0);
    REQUIRE(s <= k);
    REQUIRE((a == b) == (s == k));
  }
}

TEST_CASE("parameter records validate") {
  const KneserParams petersen(2, 1);
  CHECK(petersen.n == 5);
  CHECK(petersen.D == 2);
  CHECK(KneserParams(5, 1).D == 5);
  CHECK(KneserParams(7, 2).D == 4);
  CHECK(KneserParams(1, 3).D == 1);
  CHECK_THROWS_AS(KneserParams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(KneserParams(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(KneserParams(31, 5), std::invalid_argument);  // 2k+r > 64

  const ExactParams even(5, 1, 4);
  CHECK(even.p == 2);
  CHECK_FALSE(even.odd);
  const ExactParams odd(5, 1, 5);
  CHECK(odd.p == 2);
  CHECK(odd.odd);
  CHECK_THROWS_WITH_AS(ExactParams(5, 1, 9), "d exceeds diameter 5", std::invalid_argument);
  CHECK_THROWS_AS(ExactParams(5, 1, 0), std::invalid_argument);

  CHECK(GenParams(13, 6, 1, GenFamily::kneser).r() == 2);
  CHECK_THROWS_AS(GenParams(10, 5, 5, GenFamily::kneser), std::invalid_argument);
  CHECK_THROWS_AS(GenParams(7, 5, 1, GenFamily::kneser), std::invalid_argument);   // r < 0
  CHECK_THROWS_AS(GenParams(9, 5, 1, GenFamily::johnson), std::invalid_argument);  // n < 2k
  CHECK_THROWS_AS(GenParams(10, 5, 0, GenFamily::johnson), std::invalid_argument);
  CHECK_NOTHROW(GenParams(10, 5, 1, GenFamily::johnson));
}
