#include <doctest.h>

#include "redalg/pieri.hpp"

using namespace redalg;

using PS = std::vector<Partition>;

TEST_CASE("strip predicates") {
  CHECK(horizontal_strip({2, 1}, {4, 1}));
  CHECK_FALSE(horizontal_strip({2, 1}, {3, 3}));
  CHECK(vertical_strip({2, 1, 0}, {3, 2, 0}));
  CHECK_FALSE(vertical_strip({2, 1}, {4, 1}));
  CHECK_FALSE(horizontal_strip({2, 1}, {1, 1}));
  CHECK(horizontal_strip({2}, {2, 1}));
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim({1, 0, 0}, 3) == 3);
  CHECK(weyl_dim({2, 1, 0}, 3) == 8);
  CHECK(weyl_dim({5}, 1) == 1);
  CHECK(weyl_dim({2}, 2) == 3);
  CHECK(weyl_dim({1, 1}, 4) == 6);
  CHECK_THROWS_AS(weyl_dim({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("Pieri decomposition examples") {
  CHECK(pieri_decompose({2, 1}, 2, 2) == PS{{4, 1}, {3, 2}});
  for (int n = 1; n <= 5; ++n) {
    Partition one(n, 0);
    one[0] = 1;
    CHECK(pieri_decompose(Partition(n, 0), 1, n) == PS{one});
  }
  CHECK(pieri_decompose({1, 1}, 1, 2) == PS{{2, 1}});
  CHECK(dual_pieri_decompose({2, 1}, 2, 3) == PS{{3, 2, 0}, {3, 1, 1}, {2, 2, 1}});
  CHECK(dual_pieri_decompose({1}, 1, 1) == PS{{2}});
  CHECK(dual_pieri_decompose({2, 2}, 1, 2) == PS{{3, 2}});
  CHECK_THROWS_AS(pieri_decompose({1, 2}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(pieri_decompose({1, 1, 1}, 1, 2), std::invalid_argument);
}

TEST_CASE("singular weights are excluded, not zero") {
  // mu = (0,0), nu = (0,2): h12(lambda) = -1
  bool seen = false;
  for (const auto& e : pieri_scan({0, 0}, 2, 2, Parity::even)) {
    if (e.nu == MultiIndex{0, 2}) {
      CHECK(e.status == NormStatus::excluded_singular);
      CHECK_FALSE(e.partition);
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("norm zeros match the strip rules on small shapes") {
  for (int n = 1; n <= 3; ++n) {
    for (int size = 0; size <= 4; ++size) {
      for (const auto& mu : partitions_of(size, n)) {
        for (int m = 0; m <= 3; ++m) {
          auto even = pieri_decompose(mu, m, n);
          CHECK(even == strip_set(mu, m, n, false));
          CHECK(dimension_check(mu, even, m, n, false).pass());
          for (const auto& e : pieri_scan(mu, m, n, Parity::even)) {
            if (!e.partition) CHECK(e.status != NormStatus::nonzero);
          }
          if (m <= n) {
            auto odd = dual_pieri_decompose(mu, m, n);
            CHECK(odd == strip_set(mu, m, n, true));
            CHECK(dimension_check(mu, odd, m, n, true).pass());
          }
        }
      }
    }
  }
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2,1") == Partition{2, 1});
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK(partitions_of(3, 2) == PS{{3, 0}, {2, 1}});
}
