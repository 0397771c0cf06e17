#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle_smith.hpp"

using oracle::Mat;

TEST_CASE("pinned Smith forms") {
  CHECK(oracle::smith_diagonal({{1, 0}, {0, 1}}) ==
        std::vector<long long>{1, 1});
  CHECK(oracle::smith_diagonal({{0, 0}, {0, 0}}).empty());
  CHECK(oracle::smith_diagonal({{2, 4}, {-2, 6}}) ==
        std::vector<long long>{2, 10});
  // diag(2,3) is not in Smith form; the invariant factors are 1, 6.
  CHECK(oracle::smith_diagonal({{2, 0}, {0, 3}}) ==
        std::vector<long long>{1, 6});
  // A braid relator row aba(bab)^-1 abelianises to (1, -1): quotient is Z.
  CHECK(oracle::smith_diagonal({{1, -1}}) == std::vector<long long>{1});
}

TEST_CASE("Smith diagonal matches determinant divisors on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    Mat a(rows, std::vector<long long>(cols));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);

    auto d = oracle::smith_diagonal(a);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] > 0);
      CHECK(d[i + 1] % d[i] == 0);
    }
    long long prod = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      long long g = oracle::minor_gcd(a, k);
      if (k <= d.size()) {
        prod *= d[k - 1];
        REQUIRE(g == prod);
      } else {
        REQUIRE(g == 0); // rank deficit: all larger minors vanish
      }
    }
  }
}
