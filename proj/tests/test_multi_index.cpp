#include <doctest.h>

#include <set>

#include "fockcalc/multi_index.hpp"

using namespace fock;

TEST_CASE("enumeration order and small cases") {
  const auto v = mi_enumerate(2, 1);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == MultiIndex{0, 0});
  CHECK(v[1] == MultiIndex{1, 0});
  CHECK(v[2] == MultiIndex{0, 1});

  const auto w = mi_enumerate(2, 2);
  REQUIRE(w.size() == 6);
  CHECK(w[3] == MultiIndex{2, 0});
  CHECK(w[4] == MultiIndex{1, 1});
  CHECK(w[5] == MultiIndex{0, 2});

  CHECK(mi_enumerate(1, 0).size() == 1);
  CHECK(mi_enumerate(4, 0).front().is_zero());
}

TEST_CASE("enumeration is complete, distinct and sorted") {
  // brute force over the box [0, D]^n
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) {
      std::set<std::vector<int>> expect;
      std::vector<int> e(n, 0);
      while (true) {
        int tot = 0;
        for (int x : e) tot += x;
        if (tot <= d) expect.insert(e);
        int k = 0;
        while (k < n && ++e[k] > d) e[k++] = 0;
        if (k == n) break;
      }
      const auto got = mi_enumerate(n, d);
      CHECK(got.size() == expect.size());
      CHECK(static_cast<std::int64_t>(got.size()) == binomial(n + d, d));
      std::set<std::vector<int>> seen;
      for (size_t i = 0; i < got.size(); ++i) {
        seen.insert({got[i].entries().begin(), got[i].entries().end()});
        if (i) CHECK(graded_lex_compare(got[i - 1], got[i]) == std::strong_ordering::less);
      }
      CHECK(seen == expect);
    }
  CHECK(mi_enumerate(3, 4).size() == 35);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == 2432902008176640000LL);
  CHECK_THROWS_AS(factorial(21), std::overflow_error);

  CHECK(mi_factorial(MultiIndex{2, 3}) == 12);
  CHECK(mi_binomial(MultiIndex{3, 2}, MultiIndex{1, 1}) == 6);
  CHECK_THROWS_AS(mi_binomial(MultiIndex{1, 0}, MultiIndex{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(mi_binomial(MultiIndex{1, 0}, MultiIndex{1}), DimensionError);
  CHECK_THROWS_AS(mi_factorial(MultiIndex{21, 0}), std::overflow_error);
}

TEST_CASE("lower sets sum binomials to a power of two") {
  for (const auto& i : mi_enumerate(3, 6)) {
    std::int64_t total = 0;
    for (const auto& l : mi_lower_set(i)) {
      CHECK(l.le(i));
      total += mi_binomial(i, l);
    }
    CHECK(total == (std::int64_t{1} << i.total()));
  }
}

TEST_CASE("arithmetic and dimension checks") {
  const MultiIndex a{1, 2}, b{0, 1};
  CHECK(a + b == MultiIndex{1, 3});
  CHECK(a - b == MultiIndex{1, 1});
  CHECK(a.total() == 3);
  CHECK(b.le(a));
  CHECK_FALSE(a.le(b));
  CHECK(MultiIndex::unit(3, 2) == MultiIndex{0, 0, 1});
  CHECK_THROWS_AS(a + MultiIndex{1}, DimensionError);
  CHECK_THROWS_AS(MultiIndex(kMaxDim + 1), DimensionError);
  CHECK_THROWS(MultiIndex{-1, 0});
  CHECK(graded_lex_compare(MultiIndex{1, 0}, MultiIndex{0, 1}) == std::strong_ordering::less);
  CHECK(graded_lex_compare(MultiIndex{0, 1}, MultiIndex{2, 0}) == std::strong_ordering::less);
}
