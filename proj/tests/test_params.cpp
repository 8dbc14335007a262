#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_helpers.hpp"
#include "suprec/params.hpp"

using namespace suprec;

TEST_CASE("log_choose matches exact combinatorics") {
  CHECK(std::abs(log_choose(4, 2) - oracle::ref::kLn6) < 1e-14);
  CHECK(log_choose(7, 0) == 0.0);
  CHECK(log_choose(7, 7) == 0.0);
  CHECK(std::abs(log_choose(12, 2) - oracle::ref::kLn66) < 1e-14);
  // Against exact 128-bit counts across small p.
  for (int p = 1; p <= 40; ++p)
    for (int k = 0; k <= p; ++k) {
      const double exact =
          std::log(static_cast<double>(oracle::exact_binomial(p, k)));
      CHECK(std::abs(log_choose(p, k) - exact) <=
            1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("log_choose is accurate at p = 1e6") {
  // ln C(1e6, 3) = ln 1e6 + ln 999999 + ln 999998 - ln 6.
  const double exact = std::log(1e6) + std::log(999999.0) +
                       std::log(999998.0) - std::log(6.0);
  CHECK(std::abs(log_choose(1000000, 3) - exact) < 1e-12 * exact);
}

TEST_CASE("log_choose symmetry") {
  for (int p = 1; p <= 60; ++p)
    for (int k = 0; k <= p; ++k)
      CHECK(std::abs(log_choose(p, k) - log_choose(p, p - k)) <= 1e-12);
}

TEST_CASE("log_choose domain errors") {
  CHECK_THROWS_AS(log_choose(4, 5), DomainError);
  CHECK_THROWS_AS(log_choose(-1, 0), DomainError);
  CHECK_THROWS_AS(log_choose(4, -2), DomainError);
}

TEST_CASE("rate") {
  CHECK(std::abs(rate(10, 4, 2) - oracle::ref::kLn6 / 10.0) < 1e-15);
  CHECK(rate(17, 9, 9) == 0.0);
  CHECK(std::abs(rate(1, 12, 2) - oracle::ref::kLn66) < 1e-14);
  CHECK_THROWS_AS(rate(0, 4, 2), DomainError);
}

TEST_CASE("rate is strictly decreasing in n") {
  for (int n = 1; n < 30; ++n)
    CHECK(rate(n, 12, 3) > rate(n + 1, 12, 3));
}

TEST_CASE("enumerate_supports small cases") {
  const auto sets = enumerate_supports(3, 2);
  REQUIRE(sets.size() == 3);
  CHECK(sets[0].indices == std::vector<int>{0, 1});
  CHECK(sets[1].indices == std::vector<int>{0, 2});
  CHECK(sets[2].indices == std::vector<int>{1, 2});

  const auto full = enumerate_supports(4, 4);
  REQUIRE(full.size() == 1);
  CHECK(full[0].indices == std::vector<int>{0, 1, 2, 3});

  const auto ten = enumerate_supports(5, 2);
  REQUIRE(ten.size() == 10);
  CHECK(ten.front().indices == std::vector<int>{0, 1});
  CHECK(ten.back().indices == std::vector<int>{3, 4});
}

TEST_CASE("enumerate_supports counts match exp(log_choose)") {
  for (int p = 1; p <= 20; ++p)
    for (int k = 0; k <= p; ++k) {
      const auto sets = enumerate_supports(p, k);
      CHECK(sets.size() ==
            static_cast<std::size_t>(std::llround(std::exp(log_choose(p, k)))));
      // Lexicographic and duplicate-free (full scan kept to smaller p).
      if (p <= 13)
        for (std::size_t i = 1; i < sets.size(); ++i)
          CHECK(sets[i - 1].indices < sets[i].indices);
    }
}

TEST_CASE("enumeration cap fails loudly with the count") {
  try {
    enumerate_supports(30, 15);
    FAIL("expected CapacityError");
  } catch (const CapacityError& err) {
    CHECK(std::string(err.what()).find("155117520") != std::string::npos);
  }
  CHECK(binomial_count_within(30, 15, 1000000) == std::nullopt);
  CHECK(binomial_count_within(30, 15, 200000000).value() == 155117520u);
}

TEST_CASE("make_support validates") {
  CHECK(make_support({2, 0}, 4).indices == std::vector<int>{0, 2});
  CHECK_THROWS_AS(make_support({0, 0}, 4), DomainError);
  CHECK_THROWS_AS(make_support({0, 4}, 4), DomainError);
  CHECK_THROWS_AS(make_support({-1}, 4), DomainError);
}

TEST_CASE("make_constant_signal") {
  const SparseSignal s = make_constant_signal(make_support({0, 2}, 4), 1.0, 4);
  CHECK(s.dimension == 4);
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries.at(0) == 1.0);
  CHECK(s.entries.at(2) == 1.0);
  CHECK(s.entries.count(1) == 0);

  const SparseSignal t = make_constant_signal(make_support({1}, 3), 0.5, 3);
  CHECK(t.entries.at(1) == 0.5);
  CHECK(t.in_class(0.5));
  CHECK_FALSE(t.in_class(0.6));
  CHECK_THROWS_AS(make_constant_signal(make_support({1}, 3), 0.0, 3),
                  DomainError);
}

TEST_CASE("problem params validation") {
  CHECK_NOTHROW(ProblemParams::make(10, 8, 2, 1.0, 0.5));
  CHECK_NOTHROW(ProblemParams::make(10, 8, 2, 0.0, 0.5));  // chance-level runs
  CHECK_THROWS_AS(ProblemParams::make(0, 8, 2, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemParams::make(10, 8, 0, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemParams::make(10, 8, 9, 1.0), DomainError);
  CHECK_THROWS_AS(ProblemParams::make(10, 8, 2, -1.0), DomainError);
  CHECK_THROWS_AS(ProblemParams::make(10, 8, 2, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(ProblemParams::make(10, 8, 2, 1.0, 1.5), DomainError);
  CHECK_THROWS_AS(ProblemParams::make(10, 8, 2, 1.0, 1.0, 2.0), DomainError);
}
