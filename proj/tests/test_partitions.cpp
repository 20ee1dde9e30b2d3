#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "qtau/eta.hpp"
#include "qtau/partitions.hpp"
#include "qtau/series.hpp"

using namespace qtau;

namespace {

PartitionShape shape(std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  PartitionShape p;
  for (const auto& [part, freq] : pairs) p.pairs.push_back({part, freq});
  return p;
}

// Ordered-tuple enumeration of weak compositions: the brute-force oracle.
Int composition_brute(std::int64_t k, std::int64_t n) {
  Int total = 0;
  std::vector<std::int64_t> tuple;
  std::function<void(std::int64_t, std::int64_t)> rec =
      [&](std::int64_t slots, std::int64_t remaining) {
        if (slots == 1) {
          Int product = 1;
          for (const std::int64_t a : tuple) product *= p_count(a);
          product *= p_count(remaining);
          total += product;
          return;
        }
        for (std::int64_t a = 0; a <= remaining; ++a) {
          tuple.push_back(a);
          rec(slots - 1, remaining - a);
          tuple.pop_back();
        }
      };
  rec(k, n);
  return total;
}

}  // namespace

TEST_CASE("enum_partitions order and constraints") {
  const auto all = list_partitions(3, FrequencyConstraint::unconstrained());
  REQUIRE(all.size() == 3);
  CHECK(all[0] == shape({{3, 1}}));
  CHECK(all[1] == shape({{2, 1}, {1, 1}}));
  CHECK(all[2] == shape({{1, 3}}));

  const auto bounded = list_partitions(3, FrequencyConstraint::max_frequency(2));
  REQUIRE(bounded.size() == 2);
  CHECK(bounded[0] == shape({{3, 1}}));
  CHECK(bounded[1] == shape({{2, 1}, {1, 1}}));

  const auto empty_case = list_partitions(0, FrequencyConstraint::distinct_parts());
  REQUIRE(empty_case.size() == 1);
  CHECK(empty_case[0].pairs.empty());

  for (const auto& p : list_partitions(12, FrequencyConstraint::unconstrained())) {
    CHECK(p.total() == 12);
    for (std::size_t i = 1; i < p.pairs.size(); ++i)
      CHECK(p.pairs[i].part < p.pairs[i - 1].part);
  }
}

TEST_CASE("p_count against enumeration and the series route") {
  CHECK(p_count(0) == 1);
  CHECK(p_count(4) == 5);
  CHECK(p_count(9) == 30);

  for (std::int64_t n = 0; n <= 60; ++n)
    CHECK(p_count(n) == count_partitions(n, FrequencyConstraint::unconstrained()));

  const IntSeries inverted = invert(eta_product(EtaProductSpec(0, {{1, 1}}), 2000));
  const auto table = p_count_range(2000);
  for (std::int64_t n = 0; n <= 2000; ++n) CHECK(table[n] == inverted[n]);
}

TEST_CASE("q_distinct") {
  CHECK(q_distinct(0) == 1);
  CHECK(q_distinct(5) == 3);  // 5, 4+1, 3+2
  CHECK(q_distinct(6) == 4);
  for (std::int64_t n = 0; n <= 40; ++n)
    CHECK(q_distinct(n) == count_partitions(n, FrequencyConstraint::distinct_parts()));
}

TEST_CASE("regular_count examples and enumeration oracle") {
  CHECK(regular_count(9, 1) == 1);
  CHECK(regular_count(9, 2) == 2);
  CHECK(regular_count(9, 3) == 3);
  CHECK(regular_count(4, 6) == 9);
  for (const std::int64_t t : {2, 3, 5, 7}) CHECK(regular_count(t, 0) == 1);
  CHECK_THROWS_AS(regular_count(1, 3), std::invalid_argument);

  for (std::int64_t t = 2; t <= 7; ++t) {
    const IntSeries series = regular_series(t, 40);
    for (std::int64_t n = 0; n <= 40; ++n)
      CHECK(series[n] ==
            count_partitions(n, FrequencyConstraint::no_part_divisible_by(t)));
  }
}

TEST_CASE("bounded frequencies: d_1 = q, d_3 convolution, d_t = R_{t+1}") {
  CHECK(bounded_frequency_count(3, 2) == 2);  // {2}, {1,1}
  for (std::int64_t n = 0; n <= 30; ++n)
    CHECK(bounded_frequency_count(1, n) == q_distinct(n));

  const IntSeries d3 = bounded_frequency_series(3, 50);
  const IntSeries qd = distinct_series(50);
  for (std::int64_t n = 0; n <= 50; ++n) {
    Int rhs = 0;
    for (std::int64_t s = 0; 2 * s <= n; ++s) rhs += qd[n - 2 * s] * qd[s];
    CHECK(d3[n] == rhs);
  }

  for (std::int64_t t = 1; t <= 6; ++t) {
    const IntSeries lhs = bounded_frequency_series(t, 200);
    const IntSeries rhs = regular_series(t + 1, 200);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("frequency_set_count") {
  const std::set<std::int64_t> a = {8, 16, 24};
  CHECK(frequency_set_count(a, 8) == 1);   // 1^8
  CHECK(frequency_set_count(a, 16) == 2);  // 2^8 and 1^16
  CHECK(frequency_set_count(a, 5) == 0);
  for (std::int64_t n = 0; n <= 48; ++n)
    CHECK(frequency_set_count(a, n) ==
          count_partitions(n, FrequencyConstraint::frequency_set(a)));
  CHECK_THROWS_AS(frequency_set_count({}, 3), std::invalid_argument);
}

TEST_CASE("composition_weighted_sum") {
  CHECK(composition_weighted_sum(2, 2) == 5);
  CHECK(composition_weighted_sum(3, 2) == 9);
  for (const std::int64_t k : {1, 2, 3, 4}) CHECK(composition_weighted_sum(k, 0) == 1);
  CHECK_THROWS_AS(composition_weighted_sum(0, 3), std::invalid_argument);

  for (std::int64_t k = 1; k <= 4; ++k)
    for (std::int64_t n = 0; n <= 12; ++n)
      CHECK(composition_weighted_sum(k, n) == composition_brute(k, n));
}

TEST_CASE("R_4 parity sits on the triangular numbers") {
  const IntSeries r4 = regular_series(4, 2000);
  for (std::int64_t n = 0; n <= 2000; ++n) {
    const std::int64_t x = 8 * n + 1;
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    const bool triangular = r * r == x;
    CHECK(mod_residue(r4[n], 2) == (triangular ? 1 : 0));
  }
}

TEST_CASE("constraint factories validate") {
  CHECK_THROWS_AS(FrequencyConstraint::max_frequency(0), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyConstraint::frequency_set({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyConstraint::no_part_divisible_by(0), std::invalid_argument);
  CHECK_THROWS_AS(enum_partitions(-1, FrequencyConstraint::unconstrained(),
                                  [](const PartitionShape&) {}),
                  std::invalid_argument);
}
