#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qtau/arith.hpp"
#include "qtau/eta.hpp"

using namespace qtau;

namespace {

// Pascal's triangle rows by pure addition: the oracle for both binomial
// routes.
std::vector<std::vector<Int>> pascal_rows(std::int64_t max_n) {
  std::vector<std::vector<Int>> rows(max_n + 1);
  rows[0] = {Int(1)};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = 1;
    rows[n][n] = 1;
    for (std::int64_t k = 1; k < n; ++k)
      rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

}  // namespace

TEST_CASE("sigma") {
  CHECK(sigma(1) == 1);
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13, 97}) CHECK(sigma(p) == p + 1);
  CHECK(sigma(12) == 28);  // 1+2+3+4+6+12
  CHECK_THROWS_AS(sigma(0), std::invalid_argument);
  CHECK_THROWS_AS(sigma(-4), std::invalid_argument);
}

TEST_CASE("omega point values and eta_factor agreement") {
  CHECK(omega(0) == 1);
  CHECK(omega(5) == 1);   // l = 2
  CHECK(omega(3) == 0);
  CHECK(omega(1) == -1);
  CHECK(omega(2) == -1);

  const std::int64_t bound = 10000;
  const IntSeries e = eta_factor(1, bound);
  for (std::int64_t n = 0; n <= bound; ++n) CHECK(e[n] == omega(n));
}

TEST_CASE("omega_scaled") {
  CHECK(omega_scaled(0, 9) == 1);
  CHECK(omega_scaled(18, 9) == -1);  // 18/9 = 2, l = 1
  CHECK(omega_scaled(10, 9) == 0);
  CHECK_THROWS_AS(omega_scaled(3, 0), std::invalid_argument);
}

TEST_CASE("triangular_coeff") {
  CHECK(triangular_coeff(0) == 1);
  CHECK(triangular_coeff(3) == 5);   // t = 2
  CHECK(triangular_coeff(2) == 0);
  CHECK(triangular_coeff(1) == -3);
  CHECK(triangular_coeff(6) == -7);

  const std::int64_t bound = 5000;
  const IntSeries cube = eta_product(EtaProductSpec(0, {{1, 3}}), bound);
  for (std::int64_t n = 0; n <= bound; ++n)
    CHECK(cube[n] == triangular_coeff(n));
}

TEST_CASE("binom_mod2") {
  CHECK(binom_mod2(24, 8) == 1);
  CHECK(binom_mod2(24, 16) == 1);
  CHECK(binom_mod2(24, 24) == 1);
  CHECK(binom_mod2(24, 4) == 0);
  CHECK(binom_mod2(3, 5) == 0);
  for (std::int64_t s = 1; s <= 9; ++s) {
    const std::uint64_t n = (std::uint64_t{1} << s) - 1;
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binom_mod2(n, k) == 1);
  }
}

TEST_CASE("binomial routes against the Pascal oracle") {
  const auto rows = pascal_rows(512);
  for (std::int64_t n = 0; n <= 512; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(binom_mod2(n, k) == mod_residue(rows[n][k], 2));
  for (std::int64_t n = 0; n <= 64; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(binom_exact(n, k) == rows[n][k]);
}

TEST_CASE("binom_exact") {
  CHECK(binom_exact(24, 12) == 2704156);
  CHECK(binom_exact(24, 1) == 24);
  CHECK(binom_exact(17, 0) == 1);
  CHECK(binom_exact(5, -2) == 0);
  CHECK(binom_exact(5, 6) == 0);
  CHECK(binom_exact(100, 50) == Int("100891344545564193334812497256"));
}

TEST_CASE("binom_shifted_mod_l examples and oracle") {
  CHECK(binom_shifted_mod_l(0, 2, 5) == 1);  // C(2,2) = 1
  CHECK(binom_shifted_mod_l(3, 2, 5) == 0);  // C(5,2) = 10
  CHECK(binom_shifted_mod_l(6, 2, 5) == 3);  // C(8,2) = 28

  for (const std::int64_t l : {3, 5, 7, 11, 13, 23})
    for (std::int64_t k = 1; k < l; ++k)
      for (std::int64_t n = 0; n <= 500; ++n)
        CHECK(binom_shifted_mod_l(n, k, l) ==
              mod_residue(binom_exact(n + k, k), l));

  CHECK_THROWS_AS(binom_shifted_mod_l(3, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(binom_shifted_mod_l(3, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(binom_shifted_mod_l(3, 1, 4), std::invalid_argument);
}

TEST_CASE("p_adic_valuation") {
  CHECK(p_adic_valuation(7, 7) == 1);
  CHECK(p_adic_valuation(24, 2) == 3);
  CHECK(p_adic_valuation(24, 5) == 0);
  CHECK(p_adic_valuation(1, 3) == 0);
  CHECK_THROWS_AS(p_adic_valuation(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_adic_valuation(8, 4), std::invalid_argument);
}

TEST_CASE("is_prime on the moduli in play") {
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 97})
    CHECK(is_prime(p));
  for (const std::int64_t n : {0, 1, 4, 9, 15, 21, 25, 91}) CHECK(!is_prime(n));
}

TEST_CASE("pentagonal table") {
  const auto table = PentagonalTable::up_to(30);
  REQUIRE(!table.entries.empty());
  CHECK(table.entries.front().value == 0);
  CHECK(table.entries.front().sign == 1);
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    CHECK(table.entries[i].value > table.entries[i - 1].value);
    CHECK(table.entries[i].value <= 30);
    CHECK(table.entries[i].sign ==
          ((table.entries[i].index % 2 == 0) ? 1 : -1));
    CHECK(omega(table.entries[i].value) == table.entries[i].sign);
  }
  // 0,1,2,5,7,12,15,22,26 are the values up to 30
  CHECK(table.entries.size() == 9);
}
