#pragma once

#include <cstdint>
#include <vector>

#include "qtau/bigint.hpp"

namespace qtau {

// Sum of the positive divisors of n, by trial division up to sqrt(n).
std::int64_t sigma(std::int64_t n);

// Integer square root (largest r with r*r <= n).
std::int64_t isqrt(std::int64_t n);

// Pentagonal-number coefficient: (-1)^l when n = l(3l -+ 1)/2, else 0.
// Solved by testing 24n+1 = (6l -+ 1)^2, not by table scan.
int omega(std::int64_t n);

// omega(n/c) when c | n, else 0.
int omega_scaled(std::int64_t n, std::int64_t c);

// (-1)^t (2t+1) when n = t(t+1)/2, else 0.
std::int64_t triangular_coeff(std::int64_t n);

// Parity of C(n, k) via the halving reduction on both arguments.
int binom_mod2(std::uint64_t n, std::uint64_t k);

// C(n+k, k) mod l for an odd prime l and 1 <= k < l, from the closed form:
// with r = n mod l, the value is (-1)^r C(l-k-1, r) when r <= l-k-1 and 0
// when r >= l-k.
std::int64_t binom_shifted_mod_l(std::int64_t n, std::int64_t k, std::int64_t l);

// Largest e with p^e | m (m >= 1, p prime).
int p_adic_valuation(std::int64_t m, std::int64_t p);

// Exact C(n, k); k < 0 or k > n gives 0.
Int binom_exact(std::int64_t n, std::int64_t k);

// Deterministic trial division; every modulus in scope is tiny.
bool is_prime(std::int64_t n);

// All generalized pentagonal numbers up to a bound, with their index and
// sign, sorted by value. The l = 0 entry appears once.
struct PentagonalTable {
  struct Entry {
    std::int64_t index;  // l
    std::int64_t value;  // l(3l-1)/2 or l(3l+1)/2
    int sign;            // (-1)^l
  };
  std::vector<Entry> entries;

  static PentagonalTable up_to(std::int64_t bound);
};

}  // namespace qtau
