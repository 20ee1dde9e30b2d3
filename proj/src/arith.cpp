#include "qtau/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtau {

std::int64_t sigma(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("sigma: n must be positive");
  std::int64_t total = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (d != n / d) total += n / d;
  }
  return total;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  if (n < 2) return n;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int omega(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("omega: n must be nonnegative");
  const std::int64_t x = isqrt(24 * n + 1);
  if (x * x != 24 * n + 1) return 0;
  // x = 6l - 1 gives n = l(3l-1)/2; x = 6l + 1 gives n = l(3l+1)/2. An odd
  // square 24n+1 forces x = +-1 mod 6, so the switch is exhaustive.
  std::int64_t l = 0;
  switch (x % 6) {
    case 5: l = (x + 1) / 6; break;
    case 1: l = (x - 1) / 6; break;
    default: return 0;
  }
  return (l % 2 == 0) ? 1 : -1;
}

int omega_scaled(std::int64_t n, std::int64_t c) {
  if (n < 0) throw std::invalid_argument("omega_scaled: n must be nonnegative");
  if (c < 1) throw std::invalid_argument("omega_scaled: c must be positive");
  if (n % c != 0) return 0;
  return omega(n / c);
}

std::int64_t triangular_coeff(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("triangular_coeff: n must be nonnegative");
  const std::int64_t x = isqrt(8 * n + 1);
  if (x * x != 8 * n + 1) return 0;
  const std::int64_t t = (x - 1) / 2;
  return (t % 2 == 0) ? (2 * t + 1) : -(2 * t + 1);
}

int binom_mod2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  while (k > 0) {
    if (n % 2 == 0 && k % 2 == 1) return 0;
    n /= 2;
    k /= 2;
  }
  return 1;
}

std::int64_t binom_shifted_mod_l(std::int64_t n, std::int64_t k, std::int64_t l) {
  if (l < 3 || !is_prime(l) || l % 2 == 0)
    throw std::invalid_argument("binom_shifted_mod_l: l must be an odd prime");
  if (k < 1 || k >= l)
    throw std::invalid_argument("binom_shifted_mod_l: need 1 <= k < l");
  if (n < 0) throw std::invalid_argument("binom_shifted_mod_l: n must be nonnegative");
  const std::int64_t r = n % l;
  if (r >= l - k) return 0;
  const std::int64_t v = mod_residue(binom_exact(l - k - 1, r), l);
  return (r % 2 == 0) ? v : mod_residue(-v, l);
}

int p_adic_valuation(std::int64_t m, std::int64_t p) {
  if (m <= 0) throw std::invalid_argument("p_adic_valuation: m must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p must be prime");
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Int binom_exact(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binom_exact: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PentagonalTable PentagonalTable::up_to(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("PentagonalTable: negative bound");
  PentagonalTable table;
  table.entries.push_back({0, 0, 1});
  for (std::int64_t l = 1;; ++l) {
    const std::int64_t low = l * (3 * l - 1) / 2;
    if (low > bound) break;
    const int sign = (l % 2 == 0) ? 1 : -1;
    table.entries.push_back({l, low, sign});
    const std::int64_t high = l * (3 * l + 1) / 2;
    if (high <= bound) table.entries.push_back({l, high, sign});
  }
  return table;
}

}  // namespace qtau
