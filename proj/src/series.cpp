#include "qtau/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qtau {

namespace {

constexpr std::int64_t kMaxModulus = std::numeric_limits<std::int32_t>::max();

void check_order(std::int64_t order) {
  if (order < 0) throw std::invalid_argument("series: order must be nonnegative");
}

std::int64_t check_modulus(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("series: modulus must be at least 2");
  if (m > kMaxModulus)
    throw std::invalid_argument("series: modulus exceeds the 32-bit ceiling");
  return m;
}

void check_same_modulus(const ModSeries& f, const ModSeries& g) {
  if (f.modulus() != g.modulus())
    throw std::invalid_argument("series: mismatched moduli");
}

// Inverse of a mod m via the extended euclidean algorithm.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod_residue(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    throw std::domain_error("series: constant term is not a unit modulo m");
  return mod_residue(t0, m);
}

}  // namespace

IntSeries::IntSeries(std::int64_t order) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

IntSeries::IntSeries(std::vector<Int> coeffs, std::int64_t order) {
  check_order(order);
  if (static_cast<std::int64_t>(coeffs.size()) > order + 1)
    throw std::invalid_argument("series: more coefficients than order+1 allows");
  coeffs.resize(static_cast<std::size_t>(order) + 1);
  coeffs_ = std::move(coeffs);
}

IntSeries make_series(std::vector<Int> coeffs, std::int64_t order) {
  return IntSeries(std::move(coeffs), order);
}

const Int& coeff(const IntSeries& f, std::int64_t n) {
  if (n < 0 || n > f.order())
    throw std::out_of_range("series: coefficient index out of range");
  return f[n];
}

std::int64_t coeff(const ModSeries& f, std::int64_t n) {
  if (n < 0 || n > f.order())
    throw std::out_of_range("series: coefficient index out of range");
  return f[n];
}

IntSeries add(const IntSeries& f, const IntSeries& g) {
  const std::int64_t order = std::min(f.order(), g.order());
  std::vector<Int> out(static_cast<std::size_t>(order) + 1);
  for (std::int64_t n = 0; n <= order; ++n) out[n] = f[n] + g[n];
  return IntSeries(std::move(out), order);
}

IntSeries negate(const IntSeries& f) {
  std::vector<Int> out(static_cast<std::size_t>(f.order()) + 1);
  for (std::int64_t n = 0; n <= f.order(); ++n) out[n] = -f[n];
  return IntSeries(std::move(out), f.order());
}

IntSeries mul(const IntSeries& f, const IntSeries& g) {
  const std::int64_t order = std::min(f.order(), g.order());
  std::vector<Int> out(static_cast<std::size_t>(order) + 1);
  for (std::int64_t i = 0; i <= order; ++i) {
    if (f[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= order; ++j) {
      if (g[j] == 0) continue;
      out[i + j] += f[i] * g[j];
    }
  }
  return IntSeries(std::move(out), order);
}

IntSeries invert(const IntSeries& f) {
  const Int& c0 = f[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("series: constant term must be +1 or -1 to invert");
  const std::int64_t order = f.order();
  std::vector<Int> g(static_cast<std::size_t>(order) + 1);
  g[0] = c0;
  for (std::int64_t n = 1; n <= order; ++n) {
    Int acc = 0;
    for (std::int64_t i = 1; i <= n; ++i) acc += f[i] * g[n - i];
    g[n] = -(c0 * acc);
  }
  return IntSeries(std::move(g), order);
}

IntSeries pow(const IntSeries& f, std::int64_t e) {
  const std::int64_t order = f.order();
  std::vector<Int> one(static_cast<std::size_t>(order) + 1);
  one[0] = 1;
  IntSeries result(std::move(one), order);
  if (e == 0) return result;
  IntSeries base = e < 0 ? invert(f) : f;
  auto mag = static_cast<std::uint64_t>(e < 0 ? -(e + 1) : e - 1) + 1;
  while (mag > 0) {
    if (mag & 1) result = mul(result, base);
    mag >>= 1;
    if (mag > 0) base = mul(base, base);
  }
  return result;
}

ModSeries::ModSeries(std::int64_t order, std::int64_t modulus)
    : modulus_(check_modulus(modulus)) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

ModSeries::ModSeries(std::vector<std::int64_t> coeffs, std::int64_t order,
                     std::int64_t modulus)
    : modulus_(check_modulus(modulus)) {
  check_order(order);
  if (static_cast<std::int64_t>(coeffs.size()) > order + 1)
    throw std::invalid_argument("series: more coefficients than order+1 allows");
  coeffs.resize(static_cast<std::size_t>(order) + 1, 0);
  for (auto& c : coeffs) c = mod_residue(c, modulus_);
  coeffs_ = std::move(coeffs);
}

ModSeries reduce_mod(const IntSeries& f, std::int64_t m) {
  check_modulus(m);
  std::vector<std::int64_t> out(static_cast<std::size_t>(f.order()) + 1);
  for (std::int64_t n = 0; n <= f.order(); ++n) out[n] = mod_residue(f[n], m);
  return ModSeries(std::move(out), f.order(), m);
}

ModSeries add(const ModSeries& f, const ModSeries& g) {
  check_same_modulus(f, g);
  const std::int64_t m = f.modulus();
  const std::int64_t order = std::min(f.order(), g.order());
  std::vector<std::int64_t> out(static_cast<std::size_t>(order) + 1);
  for (std::int64_t n = 0; n <= order; ++n) {
    std::int64_t v = f[n] + g[n];
    if (v >= m) v -= m;
    out[n] = v;
  }
  return ModSeries(std::move(out), order, m);
}

ModSeries negate(const ModSeries& f) {
  const std::int64_t m = f.modulus();
  std::vector<std::int64_t> out(static_cast<std::size_t>(f.order()) + 1);
  for (std::int64_t n = 0; n <= f.order(); ++n)
    out[n] = f[n] == 0 ? 0 : m - f[n];
  return ModSeries(std::move(out), f.order(), m);
}

ModSeries mul(const ModSeries& f, const ModSeries& g) {
  check_same_modulus(f, g);
  const std::int64_t m = f.modulus();
  const std::int64_t order = std::min(f.order(), g.order());
  std::vector<std::int64_t> out(static_cast<std::size_t>(order) + 1, 0);
  for (std::int64_t i = 0; i <= order; ++i) {
    if (f[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= order; ++j) {
      if (g[j] == 0) continue;
      out[i + j] = (out[i + j] + f[i] * g[j]) % m;
    }
  }
  return ModSeries(std::move(out), order, m);
}

ModSeries invert(const ModSeries& f) {
  const std::int64_t m = f.modulus();
  const std::int64_t inv0 = inverse_mod(f[0], m);
  const std::int64_t order = f.order();
  std::vector<std::int64_t> g(static_cast<std::size_t>(order) + 1, 0);
  g[0] = inv0;
  for (std::int64_t n = 1; n <= order; ++n) {
    std::int64_t acc = 0;
    for (std::int64_t i = 1; i <= n; ++i) acc = (acc + f[i] * g[n - i]) % m;
    g[n] = mod_residue(-(inv0 * acc % m), m);
  }
  return ModSeries(std::move(g), order, m);
}

ModSeries pow(const ModSeries& f, std::int64_t e) {
  const std::int64_t order = f.order();
  const std::int64_t m = f.modulus();
  std::vector<std::int64_t> one(static_cast<std::size_t>(order) + 1, 0);
  one[0] = 1;
  ModSeries result(std::move(one), order, m);
  if (e == 0) return result;
  ModSeries base = e < 0 ? invert(f) : f;
  auto mag = static_cast<std::uint64_t>(e < 0 ? -(e + 1) : e - 1) + 1;
  while (mag > 0) {
    if (mag & 1) result = mul(result, base);
    mag >>= 1;
    if (mag > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace qtau
