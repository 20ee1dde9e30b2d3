#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qtau {

// Exact arbitrary-precision integer. Series coefficients such as those of
// prod(1-q^m)^{-k} outgrow 64-bit words long before the orders we scan.
using Int = mpz_class;

// Canonical residue in [0, m), any sign of v.
inline std::int64_t mod_residue(const Int& v, std::int64_t m) {
  return static_cast<std::int64_t>(
      mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

inline std::int64_t mod_residue(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace qtau
