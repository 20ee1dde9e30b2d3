#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtau/series.hpp"

namespace qtau {

/// Symbolic q^delta * prod_j prod_m (1 - q^{c_j m})^{e_j}. Scales are
/// positive; duplicate scales merge by summing exponents and zero net
/// exponents drop out, so two specs describing the same product compare
/// equal.
class EtaProductSpec {
 public:
  struct Factor {
    std::int64_t scale;
    std::int64_t exponent;
    bool operator==(const Factor&) const = default;
  };

  EtaProductSpec() = default;  // empty product: the constant 1
  EtaProductSpec(std::int64_t delta, std::vector<Factor> factors);

  std::int64_t delta() const { return delta_; }
  const std::vector<Factor>& factors() const { return factors_; }

  // Grammar: "<delta>; <scale>^<exponent> ...", e.g. "1; 1^24" or
  // "0; 9^1 1^-1". Whitespace separates factors.
  static EtaProductSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const EtaProductSpec&) const = default;

 private:
  std::int64_t delta_ = 0;
  std::vector<Factor> factors_;  // sorted by scale
};

class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// prod_m (1 - q^{scale*m}) expanded through the pentagonal number theorem:
// the coefficient of q^{scale*(3l*l -+ l)/2} is (-1)^l, all others vanish.
IntSeries eta_factor(std::int64_t scale, std::int64_t order);

// Expansion of a spec to the given order. Positive exponents are repeated
// sparse multiplications by the pentagonal support; negative exponents are
// repeated sparse divisions (solving f*g = h coefficient by coefficient),
// factor by factor, never by inverting a fully multiplied product.
IntSeries eta_product(const EtaProductSpec& spec, std::int64_t order);

// Same kernel with coefficients reduced mod m at every step.
ModSeries eta_product_mod(const EtaProductSpec& spec, std::int64_t order,
                          std::int64_t modulus);

}  // namespace qtau
