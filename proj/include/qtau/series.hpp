#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qtau/bigint.hpp"

namespace qtau {

/// Dense truncated power series with exact integer coefficients.
/// coeffs()[i] is the coefficient of q^i; order() is the truncation bound
/// (inclusive). Values are immutable after construction; every operation
/// returns a new series. Binary operations truncate to the smaller order
/// rather than fabricating coefficients.
class IntSeries {
 public:
  IntSeries() : coeffs_(1) {}
  explicit IntSeries(std::int64_t order);
  IntSeries(std::vector<Int> coeffs, std::int64_t order);  // pads with zeros

  std::int64_t order() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const Int& operator[](std::int64_t n) const { return coeffs_[n]; }
  std::span<const Int> coeffs() const { return coeffs_; }

  bool operator==(const IntSeries&) const = default;

 private:
  std::vector<Int> coeffs_;
};

/// Truncated series with coefficients stored as canonical residues in
/// [0, modulus). Mirrors the IntSeries operations; reduce_mod commutes with
/// every one of them.
class ModSeries {
 public:
  ModSeries(std::int64_t order, std::int64_t modulus);
  ModSeries(std::vector<std::int64_t> coeffs, std::int64_t order,
            std::int64_t modulus);  // reduces and pads

  std::int64_t order() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t operator[](std::int64_t n) const { return coeffs_[n]; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  bool operator==(const ModSeries&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
  std::int64_t modulus_;
};

IntSeries make_series(std::vector<Int> coeffs, std::int64_t order);

// Bounds-checked coefficient access.
const Int& coeff(const IntSeries& f, std::int64_t n);
std::int64_t coeff(const ModSeries& f, std::int64_t n);

IntSeries add(const IntSeries& f, const IntSeries& g);
IntSeries negate(const IntSeries& f);
IntSeries mul(const IntSeries& f, const IntSeries& g);

// Series inverse; requires a unit constant term (+1 or -1 over the
// integers), rejected with std::domain_error otherwise.
IntSeries invert(const IntSeries& f);

// f^e by repeated squaring over the truncated product; e < 0 goes through
// invert. pow(f, 0) is the constant 1 at f's order.
IntSeries pow(const IntSeries& f, std::int64_t e);

ModSeries reduce_mod(const IntSeries& f, std::int64_t m);

ModSeries add(const ModSeries& f, const ModSeries& g);
ModSeries negate(const ModSeries& f);
ModSeries mul(const ModSeries& f, const ModSeries& g);
ModSeries invert(const ModSeries& f);  // constant term must be a unit mod m
ModSeries pow(const ModSeries& f, std::int64_t e);

}  // namespace qtau
