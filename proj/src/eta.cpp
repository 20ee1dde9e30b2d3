#include "qtau/eta.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <utility>

#include "qtau/arith.hpp"

namespace qtau {

namespace {

// Nonzero pentagonal offsets scale*(3l*l -+ l)/2 <= order with their signs,
// ascending. One such list drives a whole multiply/divide pass, so each
// pass costs O(order * sqrt(order/scale)) coefficient updates.
struct SparseTerm {
  std::int64_t offset;
  int sign;
};

std::vector<SparseTerm> pentagonal_terms(std::int64_t order, std::int64_t scale) {
  std::vector<SparseTerm> terms;
  for (std::int64_t l = 1;; ++l) {
    const std::int64_t low = scale * (l * (3 * l - 1) / 2);
    if (low > order) break;
    const int sign = (l % 2 == 0) ? 1 : -1;
    terms.push_back({low, sign});
    const std::int64_t high = scale * (l * (3 * l + 1) / 2);
    if (high <= order) terms.push_back({high, sign});
  }
  return terms;
}

// In-place c *= (1 + sum sign q^offset). Descending n keeps c[n - offset]
// untouched until n itself is finished.
void pentagonal_mul(std::vector<Int>& c, const std::vector<SparseTerm>& terms) {
  const auto order = static_cast<std::int64_t>(c.size()) - 1;
  for (std::int64_t n = order; n >= 1; --n) {
    Int& cn = c[n];
    for (const auto& t : terms) {
      if (t.offset > n) break;
      if (t.sign > 0)
        cn += c[n - t.offset];
      else
        cn -= c[n - t.offset];
    }
  }
}

// In-place c /= (1 + sum sign q^offset), solving f*g = h coefficient by
// coefficient; ascending n reads only already-final entries.
void pentagonal_div(std::vector<Int>& c, const std::vector<SparseTerm>& terms) {
  const auto order = static_cast<std::int64_t>(c.size()) - 1;
  for (std::int64_t n = 1; n <= order; ++n) {
    Int& cn = c[n];
    for (const auto& t : terms) {
      if (t.offset > n) break;
      if (t.sign > 0)
        cn -= c[n - t.offset];
      else
        cn += c[n - t.offset];
    }
  }
}

void pentagonal_mul_mod(std::vector<std::int64_t>& c,
                        const std::vector<SparseTerm>& terms, std::int64_t m) {
  const auto order = static_cast<std::int64_t>(c.size()) - 1;
  for (std::int64_t n = order; n >= 1; --n) {
    std::int64_t v = c[n];
    for (const auto& t : terms) {
      if (t.offset > n) break;
      if (t.sign > 0) {
        v += c[n - t.offset];
        if (v >= m) v -= m;
      } else {
        v -= c[n - t.offset];
        if (v < 0) v += m;
      }
    }
    c[n] = v;
  }
}

void pentagonal_div_mod(std::vector<std::int64_t>& c,
                        const std::vector<SparseTerm>& terms, std::int64_t m) {
  const auto order = static_cast<std::int64_t>(c.size()) - 1;
  for (std::int64_t n = 1; n <= order; ++n) {
    std::int64_t v = c[n];
    for (const auto& t : terms) {
      if (t.offset > n) break;
      if (t.sign > 0) {
        v -= c[n - t.offset];
        if (v < 0) v += m;
      } else {
        v += c[n - t.offset];
        if (v >= m) v -= m;
      }
    }
    c[n] = v;
  }
}

template <typename Coeff, typename MulPass, typename DivPass>
std::vector<Coeff> expand(const EtaProductSpec& spec, std::int64_t order,
                          MulPass mul_pass, DivPass div_pass) {
  const std::int64_t inner = order - spec.delta();
  std::vector<Coeff> c(static_cast<std::size_t>(inner) + 1, Coeff(0));
  c[0] = 1;
  for (const auto& factor : spec.factors()) {
    const auto terms = pentagonal_terms(inner, factor.scale);
    const std::int64_t reps =
        factor.exponent < 0 ? -factor.exponent : factor.exponent;
    for (std::int64_t i = 0; i < reps; ++i) {
      if (factor.exponent > 0)
        mul_pass(c, terms);
      else
        div_pass(c, terms);
    }
  }
  if (spec.delta() == 0) return c;
  std::vector<Coeff> shifted(static_cast<std::size_t>(order) + 1, Coeff(0));
  for (std::int64_t n = 0; n <= inner; ++n)
    shifted[n + spec.delta()] = std::move(c[n]);
  return shifted;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }

  std::int64_t parse_int(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0)
      throw SpecParseError(std::string("expected ") + what, start);
    return std::strtoll(std::string(text.substr(start, pos - start)).c_str(),
                        nullptr, 10);
  }

  void expect(char ch, const char* what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch)
      throw SpecParseError(std::string("expected ") + what, pos);
    ++pos;
  }
};

}  // namespace

SpecParseError::SpecParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

EtaProductSpec::EtaProductSpec(std::int64_t delta, std::vector<Factor> factors)
    : delta_(delta) {
  if (delta < 0)
    throw std::invalid_argument("eta product: delta must be nonnegative");
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& f : factors) {
    if (f.scale < 1)
      throw std::invalid_argument("eta product: scales must be positive");
    merged[f.scale] += f.exponent;
  }
  for (const auto& [scale, exponent] : merged)
    if (exponent != 0) factors_.push_back({scale, exponent});
}

EtaProductSpec EtaProductSpec::parse(std::string_view text) {
  Cursor cur{text};
  const std::int64_t delta = cur.parse_int("delta");
  if (delta < 0) throw SpecParseError("delta must be nonnegative", 0);
  cur.expect(';', "';' after delta");
  std::vector<Factor> factors;
  while (!cur.done()) {
    cur.skip_ws();
    const std::size_t factor_pos = cur.pos;
    const std::int64_t scale = cur.parse_int("scale");
    if (scale < 1) throw SpecParseError("scale must be positive", factor_pos);
    cur.expect('^', "'^' between scale and exponent");
    const std::int64_t exponent = cur.parse_int("exponent");
    factors.push_back({scale, exponent});
  }
  return EtaProductSpec(delta, std::move(factors));
}

std::string EtaProductSpec::to_string() const {
  std::string out = std::to_string(delta_) + ";";
  for (const auto& f : factors_)
    out += " " + std::to_string(f.scale) + "^" + std::to_string(f.exponent);
  return out;
}

IntSeries eta_factor(std::int64_t scale, std::int64_t order) {
  if (scale < 1) throw std::invalid_argument("eta_factor: scale must be positive");
  if (order < 0) throw std::invalid_argument("eta_factor: order must be nonnegative");
  std::vector<Int> c(static_cast<std::size_t>(order) + 1);
  for (const auto& e : PentagonalTable::up_to(order / scale).entries)
    c[scale * e.value] = e.sign;
  return IntSeries(std::move(c), order);
}

IntSeries eta_product(const EtaProductSpec& spec, std::int64_t order) {
  if (order < 0) throw std::invalid_argument("eta_product: order must be nonnegative");
  if (spec.delta() > order) return IntSeries(order);
  return IntSeries(expand<Int>(spec, order, pentagonal_mul, pentagonal_div),
                   order);
}

ModSeries eta_product_mod(const EtaProductSpec& spec, std::int64_t order,
                          std::int64_t modulus) {
  if (order < 0) throw std::invalid_argument("eta_product: order must be nonnegative");
  if (spec.delta() > order) return ModSeries(order, modulus);
  // Fail fast on a bad modulus instead of after the whole expansion.
  { ModSeries probe(0, modulus); (void)probe; }
  auto mul_pass = [modulus](std::vector<std::int64_t>& c,
                            const std::vector<SparseTerm>& terms) {
    pentagonal_mul_mod(c, terms, modulus);
  };
  auto div_pass = [modulus](std::vector<std::int64_t>& c,
                            const std::vector<SparseTerm>& terms) {
    pentagonal_div_mod(c, terms, modulus);
  };
  return ModSeries(expand<std::int64_t>(spec, order, mul_pass, div_pass), order,
                   modulus);
}

}  // namespace qtau
