#include "qtau/tau.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "qtau/arith.hpp"
#include "qtau/eta.hpp"
#include "qtau/partitions.hpp"

namespace qtau {

namespace {

void check_args(std::int64_t k, std::int64_t max_n) {
  if (k == 0) throw std::invalid_argument("tau: k must be nonzero");
  if (max_n < 1) throw std::invalid_argument("tau: max_n must be at least 1");
}

}  // namespace

const Int& TauTable::at(std::int64_t n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("tau table: n out of range");
  return values[n - 1];
}

TauTable tau_series(std::int64_t k, std::int64_t max_n) {
  check_args(k, max_n);
  const IntSeries s = eta_product(EtaProductSpec(1, {{1, k}}), max_n);
  TauTable table{k, TauRoute::series, {}};
  table.values.reserve(max_n);
  for (std::int64_t n = 1; n <= max_n; ++n) table.values.push_back(s[n]);
  return table;
}

TauTable tau_recurrence(std::int64_t k, std::int64_t max_n) {
  check_args(k, max_n);
  std::vector<std::int64_t> sig(static_cast<std::size_t>(max_n) + 1, 0);
  for (std::int64_t i = 1; i <= max_n; ++i) sig[i] = sigma(i);

  TauTable table{k, TauRoute::recurrence, {}};
  table.values.reserve(max_n);
  table.values.emplace_back(1);  // tau_k(1)
  for (std::int64_t n = 1; n < max_n; ++n) {
    Int acc = 0;
    for (std::int64_t i = 1; i <= n; ++i)
      acc += table.values[i - 1] * sig[n + 1 - i];
    Int numerator = -k * acc;
    if (mpz_divisible_ui_p(numerator.get_mpz_t(),
                           static_cast<unsigned long>(n)) == 0)
      throw std::logic_error("tau recurrence: inexact division at n=" +
                             std::to_string(n) + " for k=" + std::to_string(k));
    table.values.push_back(numerator / n);
  }
  return table;
}

Int tau_partition_sum(std::int64_t k, std::int64_t n) {
  if (k == 0) throw std::invalid_argument("tau: k must be nonzero");
  if (n < 1) throw std::invalid_argument("tau: n must be at least 1");
  if (n > kTauPartitionSumCap)
    throw std::invalid_argument("tau_partition_sum: capped at n <= " +
                                std::to_string(kTauPartitionSumCap));
  const std::int64_t target = n - 1;
  Int total = 0;
  if (k > 0) {
    enum_partitions(target, FrequencyConstraint::max_frequency(k),
                    [&](const PartitionShape& p) {
                      Int term = 1;
                      std::int64_t freq_sum = 0;
                      for (const auto& pf : p.pairs) {
                        term *= binom_exact(k, pf.frequency);
                        freq_sum += pf.frequency;
                      }
                      if (freq_sum % 2 == 0)
                        total += term;
                      else
                        total -= term;
                    });
  } else {
    const std::int64_t kappa = -k;
    enum_partitions(target, FrequencyConstraint::unconstrained(),
                    [&](const PartitionShape& p) {
                      Int term = 1;
                      for (const auto& pf : p.pairs)
                        term *= binom_exact(pf.frequency + kappa - 1, kappa - 1);
                      total += term;
                    });
  }
  return total;
}

TauTable tau_partition_table(std::int64_t k, std::int64_t max_n) {
  check_args(k, max_n);
  TauTable table{k, TauRoute::partition_sum, {}};
  table.values.reserve(max_n);
  for (std::int64_t n = 1; n <= max_n; ++n)
    table.values.push_back(tau_partition_sum(k, n));
  return table;
}

Int tau3_closed(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("tau3_closed: n must be at least 1");
  return triangular_coeff(n - 1);
}

const char* route_name(TauRoute route) {
  switch (route) {
    case TauRoute::series: return "series";
    case TauRoute::recurrence: return "recurrence";
    case TauRoute::partition_sum: return "partition-sum";
  }
  return "?";
}

TauRoute route_from_name(const std::string& name) {
  if (name == "series") return TauRoute::series;
  if (name == "recurrence") return TauRoute::recurrence;
  if (name == "partition-sum" || name == "partition_sum")
    return TauRoute::partition_sum;
  throw std::invalid_argument("unknown tau route: " + name);
}

void write_csv(const TauTable& table, std::ostream& out) {
  out << "n,value\n";
  for (std::int64_t n = 1; n <= table.max_n(); ++n)
    out << n << ',' << table.at(n).get_str() << '\n';
}

}  // namespace qtau
