#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtau/bigint.hpp"

namespace qtau {

// tau_k(n) is the coefficient of q^n in q * prod_m (1 - q^m)^k, so the
// series coefficient at index n holds tau_k(n+1). Always tau_k(1) = 1 and
// tau_k(2) = -k, for either sign of k.
enum class TauRoute { series, recurrence, partition_sum };

struct TauTable {
  std::int64_t k = 0;
  TauRoute route = TauRoute::series;
  std::vector<Int> values;  // values[i] = tau_k(i+1)

  std::int64_t max_n() const {
    return static_cast<std::int64_t>(values.size());
  }
  const Int& at(std::int64_t n) const;  // 1-based
};

// Route 1: expand the eta product.
TauTable tau_series(std::int64_t k, std::int64_t max_n);

// Route 2: tau_k(1) = 1 and n tau_k(n+1) = -k sum_{i<=n} tau_k(i) sigma(n+1-i).
// The division by n is exact over the integers; an inexact division throws,
// naming the offending n (it would mean the recurrence itself is wrong).
TauTable tau_recurrence(std::int64_t k, std::int64_t max_n);

// Route 3: the binomial-weighted partition sum over partitions of n-1.
// For k > 0 only frequencies <= k contribute, each partition weighing
// (-1)^{sum f_i} prod C(k, f_i); for k < 0 every partition contributes
// prod C(f_i + |k| - 1, |k| - 1). Exponential; a verification oracle capped
// at n <= kTauPartitionSumCap.
Int tau_partition_sum(std::int64_t k, std::int64_t n);
TauTable tau_partition_table(std::int64_t k, std::int64_t max_n);

inline constexpr std::int64_t kTauPartitionSumCap = 64;

// tau_3(n) = triangular_coeff(n-1): the triple product collapses the cube
// of the eta factor onto triangular numbers.
Int tau3_closed(std::int64_t n);

const char* route_name(TauRoute route);
TauRoute route_from_name(const std::string& name);

void write_csv(const TauTable& table, std::ostream& out);

}  // namespace qtau
