#include "qtau/partitions.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "qtau/eta.hpp"

namespace qtau {

namespace {

void check_nonnegative(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
}

struct PartitionEnumerator {
  const FrequencyConstraint& constraint;
  const std::function<void(const PartitionShape&)>& visit;
  PartitionShape current;

  // Parts descend and, for a fixed part, frequencies descend: this emits
  // the reverse-lexicographic order on part sequences.
  void recurse(std::int64_t remaining, std::int64_t max_part) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
      if (!constraint.admits_part(part)) continue;
      for (std::int64_t f = remaining / part; f >= 1; --f) {
        if (!constraint.admits_frequency(f)) continue;
        current.pairs.push_back({part, f});
        recurse(remaining - part * f, part - 1);
        current.pairs.pop_back();
      }
    }
  }
};

std::mutex p_memo_mutex;
std::vector<Int> p_memo;  // p_memo[n] = p(n); grows monotonically

void extend_p_memo_locked(std::int64_t max_n) {
  if (p_memo.empty()) p_memo.emplace_back(1);
  for (auto n = static_cast<std::int64_t>(p_memo.size()); n <= max_n; ++n) {
    Int v = 0;
    for (std::int64_t l = 1;; ++l) {
      const std::int64_t low = l * (3 * l - 1) / 2;
      if (low > n) break;
      const bool plus = (l % 2 == 1);
      if (plus)
        v += p_memo[n - low];
      else
        v -= p_memo[n - low];
      const std::int64_t high = l * (3 * l + 1) / 2;
      if (high <= n) {
        if (plus)
          v += p_memo[n - high];
        else
          v -= p_memo[n - high];
      }
    }
    p_memo.push_back(std::move(v));
  }
}

}  // namespace

std::int64_t PartitionShape::total() const {
  std::int64_t sum = 0;
  for (const auto& pf : pairs) sum += pf.part * pf.frequency;
  return sum;
}

FrequencyConstraint FrequencyConstraint::unconstrained() {
  return FrequencyConstraint{};
}

FrequencyConstraint FrequencyConstraint::max_frequency(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("max_frequency: t must be positive");
  FrequencyConstraint c;
  c.kind_ = Kind::max_frequency;
  c.bound_ = t;
  return c;
}

FrequencyConstraint FrequencyConstraint::frequency_set(std::set<std::int64_t> allowed) {
  if (allowed.empty())
    throw std::invalid_argument("frequency_set: the set must be nonempty");
  if (*allowed.begin() < 1)
    throw std::invalid_argument("frequency_set: frequencies must be positive");
  FrequencyConstraint c;
  c.kind_ = Kind::frequency_set;
  c.set_ = std::move(allowed);
  return c;
}

FrequencyConstraint FrequencyConstraint::distinct_parts() {
  FrequencyConstraint c;
  c.kind_ = Kind::distinct_parts;
  return c;
}

FrequencyConstraint FrequencyConstraint::no_part_divisible_by(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("no_part_divisible_by: t must be positive");
  FrequencyConstraint c;
  c.kind_ = Kind::no_part_divisible_by;
  c.bound_ = t;
  return c;
}

bool FrequencyConstraint::admits_part(std::int64_t part) const {
  return kind_ != Kind::no_part_divisible_by || part % bound_ != 0;
}

bool FrequencyConstraint::admits_frequency(std::int64_t frequency) const {
  switch (kind_) {
    case Kind::unconstrained:
    case Kind::no_part_divisible_by:
      return true;
    case Kind::max_frequency:
      return frequency <= bound_;
    case Kind::distinct_parts:
      return frequency == 1;
    case Kind::frequency_set:
      return set_.count(frequency) != 0;
  }
  return false;
}

void enum_partitions(std::int64_t n, const FrequencyConstraint& constraint,
                     const std::function<void(const PartitionShape&)>& visit) {
  check_nonnegative(n);
  PartitionEnumerator e{constraint, visit, {}};
  e.recurse(n, n);
}

std::vector<PartitionShape> list_partitions(std::int64_t n,
                                            const FrequencyConstraint& constraint) {
  std::vector<PartitionShape> out;
  enum_partitions(n, constraint,
                  [&](const PartitionShape& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_partitions(std::int64_t n, const FrequencyConstraint& constraint) {
  std::uint64_t count = 0;
  enum_partitions(n, constraint, [&](const PartitionShape&) { ++count; });
  return count;
}

Int p_count(std::int64_t n) {
  check_nonnegative(n);
  std::lock_guard<std::mutex> lock(p_memo_mutex);
  extend_p_memo_locked(n);
  return p_memo[n];
}

std::vector<Int> p_count_range(std::int64_t max_n) {
  check_nonnegative(max_n);
  std::lock_guard<std::mutex> lock(p_memo_mutex);
  extend_p_memo_locked(max_n);
  return {p_memo.begin(), p_memo.begin() + max_n + 1};
}

Int q_distinct(std::int64_t n) {
  check_nonnegative(n);
  return distinct_series(n)[n];
}

Int regular_count(std::int64_t t, std::int64_t n) {
  check_nonnegative(n);
  return regular_series(t, n)[n];
}

Int bounded_frequency_count(std::int64_t t, std::int64_t n) {
  check_nonnegative(n);
  return bounded_frequency_series(t, n)[n];
}

Int frequency_set_count(const std::set<std::int64_t>& allowed, std::int64_t n) {
  check_nonnegative(n);
  return frequency_set_series(allowed, n)[n];
}

Int composition_weighted_sum(std::int64_t k, std::int64_t n) {
  check_nonnegative(n);
  return composition_weighted_series(k, n)[n];
}

IntSeries distinct_series(std::int64_t order) {
  return bounded_frequency_series(1, order);
}

IntSeries bounded_frequency_series(std::int64_t t, std::int64_t order) {
  if (t < 1) throw std::invalid_argument("bounded_frequency_series: t must be positive");
  check_nonnegative(order);
  std::vector<Int> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  // Multiply in place by 1 + q^m + ... + q^{tm}, one m at a time.
  for (std::int64_t m = 1; m <= order; ++m) {
    for (std::int64_t n = order; n >= m; --n) {
      Int& cn = c[n];
      for (std::int64_t j = 1; j <= t && j * m <= n; ++j) cn += c[n - j * m];
    }
  }
  return IntSeries(std::move(c), order);
}

IntSeries frequency_set_series(const std::set<std::int64_t>& allowed,
                               std::int64_t order) {
  if (allowed.empty())
    throw std::invalid_argument("frequency_set_series: the set must be nonempty");
  if (*allowed.begin() < 1)
    throw std::invalid_argument("frequency_set_series: frequencies must be positive");
  check_nonnegative(order);
  std::vector<Int> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  // Multiply in place by 1 + sum_{a in A} q^{am}.
  for (std::int64_t m = 1; m <= order; ++m) {
    for (std::int64_t n = order; n >= m; --n) {
      Int& cn = c[n];
      for (const std::int64_t a : allowed) {
        if (a * m > n) break;
        cn += c[n - a * m];
      }
    }
  }
  return IntSeries(std::move(c), order);
}

IntSeries regular_series(std::int64_t t, std::int64_t order) {
  if (t < 2) throw std::invalid_argument("regular_series: t must be at least 2");
  return eta_product(EtaProductSpec(0, {{t, 1}, {1, -1}}), order);
}

IntSeries partition_series(std::int64_t order) {
  return IntSeries(p_count_range(order), order);
}

IntSeries composition_weighted_series(std::int64_t k, std::int64_t order) {
  if (k < 1) throw std::invalid_argument("composition_weighted_series: k must be positive");
  check_nonnegative(order);
  const IntSeries p = partition_series(order);
  IntSeries result = p;
  for (std::int64_t i = 1; i < k; ++i) result = mul(result, p);
  return result;
}

}  // namespace qtau
