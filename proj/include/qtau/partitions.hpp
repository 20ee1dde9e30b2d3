#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qtau/bigint.hpp"
#include "qtau/series.hpp"

namespace qtau {

/// A partition in frequency form a1^f1 ... ar^fr, parts strictly decreasing.
struct PartitionShape {
  struct PartFreq {
    std::int64_t part;
    std::int64_t frequency;
    bool operator==(const PartFreq&) const = default;
  };
  std::vector<PartFreq> pairs;

  std::int64_t total() const;
  bool operator==(const PartitionShape&) const = default;
};

class FrequencyConstraint {
 public:
  enum class Kind {
    unconstrained,
    max_frequency,         // every frequency <= t
    frequency_set,         // every frequency in a finite set A
    distinct_parts,        // every frequency = 1
    no_part_divisible_by,  // no part divisible by t
  };

  static FrequencyConstraint unconstrained();
  static FrequencyConstraint max_frequency(std::int64_t t);
  static FrequencyConstraint frequency_set(std::set<std::int64_t> allowed);
  static FrequencyConstraint distinct_parts();
  static FrequencyConstraint no_part_divisible_by(std::int64_t t);

  Kind kind() const { return kind_; }
  std::int64_t bound() const { return bound_; }
  const std::set<std::int64_t>& allowed_frequencies() const { return set_; }

  bool admits_part(std::int64_t part) const;
  bool admits_frequency(std::int64_t frequency) const;

 private:
  Kind kind_ = Kind::unconstrained;
  std::int64_t bound_ = 0;
  std::set<std::int64_t> set_;
};

// Visits each constrained partition of n exactly once, in reverse
// lexicographic order on the part sequence ({3} before {2,1} before
// {1,1,1}); n = 0 yields the empty partition.
void enum_partitions(std::int64_t n, const FrequencyConstraint& constraint,
                     const std::function<void(const PartitionShape&)>& visit);

std::vector<PartitionShape> list_partitions(std::int64_t n,
                                            const FrequencyConstraint& constraint);
std::uint64_t count_partitions(std::int64_t n,
                               const FrequencyConstraint& constraint);

// p(n) by the pentagonal recurrence with a process-wide memo table; the
// table only grows and is read under a lock.
Int p_count(std::int64_t n);
std::vector<Int> p_count_range(std::int64_t max_n);  // p(0..max_n)

// Partitions into distinct parts, q(n).
Int q_distinct(std::int64_t n);

// t-regular partitions R_t(n) (no part divisible by t), t >= 2.
Int regular_count(std::int64_t t, std::int64_t n);

// d_t(n): partitions with every frequency <= t, t >= 1.
Int bounded_frequency_count(std::int64_t t, std::int64_t n);

// F_A(n): partitions with every frequency in A.
Int frequency_set_count(const std::set<std::int64_t>& allowed, std::int64_t n);

// Sum of p(a1)...p(ak) over weak compositions a1+...+ak = n.
Int composition_weighted_sum(std::int64_t k, std::int64_t n);

// Whole tables as series (coefficient n = count at n). These are the bulk
// routes behind the point functions above; the product routes here are
// independent of the eta-quotient route used for regular_series.
IntSeries distinct_series(std::int64_t order);              // prod (1+q^m)
IntSeries bounded_frequency_series(std::int64_t t, std::int64_t order);
IntSeries frequency_set_series(const std::set<std::int64_t>& allowed,
                               std::int64_t order);
IntSeries regular_series(std::int64_t t, std::int64_t order);
IntSeries partition_series(std::int64_t order);             // p(n) from the memo table
IntSeries composition_weighted_series(std::int64_t k, std::int64_t order);

}  // namespace qtau
