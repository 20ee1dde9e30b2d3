#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qtau {

/// One catalog entry. `source` names the statement the check verifies;
/// `expected_fail` marks audit entries whose printed claim is predicted to
/// be refuted by computation (run_all counts their failure as the audit
/// succeeding).
struct CheckInfo {
  std::string id;
  std::string description;
  std::string source;
  bool expected_fail = false;
  std::int64_t quick_limit = 300;
  std::int64_t full_limit = 1000;
};

enum class CheckStatus { pass, fail };

struct Counterexample {
  std::int64_t n;
  std::string lhs;
  std::string rhs;
  bool operator==(const Counterexample&) const = default;
};

using CheckParams = std::map<std::string, std::int64_t>;

struct CheckOutcome {
  std::string id;
  CheckParams params;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  CheckStatus status = CheckStatus::pass;
  // Hypothesis-conditioned checks count how often the hypothesis held and
  // how many scanned indices were vacuous; -1 on unconditional checks.
  std::int64_t hypothesis_count = -1;
  std::int64_t not_applicable_count = -1;
  std::vector<Counterexample> counterexamples;  // first few, in scan order
  std::int64_t counterexamples_total = 0;
  bool expected_fail = false;
  std::int64_t elapsed_ms = 0;
};

enum class Profile { quick, full };

// The full catalog, in a fixed order; ids are unique.
const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(const std::string& id);

// Scans the check's natural index from its lower bound to `limit`.
// Deterministic for fixed (id, limit, params). Unknown ids, bad params and
// limits beyond the hard ceiling are rejected.
CheckOutcome run_check(const std::string& id, std::int64_t limit,
                       const CheckParams& params = {});

std::vector<CheckOutcome> run_all(Profile profile);

// pass expected for normal entries, fail expected for audit entries.
bool matches_expectation(const CheckOutcome& outcome);

// Hard ceiling on run_check limits; override with QTAU_LIMIT_CEILING.
std::int64_t limit_ceiling();

const char* status_name(CheckStatus status);

}  // namespace qtau
