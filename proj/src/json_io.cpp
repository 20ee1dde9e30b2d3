#include "qtau/json_io.hpp"

#include <stdexcept>

namespace qtau {

nlohmann::json to_json(const IntSeries& series) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Int& c : series.coeffs()) coeffs.push_back(c.get_str());
  return {{"order", series.order()}, {"coeffs", std::move(coeffs)}};
}

IntSeries int_series_from_json(const nlohmann::json& j) {
  const auto order = j.at("order").get<std::int64_t>();
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_string())
      throw std::invalid_argument("series json: coefficients must be decimal strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  return IntSeries(std::move(coeffs), order);
}

nlohmann::json to_json(const ModSeries& series) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const std::int64_t c : series.coeffs()) coeffs.push_back(std::to_string(c));
  return {{"order", series.order()},
          {"modulus", series.modulus()},
          {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const TauTable& table) {
  nlohmann::json values = nlohmann::json::array();
  for (const Int& v : table.values) values.push_back(v.get_str());
  return {{"k", table.k},
          {"route", route_name(table.route)},
          {"max_n", table.max_n()},
          {"values", std::move(values)}};
}

nlohmann::json to_json(const CheckOutcome& outcome) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : outcome.params) params[key] = value;
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& c : outcome.counterexamples)
    counterexamples.push_back({{"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  nlohmann::json j = {{"id", outcome.id},
                      {"params", std::move(params)},
                      {"range", {outcome.lo, outcome.hi}},
                      {"status", status_name(outcome.status)},
                      {"counterexamples", std::move(counterexamples)},
                      {"counterexamples_total", outcome.counterexamples_total},
                      {"expected_fail", outcome.expected_fail},
                      {"elapsed_ms", outcome.elapsed_ms}};
  if (outcome.hypothesis_count >= 0) {
    j["hypothesis_count"] = outcome.hypothesis_count;
    j["not_applicable_count"] = outcome.not_applicable_count;
  }
  return j;
}

nlohmann::json to_json(const std::vector<CheckOutcome>& outcomes) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& outcome : outcomes) j.push_back(to_json(outcome));
  return j;
}

}  // namespace qtau
