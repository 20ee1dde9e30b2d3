#pragma once

#include <json.hpp>

#include "qtau/congruences.hpp"
#include "qtau/series.hpp"
#include "qtau/tau.hpp"

namespace qtau {

// Series serialize as {"order": N, "coeffs": ["1", "-24", ...]} with
// decimal-string coefficients: values routinely exceed the 53-bit range
// JSON numbers can carry faithfully.
nlohmann::json to_json(const IntSeries& series);
IntSeries int_series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModSeries& series);

nlohmann::json to_json(const TauTable& table);

nlohmann::json to_json(const CheckOutcome& outcome);
nlohmann::json to_json(const std::vector<CheckOutcome>& outcomes);

}  // namespace qtau
