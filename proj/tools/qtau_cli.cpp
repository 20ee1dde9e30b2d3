#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qtau/arith.hpp"
#include "qtau/congruences.hpp"
#include "qtau/eta.hpp"
#include "qtau/json_io.hpp"
#include "qtau/partitions.hpp"
#include "qtau/tau.hpp"

namespace {

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormatNames = {
    {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

// One canonical dump so emitted JSON re-serializes byte-identically.
void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void print_value_table(const std::vector<std::pair<std::int64_t, std::string>>& rows,
                       Format format) {
  if (format == Format::csv) {
    std::cout << "n,value\n";
    for (const auto& [n, value] : rows) std::cout << n << ',' << value << '\n';
    return;
  }
  std::size_t n_width = 1, v_width = 1;
  for (const auto& [n, value] : rows) {
    n_width = std::max(n_width, std::to_string(n).size());
    v_width = std::max(v_width, value.size());
  }
  for (const auto& [n, value] : rows)
    std::cout << std::setw(static_cast<int>(n_width)) << n << "  "
              << std::setw(static_cast<int>(v_width)) << value << '\n';
}

int run_tau(std::int64_t k, std::int64_t max_n, std::optional<std::int64_t> modulus,
            Format format, const std::string& route_name_arg) {
  const qtau::TauRoute route = qtau::route_from_name(route_name_arg);
  qtau::TauTable table;
  switch (route) {
    case qtau::TauRoute::series: table = qtau::tau_series(k, max_n); break;
    case qtau::TauRoute::recurrence: table = qtau::tau_recurrence(k, max_n); break;
    case qtau::TauRoute::partition_sum:
      table = qtau::tau_partition_table(k, max_n);
      break;
  }
  if (modulus) {
    for (auto& v : table.values) v = qtau::mod_residue(v, *modulus);
  }
  if (format == Format::json) {
    nlohmann::json j = qtau::to_json(table);
    if (modulus) j["modulus"] = *modulus;
    emit_json(j);
    return 0;
  }
  std::vector<std::pair<std::int64_t, std::string>> rows;
  for (std::int64_t n = 1; n <= table.max_n(); ++n)
    rows.emplace_back(n, table.at(n).get_str());
  print_value_table(rows, format);
  return 0;
}

int run_partition(const std::string& fn, std::int64_t t,
                  const std::vector<std::int64_t>& set_values, std::int64_t max_n,
                  Format format) {
  qtau::IntSeries series(0);
  nlohmann::json meta = {{"fn", fn}, {"max_n", max_n}};
  if (fn == "p") {
    series = qtau::partition_series(max_n);
  } else if (fn == "q") {
    series = qtau::distinct_series(max_n);
  } else if (fn == "d") {
    if (t < 1) throw std::invalid_argument("partition --fn d needs --t >= 1");
    series = qtau::bounded_frequency_series(t, max_n);
    meta["t"] = t;
  } else if (fn == "R") {
    if (t < 2) throw std::invalid_argument("partition --fn R needs --t >= 2");
    series = qtau::regular_series(t, max_n);
    meta["t"] = t;
  } else if (fn == "F") {
    std::set<std::int64_t> allowed(set_values.begin(), set_values.end());
    series = qtau::frequency_set_series(allowed, max_n);
    meta["set"] = set_values;
  } else {
    throw std::invalid_argument("partition: --fn must be one of p, q, d, R, F");
  }
  if (format == Format::json) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& c : series.coeffs()) values.push_back(c.get_str());
    meta["values"] = std::move(values);
    emit_json(meta);
    return 0;
  }
  std::vector<std::pair<std::int64_t, std::string>> rows;
  for (std::int64_t n = 0; n <= series.order(); ++n)
    rows.emplace_back(n, series[n].get_str());
  print_value_table(rows, format);
  return 0;
}

int run_series(const std::string& spec_text, std::int64_t order,
               std::optional<std::int64_t> modulus, Format format) {
  const qtau::EtaProductSpec spec = qtau::EtaProductSpec::parse(spec_text);
  if (modulus) {
    const qtau::ModSeries series = qtau::eta_product_mod(spec, order, *modulus);
    if (format == Format::json) {
      emit_json(qtau::to_json(series));
      return 0;
    }
    std::vector<std::pair<std::int64_t, std::string>> rows;
    for (std::int64_t n = 0; n <= series.order(); ++n)
      rows.emplace_back(n, std::to_string(series[n]));
    print_value_table(rows, format);
    return 0;
  }
  const qtau::IntSeries series = qtau::eta_product(spec, order);
  if (format == Format::json) {
    emit_json(qtau::to_json(series));
    return 0;
  }
  std::vector<std::pair<std::int64_t, std::string>> rows;
  for (std::int64_t n = 0; n <= series.order(); ++n)
    rows.emplace_back(n, series[n].get_str());
  print_value_table(rows, format);
  return 0;
}

int run_verify(const std::vector<std::string>& ids, std::optional<std::int64_t> limit,
               const std::string& profile_name, Format format) {
  const qtau::Profile profile =
      profile_name == "full" ? qtau::Profile::full : qtau::Profile::quick;

  std::vector<std::string> selected = ids;
  if (selected.empty())
    for (const auto& info : qtau::registry()) selected.push_back(info.id);

  std::vector<qtau::CheckOutcome> outcomes;
  for (const auto& id : selected) {
    const qtau::CheckInfo* info = qtau::find_check(id);
    if (info == nullptr) throw std::invalid_argument("unknown check id: " + id);
    const std::int64_t check_limit =
        limit ? *limit
              : (profile == qtau::Profile::full ? info->full_limit
                                                : info->quick_limit);
    outcomes.push_back(qtau::run_check(id, check_limit));
  }

  bool all_expected = true;
  for (const auto& o : outcomes) all_expected &= qtau::matches_expectation(o);

  if (format == Format::json) {
    emit_json(qtau::to_json(outcomes));
    return all_expected ? 0 : 1;
  }

  if (format == Format::csv) {
    std::cout << "id,status,expected_fail,lo,hi,counterexamples,elapsed_ms\n";
    for (const auto& o : outcomes)
      std::cout << o.id << ',' << qtau::status_name(o.status) << ','
                << (o.expected_fail ? 1 : 0) << ',' << o.lo << ',' << o.hi << ','
                << o.counterexamples_total << ',' << o.elapsed_ms << '\n';
    return all_expected ? 0 : 1;
  }

  std::size_t id_width = 2;
  for (const auto& o : outcomes) id_width = std::max(id_width, o.id.size());
  int passed = 0, audits_confirmed = 0, unexpected = 0;
  for (const auto& o : outcomes) {
    const bool ok = qtau::matches_expectation(o);
    std::ostringstream status;
    status << qtau::status_name(o.status);
    if (o.expected_fail)
      status << (o.status == qtau::CheckStatus::fail ? " (audit: refuted as predicted)"
                                                     : " (audit: expected a failure)");
    std::cout << std::left << std::setw(static_cast<int>(id_width)) << o.id
              << "  " << std::setw(34) << status.str() << " range [" << o.lo
              << "," << o.hi << "]";
    if (o.hypothesis_count >= 0)
      std::cout << "  hypothesis " << o.hypothesis_count << "/"
                << (o.hypothesis_count + o.not_applicable_count);
    std::cout << "  " << o.elapsed_ms << " ms";
    if (!ok) std::cout << "  <-- UNEXPECTED";
    std::cout << '\n';
    for (const auto& c : o.counterexamples)
      std::cout << "    n=" << c.n << "  lhs=" << c.lhs << "  rhs=" << c.rhs
                << '\n';
    if (o.counterexamples_total >
        static_cast<std::int64_t>(o.counterexamples.size()))
      std::cout << "    ... " << o.counterexamples_total
                << " counterexamples in total\n";
    if (!ok)
      ++unexpected;
    else if (o.expected_fail)
      ++audits_confirmed;
    else
      ++passed;
  }
  std::cout << passed << " passed, " << audits_confirmed
            << " audit(s) refuted as predicted, " << unexpected
            << " unexpected\n";
  return all_expected ? 0 : 1;
}

std::uint64_t coeff_checksum(const qtau::IntSeries& series) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& c : series.coeffs()) {
    const std::uint64_t low = mpz_get_ui(c.get_mpz_t());
    const std::uint64_t word =
        mpz_sgn(c.get_mpz_t()) < 0 ? ~low + 1 : low;  // value mod 2^64
    h = (h ^ word) * 1099511628211ULL;
  }
  return h;
}

int run_bench(std::int64_t order) {
  const std::vector<std::pair<std::string, qtau::EtaProductSpec>> cases = {
      {"q E(q)^24", qtau::EtaProductSpec(1, {{1, 24}})},
      {"1/E(q)", qtau::EtaProductSpec(0, {{1, -1}})},
  };
  for (const auto& [name, spec] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const qtau::IntSeries series = qtau::eta_product(spec, order);
    const auto ms = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count() /
                    1000.0;
    std::cout << name << "  order " << order << "  " << std::fixed
              << std::setprecision(3) << ms << " ms  checksum "
              << std::hex << coeff_checksum(series) << std::dec << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series tables and congruence verification"};
  app.require_subcommand(1);

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "print tau_k(1..max_n)");
  std::int64_t tau_k = 0, tau_max_n = 0;
  std::optional<std::int64_t> tau_mod;
  std::string tau_format = "table", tau_route = "series";
  tau_cmd->add_option("--k", tau_k, "exponent k (nonzero)")->required();
  tau_cmd->add_option("--max-n", tau_max_n, "last n to print")->required();
  tau_cmd->add_option("--mod", tau_mod, "reduce values modulo m");
  tau_cmd->add_option("--format", tau_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  tau_cmd->add_option("--route", tau_route,
                      "series, recurrence or partition-sum")
      ->check(CLI::IsMember({"series", "recurrence", "partition-sum"}));

  // partition
  auto* part_cmd = app.add_subcommand("partition", "print a partition-count table");
  std::string part_fn;
  std::int64_t part_t = 0, part_max_n = 0;
  std::vector<std::int64_t> part_set;
  std::string part_format = "table";
  part_cmd->add_option("--fn", part_fn, "p, q, d, R or F")->required();
  part_cmd->add_option("--t", part_t, "parameter t for d and R");
  part_cmd->add_option("--set", part_set, "frequency set for F (comma separated)")
      ->delimiter(',');
  part_cmd->add_option("--max-n", part_max_n, "last n to print")->required();
  part_cmd->add_option("--format", part_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // series
  auto* series_cmd = app.add_subcommand("series", "expand an eta-product spec");
  std::string series_spec;
  std::int64_t series_order = 0;
  std::optional<std::int64_t> series_mod;
  std::string series_format = "table";
  series_cmd->add_option("--spec", series_spec,
                         "\"delta; c1^e1 c2^e2 ...\", e.g. \"1; 1^24\"")
      ->required();
  series_cmd->add_option("--order", series_order, "truncation order")->required();
  series_cmd->add_option("--mod", series_mod, "reduce coefficients modulo m");
  series_cmd->add_option("--format", series_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run congruence checks");
  std::vector<std::string> verify_ids;
  std::optional<std::int64_t> verify_limit;
  std::string verify_profile = "quick", verify_format = "table";
  verify_cmd->add_option("--check", verify_ids, "check id (repeatable; default all)");
  verify_cmd->add_option("--limit", verify_limit, "scan limit override");
  verify_cmd->add_option("--profile", verify_profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--format", verify_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "time the series kernel");
  std::int64_t bench_order = 0;
  bench_cmd->add_option("--order", bench_order, "truncation order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tau_cmd->parsed()) {
      if (tau_k == 0) throw std::invalid_argument("tau: --k must be nonzero");
      if (tau_max_n < 1) throw std::invalid_argument("tau: --max-n must be >= 1");
      return run_tau(tau_k, tau_max_n, tau_mod, kFormatNames.at(tau_format),
                     tau_route);
    }
    if (part_cmd->parsed()) {
      if (part_max_n < 0)
        throw std::invalid_argument("partition: --max-n must be >= 0");
      return run_partition(part_fn, part_t, part_set, part_max_n,
                           kFormatNames.at(part_format));
    }
    if (series_cmd->parsed()) {
      if (series_order < 0)
        throw std::invalid_argument("series: --order must be >= 0");
      return run_series(series_spec, series_order, series_mod,
                        kFormatNames.at(series_format));
    }
    if (verify_cmd->parsed())
      return run_verify(verify_ids, verify_limit, verify_profile,
                        kFormatNames.at(verify_format));
    if (bench_cmd->parsed()) {
      if (bench_order < 1)
        throw std::invalid_argument("bench: --order must be >= 1");
      return run_bench(bench_order);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
