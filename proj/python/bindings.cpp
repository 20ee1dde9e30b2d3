#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qtau/arith.hpp"
#include "qtau/congruences.hpp"
#include "qtau/eta.hpp"
#include "qtau/json_io.hpp"
#include "qtau/partitions.hpp"
#include "qtau/tau.hpp"

namespace py = pybind11;

namespace {

// Exact coefficients map onto python's arbitrary-precision int.
py::int_ big(const qtau::Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list big_list(const std::vector<qtau::Int>& values) {
  py::list out;
  for (const auto& v : values) out.append(big(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_qtau, m) {
  m.doc() =
      "exact q-series engine: generalized tau tables, partition counts and "
      "congruence checks";

  m.def(
      "tau_table",
      [](std::int64_t k, std::int64_t max_n, const std::string& route) {
        switch (qtau::route_from_name(route)) {
          case qtau::TauRoute::recurrence:
            return big_list(qtau::tau_recurrence(k, max_n).values);
          case qtau::TauRoute::partition_sum:
            return big_list(qtau::tau_partition_table(k, max_n).values);
          case qtau::TauRoute::series:
          default:
            return big_list(qtau::tau_series(k, max_n).values);
        }
      },
      py::arg("k"), py::arg("max_n"), py::arg("route") = "series",
      "tau_k(1..max_n) as a list");

  m.def(
      "eta_coeffs",
      [](const std::string& spec_text, std::int64_t order,
         std::optional<std::int64_t> mod) -> py::list {
        const qtau::EtaProductSpec spec = qtau::EtaProductSpec::parse(spec_text);
        if (mod) {
          const qtau::ModSeries s = qtau::eta_product_mod(spec, order, *mod);
          py::list out;
          for (const std::int64_t c : s.coeffs()) out.append(c);
          return out;
        }
        const qtau::IntSeries s = qtau::eta_product(spec, order);
        py::list out;
        for (const auto& c : s.coeffs()) out.append(big(c));
        return out;
      },
      py::arg("spec"), py::arg("order"), py::arg("mod") = py::none(),
      "coefficients 0..order of \"delta; c1^e1 c2^e2 ...\"");

  m.def("partition_count",
        [](std::int64_t n) { return big(qtau::p_count(n)); }, py::arg("n"));
  m.def("distinct_count",
        [](std::int64_t n) { return big(qtau::q_distinct(n)); }, py::arg("n"));
  m.def(
      "regular_count",
      [](std::int64_t t, std::int64_t n) { return big(qtau::regular_count(t, n)); },
      py::arg("t"), py::arg("n"));
  m.def(
      "bounded_frequency_count",
      [](std::int64_t t, std::int64_t n) {
        return big(qtau::bounded_frequency_count(t, n));
      },
      py::arg("t"), py::arg("n"));
  m.def(
      "frequency_set_count",
      [](const std::vector<std::int64_t>& values, std::int64_t n) {
        return big(qtau::frequency_set_count(
            std::set<std::int64_t>(values.begin(), values.end()), n));
      },
      py::arg("frequencies"), py::arg("n"));
  m.def(
      "composition_weighted_sum",
      [](std::int64_t k, std::int64_t n) {
        return big(qtau::composition_weighted_sum(k, n));
      },
      py::arg("k"), py::arg("n"));

  m.def("sigma", &qtau::sigma, py::arg("n"));
  m.def("omega", &qtau::omega, py::arg("n"));
  m.def("omega_scaled", &qtau::omega_scaled, py::arg("n"), py::arg("c"));
  m.def("triangular_coeff", &qtau::triangular_coeff, py::arg("n"));
  m.def("binom_mod2", &qtau::binom_mod2, py::arg("n"), py::arg("k"));
  m.def("binom_shifted_mod_l", &qtau::binom_shifted_mod_l, py::arg("n"),
        py::arg("k"), py::arg("l"));
  m.def("p_adic_valuation", &qtau::p_adic_valuation, py::arg("m"), py::arg("p"));
  m.def(
      "binom_exact",
      [](std::int64_t n, std::int64_t k) { return big(qtau::binom_exact(n, k)); },
      py::arg("n"), py::arg("k"));

  m.def("registry", [] {
    py::list out;
    for (const auto& info : qtau::registry())
      out.append(py::make_tuple(info.id, info.description, info.source));
    return out;
  });
  m.def(
      "run_check_json",
      [](const std::string& id, std::int64_t limit) {
        return qtau::to_json(qtau::run_check(id, limit)).dump();
      },
      py::arg("id"), py::arg("limit"));
  m.def(
      "run_all_json",
      [](const std::string& profile) {
        const qtau::Profile p =
            profile == "full" ? qtau::Profile::full : qtau::Profile::quick;
        return qtau::to_json(qtau::run_all(p)).dump();
      },
      py::arg("profile") = "quick");
}
