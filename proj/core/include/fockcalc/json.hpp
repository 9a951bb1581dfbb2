#pragma once

#include <string>
#include <type_traits>

#include <nlohmann/json.hpp>

#include "fockcalc/boson.hpp"
#include "fockcalc/exterior.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/glrep.hpp"
#include "fockcalc/partition.hpp"
#include "fockcalc/series.hpp"
#include "fockcalc/vertex.hpp"

namespace fockcalc {

// Integers are written as decimal strings so that no precision is lost.
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);
void to_json(nlohmann::json& j, const WedgeMonomial& m);
void from_json(const nlohmann::json& j, WedgeMonomial& m);
void to_json(nlohmann::json& j, const ExtVector& u);
void from_json(const nlohmann::json& j, ExtVector& u);
void to_json(nlohmann::json& j, const FockMonomial& m);
void from_json(const nlohmann::json& j, FockMonomial& m);
void to_json(nlohmann::json& j, const FockVector& f);
void from_json(const nlohmann::json& j, FockVector& f);
void to_json(nlohmann::json& j, const ChargedSchur& s);
void from_json(const nlohmann::json& j, ChargedSchur& s);
void to_json(nlohmann::json& j, const FiniteGL& a);
void to_json(nlohmann::json& j, const BoxBasisVector& v);
void to_json(nlohmann::json& j, const GLElement& a);

/// {"var":..,"lo":..,"hi":..,"coeffs":{"k":..}} plus "zero_below"/"zero_above" when set.
/// Nested series use inner_var for their own variable.
template <class C>
nlohmann::json series_to_json(const LaurentSeries<C>& s, const std::string& var = "z",
                              const std::string& inner_var = "w") {
  nlohmann::json j;
  j["var"] = var;
  j["lo"] = s.window().lo;
  j["hi"] = s.window().hi;
  if (s.zero_below()) j["zero_below"] = true;
  if (s.zero_above()) j["zero_above"] = true;
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [k, c] : s.terms()) {
    if constexpr (is_laurent_series<C>::value) {
      coeffs[std::to_string(k)] = series_to_json(c, inner_var, var);
    } else if constexpr (std::is_same_v<C, Integer>) {
      coeffs[std::to_string(k)] = to_decimal(c);
    } else {
      coeffs[std::to_string(k)] = c;
    }
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

/// Inverse of series_to_json.
template <class C>
LaurentSeries<C> series_from_json(const nlohmann::json& j) {
  LaurentSeries<C> s(Window{j.at("lo").get<int>(), j.at("hi").get<int>()}, j.value("zero_below", false),
                     j.value("zero_above", false));
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const int k = std::stoi(key);
    if constexpr (is_laurent_series<C>::value) {
      s.add_term(k, series_from_json<typename C::coefficient_type>(value));
    } else if constexpr (std::is_same_v<C, Integer>) {
      s.add_term(k, parse_integer(value.template get<std::string>()));
    } else {
      s.add_term(k, value.template get<C>());
    }
  }
  return s;
}

}  // namespace fockcalc
