#include "fockcalc/json.hpp"

#include <vector>

namespace fockcalc {

using nlohmann::json;

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) {
  auto parts = j.get<std::vector<int>>();
  p = Partition(std::span<const int>(parts));
}

void to_json(json& j, const WedgeMonomial& m) { j = m.indices; }

void from_json(const json& j, WedgeMonomial& m) { m.indices = j.get<std::vector<int>>(); }

namespace {

Integer coefficient_from_json(const json& c) {
  return c.is_string() ? parse_integer(c.get<std::string>()) : Integer(c.get<long long>());
}

}  // namespace

void to_json(json& j, const ExtVector& u) {
  j = json::array();
  for (const auto& [m, c] : u) j.push_back({{"mono", m}, {"coeff", c.str()}});
}

void from_json(const json& j, ExtVector& u) {
  u = ExtVector();
  for (const auto& t : j) u += wedge_basis(t.at("mono").get<std::vector<int>>()) * coefficient_from_json(t.at("coeff"));
}

void to_json(json& j, const FockMonomial& m) { j = {{"charge", m.charge}, {"shape", m.shape}}; }

void from_json(const json& j, FockMonomial& m) {
  m.charge = j.at("charge").get<int>();
  m.shape = j.contains("shape") ? j.at("shape").get<Partition>() : Partition{};
}

void to_json(json& j, const FockVector& f) {
  j = json::array();
  for (const auto& [m, c] : f) j.push_back({{"mono", m}, {"coeff", c.str()}});
}

void from_json(const json& j, FockVector& f) {
  f = FockVector();
  for (const auto& t : j) {
    f.add_term(t.at("mono").get<FockMonomial>(), coefficient_from_json(t.at("coeff")));
  }
}

void to_json(json& j, const ChargedSchur& s) {
  json terms = json::array();
  for (const auto& [lambda, c] : s.terms()) terms.push_back({{"shape", lambda}, {"coeff", c.str()}});
  j = {{"charge", s.charge()}, {"terms", terms}};
}

void from_json(const json& j, ChargedSchur& s) {
  LinearCombination<Partition> terms;
  for (const auto& t : j.at("terms")) terms.add_term(t.at("shape").get<Partition>(), coefficient_from_json(t.at("coeff")));
  s = ChargedSchur(j.at("charge").get<int>(), std::move(terms));
}

void to_json(json& j, const FiniteGL& a) {
  json rows = json::array();
  for (int i = 0; i < a.n(); ++i) {
    json row = json::array();
    for (int k = 0; k < a.n(); ++k) row.push_back(a.at(i, k).str());
    rows.push_back(row);
  }
  j = {{"n", a.n()}, {"rows", rows}};
}

void to_json(json& j, const BoxBasisVector& v) {
  json terms = json::array();
  for (const auto& [lambda, c] : v.terms) terms.push_back({{"shape", lambda}, {"coeff", c.str()}});
  j = {{"r", v.r}, {"n", v.n}, {"terms", terms}};
}

void to_json(json& j, const GLElement& a) {
  j = json::array();
  for (const auto& [ij, c] : a.entries()) j.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", c.str()}});
}

}  // namespace fockcalc
