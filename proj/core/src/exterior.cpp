#include "fockcalc/exterior.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockcalc/detail/format.hpp"
#include "fockcalc/detail/shift_expand.hpp"

namespace fockcalc {

std::optional<SignedWedge> normalize_wedge(std::vector<int> indices) {
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t k = i; k > 0 && indices[k - 1] <= indices[k]; --k) {
      if (indices[k - 1] == indices[k]) return std::nullopt;
      std::swap(indices[k - 1], indices[k]);
      sign = -sign;
    }
  }
  return SignedWedge{sign, WedgeMonomial{std::move(indices)}};
}

ExtVector wedge_basis(std::span<const int> indices) {
  ExtVector r;
  if (auto n = normalize_wedge({indices.begin(), indices.end()})) r.add_term(n->monomial, n->sign);
  return r;
}

ExtVector wedge_basis(std::initializer_list<int> indices) {
  return wedge_basis(std::span<const int>(indices.begin(), indices.size()));
}

ExtVector wedge(const ExtVector& u, const ExtVector& v) {
  ExtVector r;
  for (const auto& [mu, cu] : u) {
    for (const auto& [mv, cv] : v) {
      std::vector<int> idx = mu.indices;
      idx.insert(idx.end(), mv.indices.begin(), mv.indices.end());
      if (auto n = normalize_wedge(std::move(idx))) r.add_term(n->monomial, cu * cv * n->sign);
    }
  }
  return r;
}

ExtVector graded_part(const ExtVector& u, int degree) {
  ExtVector r;
  for (const auto& [m, c] : u) {
    if (m.degree() == degree) r.add_term(m, c);
  }
  return r;
}

ExtVector contract(const DualVector& beta, const ExtVector& u) {
  ExtVector r;
  for (const auto& [j, cj] : beta) {
    for (const auto& [m, c] : u) {
      auto it = std::find(m.indices.begin(), m.indices.end(), j);
      if (it == m.indices.end()) continue;
      const auto pos = it - m.indices.begin();
      WedgeMonomial rest{m.indices};
      rest.indices.erase(rest.indices.begin() + pos);
      r.add_term(rest, pos % 2 == 0 ? Integer(cj * c) : Integer(-cj * c));
    }
  }
  return r;
}

ExponentBounds schubert_bounds(SchubertKind kind) {
  switch (kind) {
    case SchubertKind::Plus:
    case SchubertKind::BarPlus:
      return {0, std::nullopt};
    case SchubertKind::Minus:
    case SchubertKind::BarMinus:
      return {std::nullopt, 0};
  }
  throw std::logic_error("unknown Schubert kind");
}

LaurentSeries<ExtVector> schubert_ext(SchubertKind kind, const ExtVector& u, Window window) {
  if (u.is_zero()) return LaurentSeries<ExtVector>::polynomial(window);
  int max_degree = 0;
  for (const auto& [m, c] : u) max_degree = std::max(max_degree, m.degree());
  const bool raising = kind == SchubertKind::Plus || kind == SchubertKind::BarPlus;
  // Extent of the support on the unbounded side, if finite.
  std::optional<int> reach;
  if (kind == SchubertKind::BarPlus || kind == SchubertKind::BarMinus || max_degree == 0) reach = max_degree;
  bool zb, za;
  if (raising) {
    zb = window.lo <= 0;
    za = reach && window.hi >= *reach;
  } else {
    za = window.hi >= 0;
    zb = reach && window.lo <= -*reach;
  }
  LaurentSeries<ExtVector> r(window, zb, za);
  for (const auto& [m, c] : u) {
    for (const auto& [key, coeff] : detail::shift_expand(kind, m.indices, window.lo, window.hi)) {
      ExtVector term(WedgeMonomial{key.second}, coeff * c);
      r.add_term(key.first, term);
    }
  }
  return r;
}

ExtVector sigma_ext(int i, const ExtVector& u) {
  auto kind = i >= 0 ? SchubertKind::Plus : SchubertKind::Minus;
  ExtVector r;
  for (const auto& [m, c] : u) {
    for (const auto& [key, coeff] : detail::shift_expand(kind, m.indices, i, i)) {
      r.add_term(WedgeMonomial{key.second}, coeff * c);
    }
  }
  return r;
}

std::string to_string(const WedgeMonomial& m) {
  if (m.indices.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < m.indices.size(); ++k) {
    if (k > 0) s += "^";
    s += "b" + std::to_string(m.indices[k]);
  }
  return s;
}

std::string to_string(const ExtVector& u) {
  return detail::format_combination(u, [](const WedgeMonomial& m) { return to_string(m); });
}

}  // namespace fockcalc
