#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fockcalc/integer.hpp"
#include "fockcalc/linear_combination.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc {

/// b_{i_1} ^ ... ^ b_{i_r} with strictly decreasing indices.
struct WedgeMonomial {
  std::vector<int> indices;

  int degree() const noexcept { return static_cast<int>(indices.size()); }
  friend auto operator<=>(const WedgeMonomial&, const WedgeMonomial&) = default;
  friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;
};

using ExtVector = LinearCombination<WedgeMonomial>;

/// Finite combination sum c_j beta_j of dual basis vectors, keyed by j.
using DualVector = LinearCombination<int>;

struct SignedWedge {
  int sign = 1;
  WedgeMonomial monomial;
};

/// Sorts indices decreasingly and returns the permutation sign; nullopt on a repeated index.
std::optional<SignedWedge> normalize_wedge(std::vector<int> indices);

/// b_{i_1} ^ ... ^ b_{i_r} for an arbitrary index sequence.
ExtVector wedge_basis(std::span<const int> indices);
ExtVector wedge_basis(std::initializer_list<int> indices);

ExtVector wedge(const ExtVector& u, const ExtVector& v);

/// Homogeneous component of the given degree.
ExtVector graded_part(const ExtVector& u, int degree);

/// beta_j contracting b_{i_1} ^ ... ^ b_{i_r} gives sum_k (-1)^{k-1} [j = i_k] times the monomial without b_{i_k}.
ExtVector contract(const DualVector& beta, const ExtVector& u);

enum class SchubertKind { Plus, Minus, BarPlus, BarMinus };

/// Exponents that the derivation can produce: plus kinds are >= 0, minus kinds <= 0.
ExponentBounds schubert_bounds(SchubertKind kind);

/// The Schubert derivation applied to u, exact on the window.
LaurentSeries<ExtVector> schubert_ext(SchubertKind kind, const ExtVector& u, Window window);

/// sigma_i u: coefficient of z^i in sigma_+(z) u for i >= 0, in sigma_-(z) u for i < 0.
ExtVector sigma_ext(int i, const ExtVector& u);

std::string to_string(const WedgeMonomial& m);
std::string to_string(const ExtVector& u);

}  // namespace fockcalc
