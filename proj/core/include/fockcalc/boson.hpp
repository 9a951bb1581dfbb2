#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fockcalc/exterior.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/linear_combination.hpp"
#include "fockcalc/partition.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc {

/// zeta^charge times a finite combination of Schur polynomials.
class ChargedSchur {
 public:
  ChargedSchur() = default;
  ChargedSchur(int charge, LinearCombination<Partition> terms) : charge_(charge), terms_(std::move(terms)) {}

  int charge() const noexcept { return charge_; }
  const LinearCombination<Partition>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  Integer coefficient(const Partition& lambda) const { return terms_.coefficient(lambda); }

  void add_term(const Partition& lambda, const Integer& c) { terms_.add_term(lambda, c); }

  /// Adding nonzero elements of different charges throws ChargeMixed.
  ChargedSchur& operator+=(const ChargedSchur& other);
  ChargedSchur& operator-=(const ChargedSchur& other);
  ChargedSchur& operator*=(const Integer& s) {
    terms_ *= s;
    return *this;
  }

  friend ChargedSchur operator+(ChargedSchur a, const ChargedSchur& b) { return a += b; }
  friend ChargedSchur operator-(ChargedSchur a, const ChargedSchur& b) { return a -= b; }
  friend ChargedSchur operator-(ChargedSchur a) { return a *= Integer(-1); }
  friend ChargedSchur operator*(ChargedSchur a, const Integer& s) { return a *= s; }
  friend ChargedSchur operator*(const Integer& s, ChargedSchur a) { return a *= s; }

  /// All zero elements compare equal regardless of charge.
  friend bool operator==(const ChargedSchur& a, const ChargedSchur& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.charge_ == b.charge_ && a.terms_ == b.terms_;
  }

 private:
  int charge_ = 0;
  LinearCombination<Partition> terms_;
};

ChargedSchur schur(const Partition& lambda, int charge = 0, const Integer& coeff = 1);

/// h_i times s by the Pieri rule (horizontal strips).
ChargedSchur h_mult(int i, const ChargedSchur& s);

/// h_{i_1} h_{i_2} ... expanded in Schur polynomials (charge 0).
ChargedSchur h_monomial_to_schur(std::span<const int> indices);

/// Elementary symmetric polynomial e_k, from E(z) H(z) = 1.
ChargedSchur elementary(int k);

ChargedSchur schur_product(const ChargedSchur& a, const ChargedSchur& b);

/// Permutation expansion of det(h_{lambda_i - i + j}): (sign, nonzero h indices) per surviving permutation.
std::vector<std::pair<int, std::vector<int>>> jacobi_trudi_terms(const Partition& lambda);

/// sigma_-(z) or sigmabar_-(z) on B, through their action on the h_n inside Jacobi-Trudi.
LaurentSeries<ChargedSchur> sigma_minus_B(SchubertKind kind, const ChargedSchur& s, Window window);

/// H(z) s = sum_k h_k s z^k.
LaurentSeries<ChargedSchur> h_series_mult(const ChargedSchur& s, Window window);
/// E(z) s = sum_k (-1)^k e_k s z^k.
LaurentSeries<ChargedSchur> e_series_mult(const ChargedSchur& s, Window window);

int max_weight(const ChargedSchur& s);

/// Boson-fermion correspondence, one ChargedSchur per charge (increasing).
std::vector<ChargedSchur> to_boson(const FockVector& f);
FockVector to_fermion(const ChargedSchur& s);

std::string to_string(const ChargedSchur& s);

}  // namespace fockcalc
