#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fockcalc/exterior.hpp"
#include "fockcalc/linear_combination.hpp"
#include "fockcalc/partition.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc {

/// Basis vector [b]_{m+lambda} of the semi-infinite wedge space.
struct FockMonomial {
  int charge = 0;
  Partition shape;

  friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
  friend bool operator==(const FockMonomial&, const FockMonomial&) = default;
};

using FockVector = LinearCombination<FockMonomial>;

FockVector fock_basis(int charge, const Partition& shape = {});

/// Indices of the first `depth` factors of [b]_{m+lambda}: i_k = m - k + 1 + lambda_k.
std::vector<int> prefix_indices(const FockMonomial& mono, int depth);

struct SignedFockMonomial {
  int sign = 1;
  FockMonomial monomial;
};

/// Interprets b_{prefix} ^ [b]_{tail_charge}. nullopt when the wedge vanishes.
std::optional<SignedFockMonomial> canonicalize_fock(std::vector<int> prefix, int tail_charge);

/// Charges present in f, increasing.
std::vector<int> charges(const FockVector& f);
/// Largest |lambda| among the monomials of f; 0 for f = 0.
int max_weight(const FockVector& f);
/// The charge of a nonzero homogeneous f. Throws ChargeMixed otherwise.
int homogeneous_charge(const FockVector& f);
/// Component of charge m.
FockVector charge_part(const FockVector& f, int m);

/// u ^ f.
FockVector wedge_onto(const ExtVector& u, const FockVector& f);

FockVector contract_fock(const DualVector& beta, const FockVector& f);

/// Schubert derivation on the Fock space, exact on the window.
/// prefix_depth, when given, fixes how many leading factors are expanded explicitly;
/// it must be at least the length of every shape in f. The result does not depend on it.
LaurentSeries<FockVector> schubert_fock(SchubertKind kind, const FockVector& f, Window window,
                                        std::optional<int> prefix_depth = std::nullopt);

/// Window holding every coefficient of a minus-kind derivation of f.
Window full_minus_window(const FockVector& f);

/// sigma_i on the Fock space (coefficient of z^i in sigma_+ for i >= 0, sigma_- for i < 0).
FockVector sigma_fock(int i, const FockVector& f);

/// [b]_{m+lambda} built as the Giambelli determinant in the sigma_i applied to the vacuum of charge m.
FockVector giambelli(const Partition& lambda, int m);

/// Multiplication by zeta^k: shifts every charge by k.
FockVector zeta_shift(const FockVector& f, int k);

/// R(z) f (inverse = false) or R(z)^{-1} f.
LaurentSeries<FockVector> r_op(const FockVector& f, bool inverse);

std::string to_string(const FockMonomial& m);
std::string to_string(const FockVector& f);

}  // namespace fockcalc
