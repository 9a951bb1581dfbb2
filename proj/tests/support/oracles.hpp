#pragma once

// Brute-force reference implementations. None of these call into the code under test
// except for the container types and fock_basis.

#include <optional>
#include <vector>

#include "fockcalc/boson.hpp"
#include "fockcalc/exterior.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/partition.hpp"

namespace fockcalc::oracle {

/// Sign of the permutation sorting seq decreasingly, by counting inversions. 0 on repeats.
int permutation_sign(const std::vector<int>& seq);

/// b_{seq[0]} ^ b_{seq[1]} ^ ... assembled from permutation_sign.
ExtVector wedge_of(const std::vector<int>& seq);

/// Coefficient of z^k in the Schubert derivation of u, by summing over all index shifts.
ExtVector schubert_coefficient(SchubertKind kind, int k, const ExtVector& u);

/// Reads b_{seq} ^ [b]_tail off as a signed Fock monomial.
std::optional<std::pair<int, FockMonomial>> fock_canonical(const std::vector<int>& seq, int tail);

/// Coefficient of z^k of a Schubert derivation on the Fock space. Each monomial is expanded
/// to `extra` factors beyond its length, the finite part is shifted factor by factor and the
/// vacuum tail follows its closed form.
FockVector schubert_fock_coefficient(SchubertKind kind, int k, const FockVector& f, int extra = 8);

/// The Giambelli determinant det(sigma_{lambda_i - i + j}) expanded over permutations,
/// acting on b_m ^ ... ^ b_{m-r+1} and then wedged onto [b]_{m-r}.
FockVector giambelli(const Partition& lambda, int m);

/// All partitions with weight <= max_weight and length <= max_length, from every bounded tuple.
std::vector<Partition> partitions(int max_weight, int max_length);

/// Number of semistandard tableaux of shape lambda and content mu.
long long kostka(const Partition& lambda, const std::vector<int>& mu);

/// h_i s_lambda as a sum over horizontal strips, listed by interlacing.
LinearCombination<Partition> pieri(int i, const Partition& lambda);

}  // namespace fockcalc::oracle
