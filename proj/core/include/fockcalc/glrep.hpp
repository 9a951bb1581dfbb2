#pragma once

#include <string>
#include <vector>

#include "fockcalc/exterior.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/integer.hpp"
#include "fockcalc/linear_combination.hpp"
#include "fockcalc/partition.hpp"
#include "fockcalc/vertex.hpp"

namespace fockcalc {

/// n x n integer matrix acting on M_n = span(b_0, ..., b_{n-1}); entry (i, j) sends b_j to b_i.
class FiniteGL {
 public:
  explicit FiniteGL(int n);

  static FiniteGL unit(int n, int i, int j);

  int n() const noexcept { return n_; }
  const Integer& at(int i, int j) const { return entries_.at(index(i, j)); }
  Integer& at(int i, int j) { return entries_.at(index(i, j)); }

  FiniteGL& operator+=(const FiniteGL& other);
  FiniteGL& operator-=(const FiniteGL& other);
  friend FiniteGL operator+(FiniteGL a, const FiniteGL& b) { return a += b; }
  friend FiniteGL operator-(FiniteGL a, const FiniteGL& b) { return a -= b; }
  friend FiniteGL operator*(const FiniteGL& a, const FiniteGL& b);
  friend bool operator==(const FiniteGL&, const FiniteGL&) = default;

  /// The same matrix as an element of gl_infinity.
  GLElement embed() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<Integer> entries_;
};

FiniteGL bracket(const FiniteGL& a, const FiniteGL& b);

/// Element of the r-th exterior power of M_n in the basis of partitions inside the r x (n-r) box.
struct BoxBasisVector {
  int r = 0;
  int n = 0;
  LinearCombination<Partition> terms;

  bool is_zero() const noexcept { return terms.is_zero(); }
  friend BoxBasisVector operator-(BoxBasisVector v) {
    v.terms = -v.terms;
    return v;
  }
  friend bool operator==(const BoxBasisVector&, const BoxBasisVector&) = default;
};

/// lambda -> b_{r-1+lambda_1} ^ b_{r-2+lambda_2} ^ ... ^ b_{lambda_r}. Throws ShapeOutOfBox.
ExtVector box_to_wedge(const BoxBasisVector& v);

/// Inverse of box_to_wedge for degree-r combinations of indices in 0..n-1.
BoxBasisVector wedge_to_box(const ExtVector& u, int r, int n);

/// Derivation action of A on the r-th exterior power.
BoxBasisVector delta_action(const FiniteGL& a, const BoxBasisVector& v);

/// v viewed in the Fock space of charge r-1, through b^r_{r-1+lambda} ^ [b]_{-1}.
FockVector embed_in_fock(const BoxBasisVector& v);

}  // namespace fockcalc
