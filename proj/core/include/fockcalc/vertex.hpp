#pragma once

#include <map>
#include <utility>

#include "fockcalc/boson.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc {

/// How a vertex operator series is computed.
/// Direct: wedging or contracting with the generating series of basis vectors.
/// Operator: the Schubert derivation factorization.
/// Explicit: the closed Schur expansion (Gamma* only).
enum class VertexMethod { Direct, Operator, Explicit };

/// Gamma(z) f = sum_i z^i b_i ^ f.
LaurentSeries<FockVector> gamma(const FockVector& f, Window window, VertexMethod method = VertexMethod::Direct);

/// Gamma*(z) f = beta(z) contracting f, beta(z) = sum_j beta_j z^{-j-1}.
LaurentSeries<FockVector> gamma_star(const FockVector& f, Window window,
                                     VertexMethod method = VertexMethod::Direct);

enum class DjkmMethod { Direct, Generating };

/// delta(B_ij) f = b_i ^ (beta_j contracting f).
FockVector djkm(int i, int j, const FockVector& f, DjkmMethod method = DjkmMethod::Direct);

/// Central-extension-adjusted action: delta(B_ij) - [i = j <= 0].
FockVector djkm_modified(int i, int j, const FockVector& f);

/// sum_{i,j} delta(B_ij) f z^i w^{-j} for homogeneous f, on the rectangle z_window x w_window,
/// built from the Schubert derivation generating function. Outer variable z.
BiLaurent<FockVector> djkm_generating(const FockVector& f, Window z_window, Window w_window);

/// The same generating function transported to B.
BiLaurent<ChargedSchur> djkm_generating_bosonic(const ChargedSchur& s, Window z_window, Window w_window);

/// Finitely supported element sum a_ij E_ij of gl_infinity.
class GLElement {
 public:
  using map_type = std::map<std::pair<int, int>, Integer>;

  GLElement() = default;
  static GLElement unit(int i, int j) {
    GLElement e;
    e.add(i, j, 1);
    return e;
  }

  void add(int i, int j, const Integer& c);
  Integer at(int i, int j) const;
  const map_type& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  GLElement& operator+=(const GLElement& other);
  GLElement& operator-=(const GLElement& other);
  GLElement& operator*=(const Integer& s);
  friend GLElement operator+(GLElement a, const GLElement& b) { return a += b; }
  friend GLElement operator-(GLElement a, const GLElement& b) { return a -= b; }
  friend GLElement operator*(const GLElement& a, const GLElement& b);
  friend bool operator==(const GLElement&, const GLElement&) = default;

 private:
  map_type entries_;
};

GLElement bracket(const GLElement& a, const GLElement& b);

/// sum a_ij delta(B_ij) f.
FockVector delta_gl(const GLElement& a, const FockVector& f);

}  // namespace fockcalc
