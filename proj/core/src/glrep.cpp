#include "fockcalc/glrep.hpp"

#include <stdexcept>

#include "fockcalc/errors.hpp"

namespace fockcalc {

FiniteGL::FiniteGL(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

FiniteGL FiniteGL::unit(int n, int i, int j) {
  FiniteGL e(n);
  e.at(i, j) = 1;
  return e;
}

std::size_t FiniteGL::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

FiniteGL& FiniteGL::operator+=(const FiniteGL& other) {
  if (n_ != other.n_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

FiniteGL& FiniteGL::operator-=(const FiniteGL& other) {
  if (n_ != other.n_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

FiniteGL operator*(const FiniteGL& a, const FiniteGL& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
  FiniteGL r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      const Integer& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) r.at(i, j) += x * b.at(k, j);
    }
  }
  return r;
}

GLElement FiniteGL::embed() const {
  GLElement e;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) e.add(i, j, at(i, j));
  }
  return e;
}

FiniteGL bracket(const FiniteGL& a, const FiniteGL& b) { return a * b - b * a; }

namespace {

std::vector<int> shape_indices(const Partition& lambda, int r, int n) {
  if (lambda.length() > r || (lambda.length() > 0 && lambda.part(1) > n - r)) {
    throw ShapeOutOfBox("partition " + to_string(lambda) + " does not fit in the " + std::to_string(r) + "x" +
                        std::to_string(n - r) + " box");
  }
  std::vector<int> idx(r);
  for (int k = 1; k <= r; ++k) idx[k - 1] = r - k + lambda.part(k);
  return idx;
}

}  // namespace

ExtVector box_to_wedge(const BoxBasisVector& v) {
  ExtVector u;
  for (const auto& [lambda, c] : v.terms) u.add_term(WedgeMonomial{shape_indices(lambda, v.r, v.n)}, c);
  return u;
}

BoxBasisVector wedge_to_box(const ExtVector& u, int r, int n) {
  BoxBasisVector v{r, n, {}};
  for (const auto& [m, c] : u) {
    if (m.degree() != r) throw DimensionMismatch("wedge degree differs from r");
    if (r > 0 && (m.indices.front() >= n || m.indices.back() < 0)) throw ShapeOutOfBox("index outside 0..n-1");
    std::vector<int> parts(r);
    for (int k = 1; k <= r; ++k) parts[k - 1] = m.indices[k - 1] - r + k;
    v.terms.add_term(Partition(std::span<const int>(parts)), c);
  }
  return v;
}

BoxBasisVector delta_action(const FiniteGL& a, const BoxBasisVector& v) {
  if (a.n() != v.n) throw DimensionMismatch("matrix size differs from the exterior power's n");
  ExtVector out;
  for (const auto& [m, c] : box_to_wedge(v)) {
    for (std::size_t p = 0; p < m.indices.size(); ++p) {
      const int j = m.indices[p];
      for (int i = 0; i < a.n(); ++i) {
        const Integer& x = a.at(i, j);
        if (x.is_zero()) continue;
        std::vector<int> idx = m.indices;
        idx[p] = i;
        if (auto s = normalize_wedge(std::move(idx))) out.add_term(s->monomial, c * x * s->sign);
      }
    }
  }
  return wedge_to_box(out, v.r, v.n);
}

FockVector embed_in_fock(const BoxBasisVector& v) {
  FockVector f;
  for (const auto& [lambda, c] : v.terms) {
    shape_indices(lambda, v.r, v.n);
    f.add_term(FockMonomial{v.r - 1, lambda}, c);
  }
  return f;
}

}  // namespace fockcalc
