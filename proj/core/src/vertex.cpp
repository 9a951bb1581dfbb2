#include "fockcalc/vertex.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "fockcalc/errors.hpp"

namespace fockcalc {

namespace {

LaurentSeries<FockVector> gamma_direct(const FockVector& f, Window window) {
  int first = INT_MAX;
  for (const auto& [m, c] : f) first = std::min(first, m.charge - m.shape.length() + 1);
  LaurentSeries<FockVector> r(window, f.is_zero() || window.lo <= first, f.is_zero());
  for (int k = window.lo; k <= window.hi; ++k) r.add_term(k, wedge_onto(wedge_basis({k}), f));
  return r;
}

LaurentSeries<FockVector> gamma_star_direct(const FockVector& f, Window window) {
  int first = INT_MAX;
  for (const auto& [m, c] : f) first = std::min(first, -(m.charge + m.shape.part(1)) - 1);
  LaurentSeries<FockVector> r(window, f.is_zero() || window.lo <= first, f.is_zero());
  for (int k = window.lo; k <= window.hi; ++k) r.add_term(k, contract_fock(DualVector(-k - 1), f));
  return r;
}

auto fock_op(SchubertKind kind) {
  return [kind](const FockVector& v, Window w) { return schubert_fock(kind, v, w); };
}

// R(z) sigma_+(z) sigmabar_-(z) f, charge by charge.
LaurentSeries<FockVector> gamma_operator(const FockVector& f, Window window) {
  LaurentSeries<FockVector> r = LaurentSeries<FockVector>::polynomial(window);
  for (int m : charges(f)) {
    FockVector fm = charge_part(f, m);
    auto y = schubert_fock(SchubertKind::BarMinus, fm, full_minus_window(fm));
    auto x = apply_termwise(y, fock_op(SchubertKind::Plus), window.shifted(-(m + 1)),
                            schubert_bounds(SchubertKind::Plus));
    r += shift(map_coeffs(x, [](const FockVector& v) { return zeta_shift(v, 1); }), m + 1);
  }
  return r;
}

// z^{-1} R(z)^{-1} sigmabar_+(z) sigma_-(z) f, charge by charge.
LaurentSeries<FockVector> gamma_star_operator(const FockVector& f, Window window) {
  LaurentSeries<FockVector> r = LaurentSeries<FockVector>::polynomial(window);
  for (int m : charges(f)) {
    FockVector fm = charge_part(f, m);
    auto y = schubert_fock(SchubertKind::Minus, fm, full_minus_window(fm));
    auto x = apply_termwise(y, fock_op(SchubertKind::BarPlus), window.shifted(m + 1),
                            schubert_bounds(SchubertKind::BarPlus));
    r += shift(map_coeffs(x, [](const FockVector& v) { return zeta_shift(v, -1); }), -(m + 1));
  }
  return r;
}

// beta(z) contracting [b]_{m+lambda} = z^{-m-1} ( sum_{k=1}^{r} (-1)^{k-1} z^{k-1-lambda_k} s_{lambda^(k) + (1^{k-1})}
//   + (-1)^r sum_{j>=0} (-1)^j z^{r+j} s_{lambda + (1^{r+j})} ) [b]_{m-1},  r = length of lambda.
LaurentSeries<FockVector> gamma_star_explicit(const FockVector& f, Window window) {
  int first = INT_MAX;
  for (const auto& [m, c] : f) first = std::min(first, -(m.charge + m.shape.part(1)) - 1);
  LaurentSeries<FockVector> acc(window, f.is_zero() || window.lo <= first, f.is_zero());
  for (const auto& [mono, c] : f) {
    const Partition& lambda = mono.shape;
    const int m = mono.charge;
    const int r = lambda.length();
    for (int k = 1; k <= r; ++k) {
      const int e = -m - 1 + (k - 1 - lambda.part(k));
      if (!window.contains(e)) continue;
      Integer coeff = k % 2 == 1 ? Integer(c) : Integer(-c);
      acc.add_term(e, to_fermion(schur(add_column(remove_part(lambda, k), k - 1), m - 1, coeff)));
    }
    for (int j = 0; -m - 1 + r + j <= window.hi; ++j) {
      const int e = -m - 1 + r + j;
      if (e < window.lo) continue;
      Integer coeff = (r + j) % 2 == 0 ? Integer(c) : Integer(-c);
      acc.add_term(e, to_fermion(schur(add_column(lambda, r + j), m - 1, coeff)));
    }
  }
  return acc;
}

// Coefficient series of a termwise operator, cached per basis monomial on [0, hi_max].
template <class Compute>
class MonomialCache {
 public:
  MonomialCache(Compute compute, int hi_max) : compute_(std::move(compute)), hi_max_(hi_max) {}

  LaurentSeries<FockVector> operator()(const FockVector& v, Window w) {
    if (w.hi > hi_max_ || w.lo < 0) throw std::logic_error("cached operator window out of range");
    LaurentSeries<FockVector> r = LaurentSeries<FockVector>::polynomial(w);
    for (const auto& [mono, c] : v) {
      auto it = cache_.find(mono);
      if (it == cache_.end()) it = cache_.emplace(mono, compute_(FockVector(mono), Window{0, hi_max_})).first;
      r += it->second.restricted(w) * c;
    }
    return r;
  }

 private:
  Compute compute_;
  int hi_max_;
  std::map<FockMonomial, LaurentSeries<FockVector>> cache_;
};

// delta_m(z,w) f = z^m w^{-m} i_{z,w} z/(z-w) E(w)/E(z) sigmabar_-(z) sigma_-(w) f, where
// on the charge-m component 1/E(z) acts as the plus operator in z and E(w) as the bar-plus operator in w.
// Everything is carried with w outer and transposed at the end.
template <class V, class MinusW, class BarMinusZ, class BarPlusW, class PlusZ>
BiLaurent<V> generating_impl(const V& f, int m, int weight, Window zwin, Window wwin, MinusW&& minus_w,
                             BarMinusZ&& bar_minus_z, BarPlusW&& bar_plus_w, PlusZ&& plus_z) {
  const int L = weight;
  const int K = std::max(0, wwin.hi + m + L);
  const Window gz{zwin.lo - m, zwin.hi - m + K};
  const Window gw{-L, std::max(-L, wwin.hi + m)};

  auto x = minus_w(f, Window{-L, 0});
  BiLaurent<V> y(x.window(), x.zero_below(), x.zero_above());
  for (const auto& [b, v] : x.terms()) y.add_term(b, bar_minus_z(v, Window{-L, 0}));

  auto lifted = [&bar_plus_w](const LaurentSeries<V>& c, Window w) { return lift_to_outer(c, bar_plus_w, w); };
  BiLaurent<V> z = apply_termwise(y, lifted, gw, ExponentBounds{0, std::nullopt});
  BiLaurent<V> g = map_coeffs(z, [&](const LaurentSeries<V>& c) {
    return apply_termwise(c, plus_z, gz, ExponentBounds{0, std::nullopt});
  });

  auto p = expand_geometric(GeometricDirection::WOverZ, Variable::z, Window{0, K}, Variable::w);
  BiLaurent<V> pg = series_mul(g, p, wwin.shifted(m), zwin.shifted(-m));
  BiLaurent<V> delta = map_coeffs(shift(pg, -m), [m](const LaurentSeries<V>& c) { return shift(c, m); });
  return transpose(delta, zwin);
}

}  // namespace

LaurentSeries<FockVector> gamma(const FockVector& f, Window window, VertexMethod method) {
  switch (method) {
    case VertexMethod::Direct:
      return gamma_direct(f, window);
    case VertexMethod::Operator:
      return gamma_operator(f, window);
    case VertexMethod::Explicit:
      break;
  }
  throw std::invalid_argument("Gamma has no explicit method");
}

LaurentSeries<FockVector> gamma_star(const FockVector& f, Window window, VertexMethod method) {
  switch (method) {
    case VertexMethod::Direct:
      return gamma_star_direct(f, window);
    case VertexMethod::Operator:
      return gamma_star_operator(f, window);
    case VertexMethod::Explicit:
      return gamma_star_explicit(f, window);
  }
  throw std::invalid_argument("unknown vertex method");
}

FockVector djkm(int i, int j, const FockVector& f, DjkmMethod method) {
  if (method == DjkmMethod::Direct) return wedge_onto(wedge_basis({i}), contract_fock(DualVector(j), f));
  FockVector r;
  for (int m : charges(f)) {
    auto g = djkm_generating(charge_part(f, m), Window{i, i}, Window{-j, -j});
    r += g.coefficient(i).coefficient(-j);
  }
  return r;
}

FockVector djkm_modified(int i, int j, const FockVector& f) {
  FockVector r = djkm(i, j, f);
  if (i == j && i <= 0) r -= f;
  return r;
}

BiLaurent<FockVector> djkm_generating(const FockVector& f, Window z_window, Window w_window) {
  if (f.is_zero()) return BiLaurent<FockVector>::polynomial(z_window);
  const int m = homogeneous_charge(f);
  const int L = max_weight(f);
  const int K = std::max(0, w_window.hi + m + L);
  MonomialCache plus_z(
      [](const FockVector& v, Window w) { return schubert_fock(SchubertKind::Plus, v, w); },
      std::max(0, z_window.hi - m + K + L));
  MonomialCache bar_plus_w(
      [](const FockVector& v, Window w) { return schubert_fock(SchubertKind::BarPlus, v, w); },
      std::max(0, w_window.hi + m + L));
  return generating_impl(f, m, L, z_window, w_window, fock_op(SchubertKind::Minus), fock_op(SchubertKind::BarMinus),
                         bar_plus_w, plus_z);
}

BiLaurent<ChargedSchur> djkm_generating_bosonic(const ChargedSchur& s, Window z_window, Window w_window) {
  if (s.is_zero()) return BiLaurent<ChargedSchur>::polynomial(z_window);
  auto minus = [](SchubertKind kind) {
    return [kind](const ChargedSchur& v, Window w) { return sigma_minus_B(kind, v, w); };
  };
  return generating_impl(s, s.charge(), max_weight(s), z_window, w_window, minus(SchubertKind::Minus),
                         minus(SchubertKind::BarMinus), e_series_mult, h_series_mult);
}

void GLElement::add(int i, int j, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Integer GLElement::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

GLElement& GLElement::operator+=(const GLElement& other) {
  for (const auto& [ij, c] : other.entries_) add(ij.first, ij.second, c);
  return *this;
}

GLElement& GLElement::operator-=(const GLElement& other) {
  for (const auto& [ij, c] : other.entries_) add(ij.first, ij.second, -c);
  return *this;
}

GLElement& GLElement::operator*=(const Integer& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [ij, c] : entries_) c *= s;
  return *this;
}

GLElement operator*(const GLElement& a, const GLElement& b) {
  GLElement r;
  for (const auto& [ij, x] : a.entries_) {
    for (const auto& [kl, y] : b.entries_) {
      if (ij.second == kl.first) r.add(ij.first, kl.second, x * y);
    }
  }
  return r;
}

GLElement bracket(const GLElement& a, const GLElement& b) { return a * b - b * a; }

FockVector delta_gl(const GLElement& a, const FockVector& f) {
  FockVector r;
  for (const auto& [ij, c] : a.entries()) r += djkm(ij.first, ij.second, f) * c;
  return r;
}

}  // namespace fockcalc
