#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "fockcalc/errors.hpp"
#include "fockcalc/integer.hpp"

namespace fockcalc {

/// Closed exponent interval [lo, hi].
struct Window {
  int lo = 0;
  int hi = 0;

  constexpr bool contains(int k) const noexcept { return lo <= k && k <= hi; }
  constexpr int size() const noexcept { return hi - lo + 1; }
  constexpr Window shifted(int d) const noexcept { return {lo + d, hi + d}; }
  friend constexpr bool operator==(Window, Window) = default;
};

/// Optional exponent bounds of an operator's output per input term; nullopt is unbounded.
struct ExponentBounds {
  std::optional<int> lo;
  std::optional<int> hi;
};

template <class C>
bool coefficient_is_zero(const C& c) {
  return c.is_zero();
}

/// Truncated formal Laurent series in one variable.
///
/// Coefficients are known on the window, and additionally below it when zero_below
/// holds (all of them zero) and above it when zero_above holds. Asking for any
/// other coefficient throws InsufficientWindow. A default-constructed series is
/// the exact zero series.
template <class C>
class LaurentSeries {
 public:
  using coefficient_type = C;
  using map_type = std::map<int, C>;

  LaurentSeries() = default;
  explicit LaurentSeries(Window window, bool zero_below = false, bool zero_above = false)
      : window_(window), zero_below_(zero_below), zero_above_(zero_above) {
    if (window.lo > window.hi) throw std::invalid_argument("empty series window");
  }

  /// Polynomial with the given window: known zero outside it.
  static LaurentSeries polynomial(Window window) { return LaurentSeries(window, true, true); }

  static LaurentSeries monomial(int k, const C& c) {
    LaurentSeries s = polynomial({k, k});
    s.add_term(k, c);
    return s;
  }

  Window window() const noexcept { return window_; }
  bool zero_below() const noexcept { return zero_below_; }
  bool zero_above() const noexcept { return zero_above_; }
  bool finite() const noexcept { return zero_below_ && zero_above_; }
  bool is_zero() const noexcept { return finite() && terms_.empty(); }

  bool known(int k) const noexcept {
    return window_.contains(k) || (k < window_.lo && zero_below_) || (k > window_.hi && zero_above_);
  }

  C coefficient(int k) const {
    if (!known(k)) {
      throw InsufficientWindow("coefficient of exponent " + std::to_string(k) + " is outside the known window [" +
                               std::to_string(window_.lo) + "," + std::to_string(window_.hi) + "]");
    }
    auto it = terms_.find(k);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Accumulates c at exponent k, which must lie in the window.
  void add_term(int k, const C& c) {
    if (!window_.contains(k)) throw std::out_of_range("exponent " + std::to_string(k) + " outside series window");
    if (coefficient_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (coefficient_is_zero(it->second)) terms_.erase(it);
    }
  }

  const map_type& terms() const noexcept { return terms_; }

  /// Smallest exponent that can carry a nonzero coefficient, if bounded.
  std::optional<long long> support_lo() const noexcept {
    if (!zero_below_) return std::nullopt;
    if (!terms_.empty()) return terms_.begin()->first;
    return zero_above_ ? std::numeric_limits<int>::max() : static_cast<long long>(window_.hi) + 1;
  }
  std::optional<long long> support_hi() const noexcept {
    if (!zero_above_) return std::nullopt;
    if (!terms_.empty()) return terms_.rbegin()->first;
    return zero_below_ ? std::numeric_limits<int>::min() : static_cast<long long>(window_.lo) - 1;
  }

  /// Same series viewed on a sub-window of its known region.
  LaurentSeries restricted(Window w) const {
    if (!known(w.lo) || !known(w.hi)) {
      throw InsufficientWindow("restriction window is not inside the known region");
    }
    LaurentSeries r(w, zero_below_ && all_zero_below(w.lo), zero_above_ && all_zero_above(w.hi));
    for (auto it = terms_.lower_bound(w.lo); it != terms_.end() && it->first <= w.hi; ++it) r.terms_.insert(*it);
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& other) { return accumulate(other, false); }
  LaurentSeries& operator-=(const LaurentSeries& other) { return accumulate(other, true); }

  LaurentSeries& operator*=(const Integer& s) {
    if (s.is_zero()) {
      *this = LaurentSeries();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator-(LaurentSeries a) { return a *= Integer(-1); }
  friend LaurentSeries operator*(LaurentSeries a, const Integer& s) { return a *= s; }
  friend LaurentSeries operator*(const Integer& s, LaurentSeries a) { return a *= s; }

  /// Structural equality: same window, flags and coefficients.
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  bool all_zero_below(int k) const {
    return terms_.empty() || terms_.begin()->first >= k;
  }
  bool all_zero_above(int k) const {
    return terms_.empty() || terms_.rbegin()->first <= k;
  }

  LaurentSeries& accumulate(const LaurentSeries& other, bool negate) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      *this = negate ? -other : other;
      return *this;
    }
    Window w{};
    bool zb = zero_below_ && other.zero_below_;
    bool za = zero_above_ && other.zero_above_;
    if (zb) {
      w.lo = std::min(window_.lo, other.window_.lo);
    } else {
      w.lo = std::max(zero_below_ ? std::numeric_limits<int>::min() : window_.lo,
                      other.zero_below_ ? std::numeric_limits<int>::min() : other.window_.lo);
    }
    if (za) {
      w.hi = std::max(window_.hi, other.window_.hi);
    } else {
      w.hi = std::min(zero_above_ ? std::numeric_limits<int>::max() : window_.hi,
                      other.zero_above_ ? std::numeric_limits<int>::max() : other.window_.hi);
    }
    if (w.lo > w.hi) throw InsufficientWindow("sum of series with disjoint known regions");
    LaurentSeries r(w, zb, za);
    for (const auto& [k, c] : terms_) {
      if (w.contains(k)) r.add_term(k, c);
    }
    for (const auto& [k, c] : other.terms_) {
      if (!w.contains(k)) continue;
      if (negate) {
        r.add_term(k, -c);
      } else {
        r.add_term(k, c);
      }
    }
    *this = std::move(r);
    return *this;
  }

  Window window_{0, 0};
  bool zero_below_ = true;
  bool zero_above_ = true;
  map_type terms_;
};

template <class C>
using BiLaurent = LaurentSeries<LaurentSeries<C>>;

template <class T>
struct is_laurent_series : std::false_type {};
template <class C>
struct is_laurent_series<LaurentSeries<C>> : std::true_type {};

enum class Variable { z, w };

namespace detail {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;
constexpr long long kPosInf = std::numeric_limits<long long>::max() / 4;

template <class C>
long long known_lo(const LaurentSeries<C>& s) {
  return s.zero_below() ? kNegInf : s.window().lo;
}
template <class C>
long long known_hi(const LaurentSeries<C>& s) {
  return s.zero_above() ? kPosInf : s.window().hi;
}

/// True when every split of exponent k into (i, k - i) either has both
/// coefficients known or pairs an unknown coefficient with a known zero.
template <class A, class B>
bool product_exact_at(const LaurentSeries<A>& a, const LaurentSeries<B>& b, long long k) {
  auto check = [k](const auto& x, const auto& y) {
    if (!x.zero_below()) {
      auto hi = y.support_hi();
      if (!hi || *hi > k - x.window().lo) return false;
    }
    if (!x.zero_above()) {
      auto lo = y.support_lo();
      if (!lo || *lo < k - x.window().hi) return false;
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

}  // namespace detail

/// Cauchy product on the output window `out`, combining coefficients with `product`.
/// Throws InsufficientWindow when some output coefficient is not determined.
template <class A, class B, class Product>
auto convolve(const LaurentSeries<A>& a, const LaurentSeries<B>& b, Window out, Product&& product)
    -> LaurentSeries<std::decay_t<std::invoke_result_t<Product&, const A&, const B&>>> {
  using R = std::decay_t<std::invoke_result_t<Product&, const A&, const B&>>;
  if (a.is_zero() || b.is_zero()) return LaurentSeries<R>::polynomial(out);
  for (int k = out.lo; k <= out.hi; ++k) {
    if (!detail::product_exact_at(a, b, k)) {
      throw InsufficientWindow("product coefficient at exponent " + std::to_string(k) +
                               " depends on unknown coefficients");
    }
  }
  auto alo = a.support_lo(), blo = b.support_lo();
  auto ahi = a.support_hi(), bhi = b.support_hi();
  bool zb = alo && blo && *alo + *blo >= out.lo;
  bool za = ahi && bhi && *ahi + *bhi <= out.hi;
  LaurentSeries<R> r(out, zb, za);
  const auto& bt = b.terms();
  for (const auto& [i, ai] : a.terms()) {
    for (auto it = bt.lower_bound(out.lo - i); it != bt.end() && it->first <= out.hi - i; ++it) {
      r.add_term(i + it->first, product(ai, it->second));
    }
  }
  return r;
}

/// a(z) * b(z) on `out`, with b scalar-valued.
template <class C>
LaurentSeries<C> series_mul(const LaurentSeries<C>& a, const LaurentSeries<Integer>& b, Window out) {
  return convolve(a, b, out, [](const C& x, const Integer& y) -> C { return x * y; });
}

/// Product of two bivariate series on the rectangle outer x inner.
template <class C>
BiLaurent<C> series_mul(const BiLaurent<C>& a, const BiLaurent<Integer>& b, Window outer, Window inner) {
  return convolve(a, b, outer, [inner](const LaurentSeries<C>& x, const LaurentSeries<Integer>& y) {
    return series_mul(x, y, inner);
  });
}

/// Applies a series-valued operator to every coefficient of s and resums.
/// op(c, window) must return op(c) exactly on that window; `bounds` constrains
/// the exponents op can produce and is used to decide exactness.
template <class C, class Op>
auto apply_termwise(const LaurentSeries<C>& s, Op&& op, Window out, ExponentBounds bounds)
    -> std::decay_t<std::invoke_result_t<Op&, const C&, Window>> {
  using Result = std::decay_t<std::invoke_result_t<Op&, const C&, Window>>;
  if (out.lo > out.hi) throw std::invalid_argument("empty output window");
  const long long blo = bounds.lo ? *bounds.lo : detail::kNegInf;
  const long long bhi = bounds.hi ? *bounds.hi : detail::kPosInf;
  // Input exponents b reach output k only when k - b lies in [blo, bhi].
  const long long need_lo = bounds.hi ? static_cast<long long>(out.lo) - bhi : detail::kNegInf;
  const long long need_hi = bounds.lo ? static_cast<long long>(out.hi) - blo : detail::kPosInf;
  if (!s.is_zero() && (need_lo < detail::known_lo(s) || need_hi > detail::known_hi(s))) {
    throw InsufficientWindow("operator output on [" + std::to_string(out.lo) + "," + std::to_string(out.hi) +
                             "] depends on unknown input coefficients");
  }
  auto slo = s.support_lo();
  auto shi = s.support_hi();
  bool zb = s.is_zero() || (slo && bounds.lo && *slo + blo >= out.lo);
  bool za = s.is_zero() || (shi && bounds.hi && *shi + bhi <= out.hi);
  Result r(out, zb, za);
  for (const auto& [b, c] : s.terms()) {
    long long wlo = std::max<long long>(static_cast<long long>(out.lo) - b, blo);
    long long whi = std::min<long long>(static_cast<long long>(out.hi) - b, bhi);
    if (wlo > whi) continue;
    auto t = op(c, Window{static_cast<int>(wlo), static_cast<int>(whi)});
    for (const auto& [e, v] : t.terms()) {
      if (out.contains(b + e)) r.add_term(b + e, v);
    }
  }
  return r;
}

/// Applies a coefficient map to every coefficient, keeping window and flags.
template <class C, class F>
auto map_coeffs(const LaurentSeries<C>& s, F&& f) -> LaurentSeries<std::decay_t<std::invoke_result_t<F&, const C&>>> {
  using R = std::decay_t<std::invoke_result_t<F&, const C&>>;
  LaurentSeries<R> r(s.window(), s.zero_below(), s.zero_above());
  for (const auto& [k, c] : s.terms()) r.add_term(k, f(c));
  return r;
}

/// Multiplies by z^d.
template <class C>
LaurentSeries<C> shift(const LaurentSeries<C>& s, int d) {
  LaurentSeries<C> r(s.window().shifted(d), s.zero_below(), s.zero_above());
  for (const auto& [k, c] : s.terms()) r.add_term(k + d, c);
  return r;
}

/// Coefficientwise comparison on a window; nested windows apply to nested series.
template <class C, class... Inner>
bool agree_on(const LaurentSeries<C>& a, const LaurentSeries<C>& b, Window w, Inner... inner) {
  for (int k = w.lo; k <= w.hi; ++k) {
    if constexpr (sizeof...(Inner) == 0) {
      if (!(a.coefficient(k) == b.coefficient(k))) return false;
    } else {
      if (!agree_on(a.coefficient(k), b.coefficient(k), inner...)) return false;
    }
  }
  return true;
}

/// Swaps the variables of a bivariate series. The result is known on
/// inner_window (outer variable of the result) times the original outer region.
template <class C>
BiLaurent<C> transpose(const BiLaurent<C>& s, Window inner_window) {
  BiLaurent<C> r(inner_window);
  for (int y = inner_window.lo; y <= inner_window.hi; ++y) {
    LaurentSeries<C> col(s.window(), s.zero_below(), s.zero_above());
    for (const auto& [x, inner] : s.terms()) col.add_term(x, inner.coefficient(y));
    r.add_term(y, col);
  }
  return r;
}

/// Lifts an operator in a new outer variable over a series c in the inner variable:
/// the result has coefficient sum_a op(c_a)_e x^a at outer exponent e. op(v, window)
/// must be exact on the window it is given.
template <class V, class Op>
BiLaurent<V> lift_to_outer(const LaurentSeries<V>& c, Op&& op, Window outer) {
  std::map<int, LaurentSeries<V>> cols;
  bool zb = true, za = true;
  for (const auto& [a, v] : c.terms()) {
    auto t = op(v, outer);
    zb = zb && t.zero_below();
    za = za && t.zero_above();
    for (const auto& [e, u] : t.terms()) {
      auto it = cols.try_emplace(e, c.window(), c.zero_below(), c.zero_above()).first;
      it->second.add_term(a, u);
    }
  }
  BiLaurent<V> r(outer, zb, za);
  for (auto& [e, col] : cols) r.add_term(e, col);
  return r;
}

/// Directed geometric expansions of num/(z - w).
/// WOverZ is i_{z,w}: powers of w/z; numerator z gives sum_{k>=0} w^k z^{-k}.
/// ZOverW is i_{w,z} applied to num/(w - z): powers of z/w; numerator w gives sum_{k>=0} z^k w^{-k}.
enum class GeometricDirection { ZOverW, WOverZ };

/// Keeps the terms with k in k_range; `outer` picks the outer variable of the nested result.
inline BiLaurent<Integer> expand_geometric(GeometricDirection direction, Variable numerator, Window k_range,
                                           Variable outer = Variable::z) {
  if (k_range.lo < 0) throw std::invalid_argument("geometric expansion starts at k = 0");
  // Term k is x^k y^{-k} times numerator/y, where x/y is the expansion ratio.
  const Variable x = direction == GeometricDirection::WOverZ ? Variable::w : Variable::z;
  const int extra = numerator == x ? 1 : 0;
  auto exponents = [&](int k) {
    int xe = k + extra, ye = -k - extra;
    return x == outer ? std::pair{xe, ye} : std::pair{ye, xe};
  };
  const bool increasing = x == outer;
  const int o_lo = exponents(k_range.lo).first;
  const int o_hi = exponents(k_range.hi).first;
  const bool closed = k_range.lo == 0;
  BiLaurent<Integer> r(increasing ? Window{o_lo, o_hi} : Window{o_hi, o_lo}, increasing && closed,
                       !increasing && closed);
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    const auto [o, i] = exponents(k);
    r.add_term(o, LaurentSeries<Integer>::monomial(i, Integer(1)));
  }
  return r;
}

}  // namespace fockcalc
