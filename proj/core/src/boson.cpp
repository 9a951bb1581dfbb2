#include "fockcalc/boson.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fockcalc/detail/format.hpp"
#include "fockcalc/errors.hpp"

namespace fockcalc {

ChargedSchur& ChargedSchur::operator+=(const ChargedSchur& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    charge_ = other.charge_;
  } else if (charge_ != other.charge_) {
    throw ChargeMixed("adding Schur combinations of different charges");
  }
  terms_ += other.terms_;
  return *this;
}

ChargedSchur& ChargedSchur::operator-=(const ChargedSchur& other) { return *this += -other; }

ChargedSchur schur(const Partition& lambda, int charge, const Integer& coeff) {
  return ChargedSchur(charge, LinearCombination<Partition>(lambda, coeff));
}

namespace {

// Adds to out every mu = lambda + horizontal strip of size i.
void horizontal_strips(const std::vector<int>& lambda, int i, const Integer& c, LinearCombination<Partition>& out) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> mu(len + 1, 0);
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == len + 1) {
      if (remaining == 0) out.add_term(Partition(std::span<const int>(mu)), c);
      return;
    }
    const int base = row < len ? lambda[row] : 0;
    const int cap = row == 0 ? base + remaining : std::min(base + remaining, lambda[row - 1]);
    for (int v = base; v <= cap; ++v) {
      mu[row] = v;
      self(self, row + 1, remaining - (v - base));
    }
  };
  rec(rec, 0, i);
}

}  // namespace

ChargedSchur h_mult(int i, const ChargedSchur& s) {
  if (i < 0) return ChargedSchur(s.charge(), {});
  if (i == 0) return s;
  LinearCombination<Partition> out;
  for (const auto& [lambda, c] : s.terms()) horizontal_strips(lambda.parts(), i, c, out);
  return ChargedSchur(s.charge(), std::move(out));
}

ChargedSchur h_monomial_to_schur(std::span<const int> indices) {
  ChargedSchur s = schur(Partition{});
  for (int i : indices) {
    if (i < 0) return {};
    s = h_mult(i, s);
  }
  return s;
}

ChargedSchur elementary(int k) {
  if (k < 0) return {};
  // sum_{i=0}^{k} (-1)^i e_i h_{k-i} = 0 for k >= 1.
  std::vector<ChargedSchur> e{schur(Partition{})};
  for (int n = 1; n <= k; ++n) {
    ChargedSchur acc;
    for (int i = 0; i < n; ++i) {
      ChargedSchur t = h_mult(n - i, e[i]);
      if (i % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    // (-1)^n e_n = -acc.
    e.push_back(n % 2 == 0 ? -acc : acc);
  }
  return e[k];
}

std::vector<std::pair<int, std::vector<int>>> jacobi_trudi_terms(const Partition& lambda) {
  const int r = lambda.length();
  std::vector<std::pair<int, std::vector<int>>> out;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> hs;
    bool vanishes = false;
    for (int i = 1; i <= r; ++i) {
      const int k = lambda.part(i) - i + perm[i - 1];
      if (k < 0) {
        vanishes = true;
        break;
      }
      if (k > 0) hs.push_back(k);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (int a = 0; a < r; ++a) {
      for (int b = a + 1; b < r; ++b) inversions += perm[a] > perm[b];
    }
    out.emplace_back(inversions % 2 == 0 ? 1 : -1, std::move(hs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ChargedSchur schur_product(const ChargedSchur& a, const ChargedSchur& b) {
  ChargedSchur out(a.charge() + b.charge(), {});
  for (const auto& [mu, cb] : b.terms()) {
    for (const auto& [sign, hs] : jacobi_trudi_terms(mu)) {
      ChargedSchur t = a;
      for (int h : hs) t = h_mult(h, t);
      for (const auto& [lambda, c] : t.terms()) out.add_term(lambda, c * cb * sign);
    }
  }
  return out;
}

int max_weight(const ChargedSchur& s) {
  int w = 0;
  for (const auto& [lambda, c] : s.terms()) w = std::max(w, lambda.weight());
  return w;
}

LaurentSeries<ChargedSchur> sigma_minus_B(SchubertKind kind, const ChargedSchur& s, Window window) {
  if (kind != SchubertKind::Minus && kind != SchubertKind::BarMinus) {
    throw std::invalid_argument("sigma_minus_B takes a minus-kind derivation");
  }
  LaurentSeries<ChargedSchur> r(window, window.lo <= -max_weight(s), window.hi >= 0);
  if (s.is_zero()) return LaurentSeries<ChargedSchur>::polynomial(window);
  std::map<std::vector<int>, ChargedSchur> memo;
  auto to_schur = [&memo](std::vector<int> hs) -> const ChargedSchur& {
    std::sort(hs.begin(), hs.end(), std::greater<>());
    auto it = memo.find(hs);
    if (it == memo.end()) it = memo.emplace(hs, h_monomial_to_schur(hs)).first;
    return it->second;
  };
  // (exponent, h indices) -> coefficient
  std::map<std::pair<int, std::vector<int>>, Integer> acc;
  for (const auto& [lambda, c] : s.terms()) {
    for (const auto& [sign, hs] : jacobi_trudi_terms(lambda)) {
      std::vector<int> chosen;
      auto rec = [&](auto&& self, std::size_t pos, int exponent, int sgn) -> void {
        if (pos == hs.size()) {
          if (exponent > window.hi) return;
          std::vector<int> key = chosen;
          std::sort(key.begin(), key.end(), std::greater<>());
          acc[{exponent, std::move(key)}] += sgn > 0 ? Integer(c) : Integer(-c);
          return;
        }
        const int n = hs[pos];
        const int max_j = kind == SchubertKind::Minus ? n : std::min(n, 1);
        for (int j = 0; j <= max_j && exponent - j >= window.lo; ++j) {
          const int next_sign = (kind == SchubertKind::BarMinus && j == 1) ? -sgn : sgn;
          if (n - j > 0) chosen.push_back(n - j);
          self(self, pos + 1, exponent - j, next_sign);
          if (n - j > 0) chosen.pop_back();
        }
      };
      rec(rec, 0, 0, sign);
    }
  }
  for (const auto& [key, coeff] : acc) {
    if (coeff.is_zero() || !window.contains(key.first)) continue;
    const ChargedSchur& t = to_schur(key.second);
    r.add_term(key.first, ChargedSchur(s.charge(), (t * coeff).terms()));
  }
  return r;
}

LaurentSeries<ChargedSchur> h_series_mult(const ChargedSchur& s, Window window) {
  if (s.is_zero()) return LaurentSeries<ChargedSchur>::polynomial(window);
  LaurentSeries<ChargedSchur> r(window, window.lo <= 0, false);
  for (int k = std::max(0, window.lo); k <= window.hi; ++k) r.add_term(k, h_mult(k, s));
  return r;
}

LaurentSeries<ChargedSchur> e_series_mult(const ChargedSchur& s, Window window) {
  if (s.is_zero()) return LaurentSeries<ChargedSchur>::polynomial(window);
  LaurentSeries<ChargedSchur> r(window, window.lo <= 0, false);
  // X_k = (-1)^k e_k s satisfies X_0 = s, X_k = -sum_{j>=1} h_j X_{k-j}.
  std::vector<ChargedSchur> x{s};
  for (int k = 1; k <= window.hi; ++k) {
    ChargedSchur acc(s.charge(), {});
    for (int j = 1; j <= k; ++j) acc += h_mult(j, x[k - j]);
    x.push_back(-acc);
  }
  for (int k = std::max(0, window.lo); k <= window.hi; ++k) r.add_term(k, x[k]);
  return r;
}

std::vector<ChargedSchur> to_boson(const FockVector& f) {
  std::map<int, LinearCombination<Partition>> parts;
  for (const auto& [m, c] : f) parts[m.charge].add_term(m.shape, c);
  std::vector<ChargedSchur> out;
  for (auto& [m, t] : parts) out.emplace_back(m, std::move(t));
  return out;
}

FockVector to_fermion(const ChargedSchur& s) {
  FockVector f;
  for (const auto& [lambda, c] : s.terms()) f.add_term(FockMonomial{s.charge(), lambda}, c);
  return f;
}

std::string to_string(const ChargedSchur& s) {
  std::string body = detail::format_combination(s.terms(), [](const Partition& p) { return "s" + to_string(p); });
  if (s.is_zero() || s.charge() == 0) return body;
  return "zeta^" + std::to_string(s.charge()) + "*(" + body + ")";
}

}  // namespace fockcalc
