#include "fockcalc/fock.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "fockcalc/detail/format.hpp"
#include "fockcalc/detail/shift_expand.hpp"
#include "fockcalc/errors.hpp"

namespace fockcalc {

FockVector fock_basis(int charge, const Partition& shape) { return FockVector(FockMonomial{charge, shape}); }

std::vector<int> prefix_indices(const FockMonomial& mono, int depth) {
  std::vector<int> idx(depth);
  for (int k = 1; k <= depth; ++k) idx[k - 1] = mono.charge - k + 1 + mono.shape.part(k);
  return idx;
}

std::optional<SignedFockMonomial> canonicalize_fock(std::vector<int> prefix, int tail_charge) {
  auto n = normalize_wedge(std::move(prefix));
  if (!n) return std::nullopt;
  const auto& idx = n->monomial.indices;
  if (!idx.empty() && idx.back() <= tail_charge) return std::nullopt;
  const int len = static_cast<int>(idx.size());
  const int charge = tail_charge + len;
  std::vector<int> parts(len);
  for (int k = 1; k <= len; ++k) parts[k - 1] = idx[k - 1] - charge + (k - 1);
  return SignedFockMonomial{n->sign, FockMonomial{charge, Partition(std::span<const int>(parts))}};
}

std::vector<int> charges(const FockVector& f) {
  std::vector<int> out;
  for (const auto& [m, c] : f) {
    if (out.empty() || out.back() != m.charge) out.push_back(m.charge);
  }
  return out;
}

int max_weight(const FockVector& f) {
  int w = 0;
  for (const auto& [m, c] : f) w = std::max(w, m.shape.weight());
  return w;
}

int homogeneous_charge(const FockVector& f) {
  auto cs = charges(f);
  if (cs.size() != 1) throw ChargeMixed("expected a nonzero vector of a single charge");
  return cs.front();
}

FockVector charge_part(const FockVector& f, int m) {
  FockVector r;
  for (const auto& [mono, c] : f) {
    if (mono.charge == m) r.add_term(mono, c);
  }
  return r;
}

FockVector wedge_onto(const ExtVector& u, const FockVector& f) {
  FockVector r;
  for (const auto& [um, cu] : u) {
    for (const auto& [fm, cf] : f) {
      int depth = fm.shape.length();
      if (!um.indices.empty()) depth = std::max(depth, fm.charge - um.indices.back() + 1);
      std::vector<int> idx = um.indices;
      auto pre = prefix_indices(fm, depth);
      idx.insert(idx.end(), pre.begin(), pre.end());
      if (auto s = canonicalize_fock(std::move(idx), fm.charge - depth)) {
        r.add_term(s->monomial, cu * cf * s->sign);
      }
    }
  }
  return r;
}

FockVector contract_fock(const DualVector& beta, const FockVector& f) {
  FockVector r;
  for (const auto& [j, cj] : beta) {
    for (const auto& [fm, cf] : f) {
      const int depth = std::max(fm.shape.length(), fm.charge - j + 1);
      auto idx = prefix_indices(fm, depth);
      auto it = std::find(idx.begin(), idx.end(), j);
      if (it == idx.end()) continue;
      const auto pos = it - idx.begin();
      idx.erase(it);
      if (auto s = canonicalize_fock(std::move(idx), fm.charge - depth)) {
        Integer c = cj * cf * s->sign;
        r.add_term(s->monomial, pos % 2 == 0 ? c : Integer(-c));
      }
    }
  }
  return r;
}

Window full_minus_window(const FockVector& f) { return {-max_weight(f), 0}; }

namespace {

void add_canonical(LaurentSeries<FockVector>& r, int exponent, std::vector<int> idx, int tail, const Integer& c) {
  if (auto s = canonicalize_fock(std::move(idx), tail)) {
    r.add_term(exponent, FockVector(s->monomial, c * s->sign));
  }
}

}  // namespace

LaurentSeries<FockVector> schubert_fock(SchubertKind kind, const FockVector& f, Window window,
                                        std::optional<int> prefix_depth) {
  if (f.is_zero()) return LaurentSeries<FockVector>::polynomial(window);
  const bool raising = kind == SchubertKind::Plus || kind == SchubertKind::BarPlus;
  bool zb, za;
  if (raising) {
    zb = window.lo <= 0;
    za = false;
  } else {
    za = window.hi >= 0;
    zb = window.lo <= -max_weight(f);
  }
  LaurentSeries<FockVector> r(window, zb, za);
  for (const auto& [mono, c] : f) {
    const int depth = prefix_depth ? *prefix_depth : mono.shape.length();
    if (depth < mono.shape.length()) throw std::invalid_argument("prefix depth shorter than the partition");
    const int m = mono.charge;
    auto idx = prefix_indices(mono, depth);
    switch (kind) {
      case SchubertKind::Plus: {
        // sigma_+ moves only the top factor of the tail.
        idx.push_back(m - depth);
        const int tail = m - depth - 1;
        for (const auto& [key, coeff] : detail::shift_expand(kind, idx, window.lo, window.hi, tail)) {
          add_canonical(r, key.first, key.second, tail, coeff * c);
        }
        break;
      }
      case SchubertKind::Minus:
      case SchubertKind::BarMinus: {
        const int tail = m - depth;
        for (const auto& [key, coeff] : detail::shift_expand(kind, idx, window.lo, window.hi, tail)) {
          add_canonical(r, key.first, key.second, tail, coeff * c);
        }
        break;
      }
      case SchubertKind::BarPlus: {
        // Tail series: sum_j (-1)^j [b]_{t+(1^j)} z^j with t = m - depth.
        const int t = m - depth;
        if (window.hi < 0) break;
        for (const auto& [key, coeff] : detail::shift_expand(kind, idx, 0, window.hi, t)) {
          for (int j = std::max(0, window.lo - key.first); key.first + j <= window.hi; ++j) {
            std::vector<int> all = key.second;
            std::vector<int> ones(j, 1);
            auto col = prefix_indices(FockMonomial{t, Partition(std::span<const int>(ones))}, j);
            all.insert(all.end(), col.begin(), col.end());
            add_canonical(r, key.first + j, std::move(all), t - j, j % 2 == 0 ? Integer(coeff * c) : Integer(-coeff * c));
          }
        }
        break;
      }
    }
  }
  return r;
}

FockVector sigma_fock(int i, const FockVector& f) {
  auto kind = i >= 0 ? SchubertKind::Plus : SchubertKind::Minus;
  return schubert_fock(kind, f, {i, i}).coefficient(i);
}

FockVector giambelli(const Partition& lambda, int m) {
  const int r = lambda.length();
  if (r == 0) return fock_basis(m);
  const ExtVector start = wedge_basis(prefix_indices(FockMonomial{m, {}}, r));
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 1);
  ExtVector acc;
  do {
    int inversions = 0;
    for (int a = 0; a < r; ++a) {
      for (int b = a + 1; b < r; ++b) inversions += perm[a] > perm[b];
    }
    // det(sigma_{lambda_i - i + j}), sigma_k = 0 for k < 0.
    bool vanishes = false;
    ExtVector u = start;
    for (int i = 1; i <= r && !vanishes; ++i) {
      const int k = lambda.part(i) - i + perm[i - 1];
      if (k < 0) {
        vanishes = true;
      } else if (k > 0) {
        u = sigma_ext(k, u);
      }
    }
    if (vanishes) continue;
    if (inversions % 2 == 0) {
      acc += u;
    } else {
      acc -= u;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return wedge_onto(acc, fock_basis(m - r));
}

FockVector zeta_shift(const FockVector& f, int k) {
  FockVector r;
  for (const auto& [m, c] : f) r.add_term(FockMonomial{m.charge + k, m.shape}, c);
  return r;
}

LaurentSeries<FockVector> r_op(const FockVector& f, bool inverse) {
  if (f.is_zero()) return {};
  auto cs = charges(f);
  auto exponent = [inverse](int m) { return inverse ? -m : m + 1; };
  int lo = INT_MAX, hi = INT_MIN;
  for (int m : cs) {
    lo = std::min(lo, exponent(m));
    hi = std::max(hi, exponent(m));
  }
  auto r = LaurentSeries<FockVector>::polynomial({lo, hi});
  for (const auto& [m, c] : f) {
    r.add_term(exponent(m.charge), FockVector(FockMonomial{m.charge + (inverse ? -1 : 1), m.shape}, c));
  }
  return r;
}

std::string to_string(const FockMonomial& m) {
  std::string s = "[b]_{" + std::to_string(m.charge);
  if (!m.shape.empty()) s += "+" + to_string(m.shape);
  return s + "}";
}

std::string to_string(const FockVector& f) {
  return detail::format_combination(f, [](const FockMonomial& m) { return to_string(m); });
}

}  // namespace fockcalc
