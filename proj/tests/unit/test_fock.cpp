#include <doctest.h>

#include <random>

#include "fockcalc/errors.hpp"
#include "fockcalc/fock.hpp"
#include "oracles.hpp"

using namespace fockcalc;

namespace {

constexpr SchubertKind kKinds[] = {SchubertKind::Plus, SchubertKind::Minus, SchubertKind::BarPlus,
                                   SchubertKind::BarMinus};

bool is_plus(SchubertKind k) { return k == SchubertKind::Plus || k == SchubertKind::BarPlus; }

ExtVector b(std::initializer_list<int> idx) { return wedge_basis(idx); }

auto fock_op(SchubertKind kind) {
  return [kind](const FockVector& v, Window w) { return schubert_fock(kind, v, w); };
}

// b_m ^ b_{m-1} ^ ... ^ b_{m-r+1}
ExtVector top_block(int m, int r) {
  std::vector<int> idx;
  for (int k = 0; k < r; ++k) idx.push_back(m - k);
  return wedge_basis(idx);
}

// Oracle for u ^ f: expand f to a deep prefix and canonicalize the concatenation.
FockVector wedge_onto_oracle(const ExtVector& u, const FockVector& f) {
  FockVector r;
  for (const auto& [um, cu] : u) {
    for (const auto& [fm, cf] : f) {
      const int depth = fm.shape.length() + um.degree() + 3;
      std::vector<int> seq(um.indices);
      for (int j = 1; j <= depth; ++j) seq.push_back(fm.charge - j + 1 + fm.shape.part(j));
      if (auto c = oracle::fock_canonical(seq, fm.charge - depth)) r.add_term(c->second, cu * cf * c->first);
    }
  }
  return r;
}

// Oracle for beta_j contracting [b]_{m+lambda}: find b_j in a prefix deep enough to contain it.
FockVector contract_oracle(int j, const FockMonomial& fm) {
  const int depth = std::max(fm.shape.length(), fm.charge - j + 1) + 2;
  std::vector<int> seq;
  for (int k = 1; k <= depth; ++k) seq.push_back(fm.charge - k + 1 + fm.shape.part(k));
  FockVector r;
  for (int p = 0; p < depth; ++p) {
    if (seq[p] != j) continue;
    std::vector<int> rest(seq);
    rest.erase(rest.begin() + p);
    if (auto c = oracle::fock_canonical(rest, fm.charge - depth)) r.add_term(c->second, Integer(p % 2 == 0 ? 1 : -1) * c->first);
  }
  return r;
}

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("canonicalize_fock examples") {
    auto a = canonicalize_fock({2, 0}, -1);
    REQUIRE(a);
    CHECK(a->sign == 1);
    CHECK(a->monomial == FockMonomial{1, {1}});
    CHECK_FALSE(canonicalize_fock({-1}, 0));
    auto c = canonicalize_fock({0, 1}, -1);
    REQUIRE(c);
    CHECK(c->sign == -1);
    CHECK(c->monomial == FockMonomial{1, {}});
  }

  TEST_CASE("canonicalization shifts the charge and keeps the shape") {
    // b_{m+1+lambda_1} ^ ... ^ b_{m-r+2+lambda_r} ^ [b]_{m-r} = [b]_{m+1+lambda}
    for (const auto& lambda : enumerate_bounded(5, 4)) {
      for (int m = -2; m <= 2; ++m) {
        for (int r = lambda.length(); r <= lambda.length() + 2; ++r) {
          std::vector<int> prefix;
          for (int k = 1; k <= r; ++k) prefix.push_back(m + 1 - k + 1 + lambda.part(k));
          auto c = canonicalize_fock(prefix, m - r + 1);
          REQUIRE(c);
          CHECK(c->sign == 1);
          CHECK(c->monomial == FockMonomial{m + 1, lambda});
        }
      }
    }
  }

  TEST_CASE("wedge_onto examples") {
    CHECK(wedge_onto(b({0}), fock_basis(-1)) == fock_basis(0));
    CHECK(wedge_onto(b({0}), fock_basis(0)).is_zero());
    CHECK(wedge_onto(b({2, 1}), fock_basis(0)) == fock_basis(2));
    CHECK(wedge_onto(b({1, 3}), fock_basis(-1)) == -fock_basis(1, {2, 1}));
  }

  TEST_CASE("contract_fock examples") {
    CHECK(contract_fock(DualVector(0), fock_basis(0)) == fock_basis(-1));
    CHECK(contract_fock(DualVector(3), fock_basis(0)).is_zero());
    CHECK(contract_fock(DualVector(0), fock_basis(1, {1})) == -fock_basis(0, {2}));
  }

  TEST_CASE("wedge_onto and contract_fock agree with deep-prefix oracles") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> deg(0, 3), idx(-4, 4), c(-2, 2);
    for (const auto& lambda : enumerate_bounded(4, 4)) {
      for (int m = -2; m <= 2; ++m) {
        const FockVector f = fock_basis(m, lambda);
        for (int t = 0; t < 3; ++t) {
          std::vector<int> seq(deg(rng));
          for (int& x : seq) x = idx(rng);
          const ExtVector u = oracle::wedge_of(seq) * Integer(c(rng));
          CHECK(wedge_onto(u, f) == wedge_onto_oracle(u, f));
        }
        for (int j = m - 6; j <= m + 6; ++j) CHECK(contract_fock(DualVector(j), f) == contract_oracle(j, {m, lambda}));
      }
    }
  }

  TEST_CASE("schubert_fock examples") {
    for (int m = -2; m <= 2; ++m) {
      const auto s = schubert_fock(SchubertKind::Plus, fock_basis(m), {0, 4});
      for (int i = 0; i <= 4; ++i) CHECK(s.coefficient(i) == wedge_onto(b({m + i}), fock_basis(m - 1)));
    }
    const auto bar = schubert_fock(SchubertKind::BarPlus, fock_basis(0), {0, 2});
    CHECK(bar.coefficient(0) == fock_basis(0));
    CHECK(bar.coefficient(1) == -fock_basis(0, {1}));
    CHECK(bar.coefficient(2) == fock_basis(0, {1, 1}));

    const auto minus = schubert_fock(SchubertKind::Minus, fock_basis(0, {1}), {-1, -1});
    CHECK(minus.coefficient(-1) == fock_basis(0));
  }

  TEST_CASE("schubert_fock agrees with the oracle at every prefix depth") {
    const int radius = 4;
    for (const auto& lambda : enumerate_bounded(5, 5)) {
      for (int m = -3; m <= 3; ++m) {
        const FockVector f = fock_basis(m, lambda);
        const int l = lambda.length();
        for (auto kind : kKinds) {
          const Window w = is_plus(kind) ? Window{0, radius} : Window{-radius, 0};
          const auto base = schubert_fock(kind, f, w);
          for (int k = w.lo; k <= w.hi; ++k) {
            CAPTURE(to_string(f));
            CAPTURE(k);
            CHECK(base.coefficient(k) == oracle::schubert_fock_coefficient(kind, k, f));
          }
          for (int depth : {l, l + 1, radius + 1}) {
            if (depth < l) continue;
            CHECK(agree_on(schubert_fock(kind, f, w, depth), base, w));
          }
        }
      }
    }
  }

  TEST_CASE("prefix depth below the shape length is rejected") {
    CHECK_THROWS(schubert_fock(SchubertKind::Plus, fock_basis(0, {2, 1}), {0, 2}, 1));
  }

  TEST_CASE("Leibniz rule against the explicit convolution") {
    for (const auto& lambda : enumerate_bounded(4, 3)) {
      for (int m = -2; m <= 2; ++m) {
        const int r = lambda.length();
        std::vector<int> idx;
        for (int k = 1; k <= r; ++k) idx.push_back(m - k + 1 + lambda.part(k));
        const ExtVector head = wedge_basis(idx);
        const FockVector tail = fock_basis(m - r);
        const FockVector f = fock_basis(m, lambda);
        for (auto kind : kKinds) {
          const Window w = is_plus(kind) ? Window{0, 4} : Window{-4, 0};
          const auto full = schubert_fock(kind, f, w);
          const auto h = schubert_ext(kind, head, w);
          const auto t = schubert_fock(kind, tail, w);
          for (int i = w.lo; i <= w.hi; ++i) {
            FockVector sum;
            for (int j = w.lo; j <= w.hi; ++j) {
              if (w.contains(i - j)) sum += wedge_onto(h.coefficient(j), t.coefficient(i - j));
            }
            CHECK(full.coefficient(i) == sum);
          }
        }
      }
    }
  }

  TEST_CASE("inverse derivations on F") {
    const Window w{-5, 5};
    for (const auto& lambda : enumerate_bounded(4, 4)) {
      for (int m = -2; m <= 2; ++m) {
        const FockVector f = fock_basis(m, lambda);
        const auto id = LaurentSeries<FockVector>::monomial(0, f);
        const auto plus = schubert_fock(SchubertKind::Plus, f, {0, 5});
        CHECK(agree_on(apply_termwise(plus, fock_op(SchubertKind::BarPlus), w, schubert_bounds(SchubertKind::BarPlus)),
                       id, w));
        const auto minus = schubert_fock(SchubertKind::Minus, f, full_minus_window(f));
        CHECK(agree_on(apply_termwise(minus, fock_op(SchubertKind::BarMinus), w, schubert_bounds(SchubertKind::BarMinus)),
                       id, w));
        const auto barplus = schubert_fock(SchubertKind::BarPlus, f, {0, 5});
        CHECK(agree_on(apply_termwise(barplus, fock_op(SchubertKind::Plus), w, schubert_bounds(SchubertKind::Plus)), id, w));
      }
    }
  }

  TEST_CASE("elementary symmetric expansion of products of sigmabar_+") {
    const Window w{0, 3}, cmp{-1, 3};
    for (int m = -2; m <= 2; ++m) {
      const auto op = [](const ExtVector& v) { return schubert_ext(SchubertKind::BarPlus, v, {0, 3}); };
      auto sign = [](int j) { return Integer(j % 2 == 0 ? 1 : -1); };

      const auto s1 = schubert_ext(SchubertKind::BarPlus, b({m - 1}), w);
      LaurentSeries<ExtVector> e1 = LaurentSeries<ExtVector>::polynomial({0, 1});
      for (int a = 0; a <= 1; ++a) e1.add_term(a, b({m - 1 + a}) * sign(a));
      CHECK(agree_on(s1, e1, cmp));

      const auto s2 = map_coeffs(schubert_ext(SchubertKind::BarPlus, b({m - 2}), w), op);
      BiLaurent<ExtVector> e2 = BiLaurent<ExtVector>::polynomial({0, 1});
      for (int a = 0; a <= 1; ++a) {
        LaurentSeries<ExtVector> inner = LaurentSeries<ExtVector>::polynomial({0, 1});
        for (int c = 0; c <= 1; ++c) inner.add_term(c, b({m - 2 + a + c}) * sign(a + c));
        e2.add_term(a, inner);
      }
      CHECK(agree_on(s2, e2, cmp, cmp));

      const auto s3 = map_coeffs(map_coeffs(schubert_ext(SchubertKind::BarPlus, b({m - 3}), w), op),
                                 [&](const LaurentSeries<ExtVector>& s) { return map_coeffs(s, op); });
      LaurentSeries<BiLaurent<ExtVector>> e3 = LaurentSeries<BiLaurent<ExtVector>>::polynomial({0, 1});
      for (int a = 0; a <= 1; ++a) {
        BiLaurent<ExtVector> mid = BiLaurent<ExtVector>::polynomial({0, 1});
        for (int c = 0; c <= 1; ++c) {
          LaurentSeries<ExtVector> inner = LaurentSeries<ExtVector>::polynomial({0, 1});
          for (int d = 0; d <= 1; ++d) inner.add_term(d, b({m - 3 + a + c + d}) * sign(a + c + d));
          mid.add_term(c, inner);
        }
        e3.add_term(a, mid);
      }
      CHECK(agree_on(s3, e3, cmp, cmp, cmp));
    }
  }

  TEST_CASE("the top block wedged onto sigmabar_+ products of a vacuum returns the vacuum") {
    const Window w{0, 3};
    const auto op = [&](const FockVector& v) { return schubert_fock(SchubertKind::BarPlus, v, w); };
    for (int m = -2; m <= 2; ++m) {
      const FockVector vac = fock_basis(m);
      const auto one = LaurentSeries<FockVector>::monomial(0, vac);

      auto g1 = [&](const FockVector& v) { return wedge_onto(top_block(m, 1), v); };
      CHECK(agree_on(map_coeffs(op(fock_basis(m - 1)), g1), one, w));

      auto g2 = [&](const FockVector& v) { return wedge_onto(top_block(m, 2), v); };
      const auto s2 = map_coeffs(op(fock_basis(m - 2)), op);
      const auto r2 = map_coeffs(s2, [&](const LaurentSeries<FockVector>& s) { return map_coeffs(s, g2); });
      CHECK(agree_on(r2, BiLaurent<FockVector>::monomial(0, one), w, w));

      auto g3 = [&](const FockVector& v) { return wedge_onto(top_block(m, 3), v); };
      const auto s3 = map_coeffs(map_coeffs(op(fock_basis(m - 3)), op),
                                 [&](const LaurentSeries<FockVector>& s) { return map_coeffs(s, op); });
      const auto r3 = map_coeffs(s3, [&](const BiLaurent<FockVector>& s) {
        return map_coeffs(s, [&](const LaurentSeries<FockVector>& t) { return map_coeffs(t, g3); });
      });
      CHECK(agree_on(r3, LaurentSeries<BiLaurent<FockVector>>::monomial(0, BiLaurent<FockVector>::monomial(0, one)), w, w,
                     w));
    }
  }

  TEST_CASE("integration by parts on F") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<int> charge(-2, 2), rank(1, 3);
    const auto shapes = enumerate_bounded(3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    const Window w{0, 4};
    for (int t = 0; t < 40; ++t) {
      const int m = charge(rng), r = rank(rng);
      const Partition mu = shapes[pick(rng)];
      if (mu.length() > r) continue;
      std::vector<int> idx;
      for (int k = 1; k <= r; ++k) idx.push_back(m - k + 1 + mu.part(k));
      const ExtVector u = wedge_basis(idx);
      const FockVector f = fock_basis(charge(rng), shapes[pick(rng)]);
      const auto lhs = map_coeffs(schubert_ext(SchubertKind::Plus, u, w), [&](const ExtVector& x) { return wedge_onto(x, f); });
      const auto inner =
          map_coeffs(schubert_fock(SchubertKind::BarPlus, f, w), [&](const FockVector& v) { return wedge_onto(u, v); });
      const auto rhs = apply_termwise(inner, fock_op(SchubertKind::Plus), w, schubert_bounds(SchubertKind::Plus));
      CHECK(agree_on(lhs, rhs, w));
    }
  }

  TEST_CASE("sigma_i do not commute on F") {
    const FockVector vac = fock_basis(0);
    CHECK(sigma_fock(-1, sigma_fock(2, vac)) == fock_basis(0, {1}));
    CHECK(sigma_fock(2, sigma_fock(-1, vac)).is_zero());
  }

  TEST_CASE("giambelli examples") {
    CHECK(giambelli({1}, 0) == fock_basis(0, {1}));
    CHECK(giambelli({}, 5) == fock_basis(5));
    const FockVector vac = fock_basis(0);
    const FockVector det = sigma_fock(2, sigma_fock(1, vac)) - sigma_fock(3, sigma_fock(0, vac));
    CHECK(det == fock_basis(0, {2, 1}));
    CHECK(giambelli({2, 1}, 0) == det);
  }

  TEST_CASE("giambelli against the permutation expansion") {
    for (const auto& lambda : enumerate_bounded(5, 4)) {
      for (int m = -2; m <= 2; ++m) {
        CAPTURE(to_string(lambda));
        const FockVector expected = oracle::giambelli(lambda, m);
        CHECK(expected == fock_basis(m, lambda));
        CHECK(giambelli(lambda, m) == expected);
      }
    }
  }

  TEST_CASE("zeta shift and R") {
    CHECK(zeta_shift(fock_basis(0), 1) == fock_basis(1));
    CHECK(zeta_shift(fock_basis(2, {3, 1}), -2) == fock_basis(0, {3, 1}));
    CHECK(zeta_shift(FockVector(), 4).is_zero());

    const auto r = r_op(fock_basis(0), false);
    CHECK(agree_on(r, LaurentSeries<FockVector>::monomial(1, fock_basis(1)), {-3, 3}));
    const auto ri = r_op(fock_basis(0), true);
    CHECK(agree_on(ri, LaurentSeries<FockVector>::monomial(0, fock_basis(-1)), {-3, 3}));

    const FockVector f = fock_basis(3, {1});
    const auto once = r_op(f, false);
    LaurentSeries<FockVector> back = LaurentSeries<FockVector>::polynomial({-8, 8});
    for (const auto& [k, v] : once.terms()) {
      const auto inv = r_op(v, true);
      for (const auto& [e, u] : inv.terms()) back.add_term(k + e, u);
    }
    CHECK(agree_on(back, LaurentSeries<FockVector>::monomial(0, f), {-8, 8}));
  }

  TEST_CASE("charge helpers") {
    const FockVector mixed = fock_basis(0) + fock_basis(2, {1});
    CHECK(charges(mixed) == std::vector<int>{0, 2});
    CHECK(max_weight(mixed) == 1);
    CHECK(charge_part(mixed, 2) == fock_basis(2, {1}));
    CHECK_THROWS_AS(homogeneous_charge(mixed), ChargeMixed);
    CHECK(homogeneous_charge(fock_basis(-3, {2})) == -3);
    CHECK(prefix_indices({1, {2, 1}}, 3) == std::vector<int>{3, 1, -1});
    CHECK(to_string(fock_basis(0, {2, 1}) * Integer(-2)) == "-2*[b]_{0+(2,1)}");
  }
}
