#include "fockcalc/suites.hpp"

#include <random>
#include <stdexcept>

#include "fockcalc/boson.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/glrep.hpp"
#include "fockcalc/json.hpp"
#include "fockcalc/partition.hpp"
#include "fockcalc/series.hpp"
#include "fockcalc/vertex.hpp"

namespace fockcalc::cli {

namespace {

using nlohmann::json;

class Recorder {
 public:
  Recorder(std::string name, const SuiteOptions& options) : options_(options) { report_.name = std::move(name); }

  /// Compares with the optional injected fault applied to the first case.
  template <class T, class Eq, class ToJson>
  void check(const T& expected, T actual, Eq&& equal, ToJson&& to_json, json context) {
    if (options_.inject_sign_fault && report_.total == 0) actual = -actual;
    ++report_.total;
    if (equal(expected, actual)) {
      ++report_.passed;
    } else if (!report_.counterexample) {
      report_.counterexample = json{{"suite", report_.name},
                                    {"case", std::move(context)},
                                    {"expected", to_json(expected)},
                                    {"actual", to_json(actual)}};
    }
  }

  void check_vectors(const FockVector& expected, const FockVector& actual, json context) {
    check(
        expected, actual, [](const FockVector& a, const FockVector& b) { return a == b; },
        [](const FockVector& v) { return json(v); }, std::move(context));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteOptions options_;
  SuiteReport report_;
};

json seed_json(int m, const Partition& lambda) { return json{{"charge", m}, {"shape", lambda}}; }

struct Ranges {
  int max_weight;
  int max_charge;
  int radius;
};

SuiteReport inverse_suite(const SuiteOptions& o) {
  const Ranges r = o.size == SuiteSize::Small ? Ranges{3, 1, 3} : Ranges{6, 2, 5};
  const Window w{-r.radius, r.radius};
  Recorder rec("inverse", o);
  auto op = [](SchubertKind k) { return [k](const FockVector& v, Window win) { return schubert_fock(k, v, win); }; };
  auto eq = [w](const LaurentSeries<FockVector>& a, const LaurentSeries<FockVector>& b) { return agree_on(a, b, w); };
  auto js = [](const LaurentSeries<FockVector>& s) { return series_to_json(s); };
  for (const auto& lambda : enumerate_bounded(r.max_weight, r.max_weight)) {
    for (int m = -r.max_charge; m <= r.max_charge; ++m) {
      const FockVector f = fock_basis(m, lambda);
      const auto id = LaurentSeries<FockVector>::monomial(0, f);
      auto plus = schubert_fock(SchubertKind::Plus, f, w);
      rec.check(id, apply_termwise(plus, op(SchubertKind::BarPlus), w, schubert_bounds(SchubertKind::BarPlus)), eq, js,
                json{{"identity", "sigmabar_+ sigma_+ = id"}, {"seed", seed_json(m, lambda)}});
      auto minus = schubert_fock(SchubertKind::Minus, f, full_minus_window(f));
      rec.check(id, apply_termwise(minus, op(SchubertKind::BarMinus), w, schubert_bounds(SchubertKind::BarMinus)), eq,
                js, json{{"identity", "sigmabar_- sigma_- = id"}, {"seed", seed_json(m, lambda)}});
    }
  }
  return rec.take();
}

SuiteReport giambelli_suite(const SuiteOptions& o) {
  const Ranges r = o.size == SuiteSize::Small ? Ranges{4, 1, 0} : Ranges{6, 2, 0};
  Recorder rec("giambelli", o);
  for (const auto& lambda : enumerate_bounded(r.max_weight, 4)) {
    for (int m = -r.max_charge; m <= r.max_charge; ++m) {
      rec.check_vectors(fock_basis(m, lambda), giambelli(lambda, m), json{{"lambda", lambda}, {"charge", m}});
    }
  }
  return rec.take();
}

// sigma_-(w) sigma_+(z) f against i_{w,z} w/(w-z) sigma_+(z) sigma_-(w) f, z outer.
std::pair<BiLaurent<FockVector>, BiLaurent<FockVector>> comm1_sides(const FockVector& f, Window zw, Window ww) {
  const int L = max_weight(f);
  auto minus = [](const FockVector& v, Window) { return schubert_fock(SchubertKind::Minus, v, full_minus_window(v)); };
  auto plus = [](const FockVector& v, Window w) { return schubert_fock(SchubertKind::Plus, v, w); };
  auto lhs = map_coeffs(schubert_fock(SchubertKind::Plus, f, zw),
                        [&](const FockVector& v) { return minus(v, Window{}); });
  const int K = std::max(0, zw.hi + L) + std::max(0, ww.hi);
  const Window qz{std::min(zw.lo, 0), std::max(0, zw.hi + K)};
  auto q = lift_to_outer(minus(f, Window{}), plus, qz);
  auto p = expand_geometric(GeometricDirection::ZOverW, Variable::w, Window{0, K}, Variable::z);
  return {lhs, series_mul(q, p, zw, ww)};
}

// sigmabar_-(z) sigmabar_+(w) f against i_{z,w} z/(z-w) sigmabar_+(w) sigmabar_-(z) f, w outer.
std::pair<BiLaurent<FockVector>, BiLaurent<FockVector>> comm2_sides(const FockVector& f, Window zw, Window ww) {
  const int L = max_weight(f);
  auto bar_minus = [](const FockVector& v, Window) {
    return schubert_fock(SchubertKind::BarMinus, v, full_minus_window(v));
  };
  auto bar_plus = [](const FockVector& v, Window w) { return schubert_fock(SchubertKind::BarPlus, v, w); };
  auto lhs = map_coeffs(schubert_fock(SchubertKind::BarPlus, f, ww),
                        [&](const FockVector& v) { return bar_minus(v, Window{}); });
  const int K = std::max(0, ww.hi + L) + std::max(0, zw.hi);
  const Window qw{std::min(ww.lo, 0), std::max(0, ww.hi + K)};
  auto q = lift_to_outer(bar_minus(f, Window{}), bar_plus, qw);
  auto p = expand_geometric(GeometricDirection::WOverZ, Variable::z, Window{0, K}, Variable::w);
  return {lhs, series_mul(q, p, ww, zw)};
}

SuiteReport commutation_suite(const SuiteOptions& o) {
  const Ranges r = o.size == SuiteSize::Small ? Ranges{2, 1, 3} : Ranges{4, 2, 4};
  const Window w{-r.radius, r.radius};
  Recorder rec("commutation", o);
  auto eq = [w](const BiLaurent<FockVector>& a, const BiLaurent<FockVector>& b) { return agree_on(a, b, w, w); };
  auto js = [w](const BiLaurent<FockVector>& s) { return series_to_json(s.restricted(w)); };
  for (const auto& lambda : enumerate_bounded(r.max_weight, r.max_weight)) {
    for (int m = -r.max_charge; m <= r.max_charge; ++m) {
      const FockVector f = fock_basis(m, lambda);
      auto [l1, r1] = comm1_sides(f, w, w);
      rec.check(l1, r1, eq, js, json{{"identity", "comm1"}, {"seed", seed_json(m, lambda)}});
      auto [l2, r2] = comm2_sides(f, w, w);
      rec.check(l2, r2, eq, js, json{{"identity", "comm2"}, {"seed", seed_json(m, lambda)}});
    }
  }
  const FockVector vac = fock_basis(0);
  rec.check_vectors(fock_basis(0, {1}), sigma_fock(-1, sigma_fock(2, vac)),
                    json{{"identity", "sigma_{-1} sigma_2 [b]_0"}});
  rec.check_vectors(FockVector(), sigma_fock(2, sigma_fock(-1, vac)), json{{"identity", "sigma_2 sigma_{-1} [b]_0"}});
  return rec.take();
}

SuiteReport djkm_suite(const SuiteOptions& o) {
  const Ranges r = o.size == SuiteSize::Small ? Ranges{2, 1, 3} : Ranges{4, 2, 5};
  const Window w{-r.radius, r.radius};
  Recorder rec("djkm", o);
  for (const auto& lambda : enumerate_bounded(r.max_weight, r.max_weight)) {
    for (int m = -r.max_charge; m <= r.max_charge; ++m) {
      const FockVector f = fock_basis(m, lambda);
      auto g = djkm_generating(f, w, w);
      for (int i = w.lo; i <= w.hi; ++i) {
        for (int j = w.lo; j <= w.hi; ++j) {
          rec.check_vectors(djkm(i, j, f), g.coefficient(i).coefficient(-j),
                            json{{"i", i}, {"j", j}, {"seed", seed_json(m, lambda)}});
        }
      }
    }
  }
  return rec.take();
}

FiniteGL random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> dist(-3, 3);
  FiniteGL a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = dist(rng);
  }
  return a;
}

SuiteReport glrep_suite(const SuiteOptions& o) {
  const int max_n = o.size == SuiteSize::Small ? 4 : 6;
  const int pairs = o.size == SuiteSize::Small ? 5 : 50;
  Recorder rec("glrep", o);
  auto eq = [](const BoxBasisVector& a, const BoxBasisVector& b) { return a == b; };
  auto js = [](const BoxBasisVector& v) { return json(v); };
  std::mt19937 rng(20240531);
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= std::min(3, n); ++r) {
      std::vector<Partition> box;
      for (const auto& p : enumerate_bounded(r * (n - r), r)) {
        if (p.part(1) <= n - r) box.push_back(p);
      }
      for (int t = 0; t < pairs; ++t) {
        const FiniteGL a = random_matrix(rng, n), b = random_matrix(rng, n);
        const FiniteGL ab = bracket(a, b);
        for (const auto& lambda : box) {
          BoxBasisVector v{r, n, LinearCombination<Partition>(lambda)};
          BoxBasisVector lhs = delta_action(ab, v);
          BoxBasisVector x = delta_action(a, delta_action(b, v));
          BoxBasisVector y = delta_action(b, delta_action(a, v));
          BoxBasisVector rhs{r, n, x.terms - y.terms};
          rec.check(lhs, rhs, eq, js,
                    json{{"n", n}, {"r", r}, {"pair", t}, {"lambda", lambda}, {"A", a}, {"B", b}});
        }
      }
    }
  }
  return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"inverse", "giambelli", "commutation", "djkm", "glrep"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "inverse") return inverse_suite(options);
  if (name == "giambelli") return giambelli_suite(options);
  if (name == "commutation") return commutation_suite(options);
  if (name == "djkm") return djkm_suite(options);
  if (name == "glrep") return glrep_suite(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace fockcalc::cli
