#include "fockcalc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fockcalc/boson.hpp"
#include "fockcalc/json.hpp"
#include "fockcalc/vertex.hpp"

namespace fockcalc::cli {

namespace {

using Op = Primitive::Op;

int parse_int(const std::string& s, const std::string& token) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer '" + s + "' in '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "' in '" + token + "'");
  }
}

std::vector<std::string> split_args(const std::string& args) {
  std::vector<std::string> out;
  if (args.empty()) return out;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    out.push_back(item);
  }
  return out;
}

Primitive parse_token(const std::string& token) {
  static const std::regex integer_re(R"([+-]?[0-9]+)");
  static const std::regex call_re(R"(([a-z_]+)(?:\(([^()]*)\))?)");
  Primitive p;
  p.text = token;
  if (std::regex_match(token, integer_re)) {
    p.op = Op::Scale;
    p.scale = parse_integer(token);
    return p;
  }
  std::smatch m;
  if (!std::regex_match(token, m, call_re)) throw ParseError("cannot parse token '" + token + "'");
  const std::string name = m[1];
  const bool has_parens = m[2].matched;
  const auto args = split_args(m[2]);

  auto need_args = [&](std::size_t n) {
    if (args.size() != n) {
      throw ParseError("'" + name + "' takes " + std::to_string(n) + " argument(s), got '" + token + "'");
    }
  };
  auto sign_arg = [&]() {
    need_args(1);
    if (args[0] == "+") return true;
    if (args[0] == "-") return false;
    throw ParseError("'" + name + "' takes + or -, got '" + token + "'");
  };

  if (name == "sigma") {
    need_args(1);
    if (args[0] == "+" || args[0] == "-") {
      p.op = Op::SigmaSeries;
      p.kind = args[0] == "+" ? SchubertKind::Plus : SchubertKind::Minus;
    } else {
      p.op = Op::SigmaCoeff;
      p.a = parse_int(args[0], token);
    }
  } else if (name == "sigmabar") {
    p.op = Op::SigmaSeries;
    p.kind = sign_arg() ? SchubertKind::BarPlus : SchubertKind::BarMinus;
  } else if (name == "giambelli") {
    p.op = Op::Giambelli;
    std::vector<int> parts;
    for (const auto& a : args) parts.push_back(parse_int(a, token));
    try {
      p.shape = Partition(std::span<const int>(parts));
    } catch (const PartitionError& e) {
      throw ParseError(std::string("invalid partition in '") + token + "': " + e.what());
    }
  } else if (name == "gamma" || name == "gamma_star") {
    if (has_parens && !args.empty()) throw ParseError("'" + name + "' takes no arguments");
    p.op = name == "gamma" ? Op::Gamma : Op::GammaStar;
  } else if (name == "djkm" || name == "djkm_hat") {
    need_args(2);
    p.op = name == "djkm" ? Op::Djkm : Op::DjkmHat;
    p.a = parse_int(args[0], token);
    p.b = parse_int(args[1], token);
  } else if (name == "r_op") {
    p.op = Op::ROp;
    p.inverse = !sign_arg();
  } else if (name == "zeta") {
    need_args(1);
    p.op = Op::Zeta;
    p.a = parse_int(args[0], token);
  } else {
    throw ParseError("unknown operator '" + name + "'");
  }
  return p;
}

bool is_series_op(Op op) {
  return op == Op::SigmaSeries || op == Op::Gamma || op == Op::GammaStar || op == Op::ROp;
}

// Possibly unbounded exponent interval; nullopt ends are infinite.
struct Demand {
  std::optional<long long> lo;
  std::optional<long long> hi;
};

std::optional<long long> add(std::optional<long long> a, long long d) {
  return a ? std::optional<long long>(*a + d) : std::nullopt;
}

FockVector apply_plain(const Primitive& p, const FockVector& v) {
  switch (p.op) {
    case Op::SigmaCoeff:
      return sigma_fock(p.a, v);
    case Op::Giambelli: {
      FockVector r;
      for (const auto& [mono, c] : v) {
        if (mono.shape.empty()) {
          r += giambelli(p.shape, mono.charge) * c;
          continue;
        }
        // Delta_lambda(sigma_+) acts on F through the B-module structure.
        for (const auto& [sign, hs] : jacobi_trudi_terms(p.shape)) {
          FockVector t(mono, c * sign);
          for (int h : hs) t = sigma_fock(h, t);
          r += t;
        }
      }
      return r;
    }
    case Op::Djkm:
      return djkm(p.a, p.b, v);
    case Op::DjkmHat:
      return djkm_modified(p.a, p.b, v);
    case Op::Zeta:
      return zeta_shift(v, p.a);
    case Op::Scale:
      return v * p.scale;
    default:
      throw std::logic_error("not a plain operator");
  }
}

std::vector<int> shifted(const std::vector<int>& cs, int d) {
  std::vector<int> out;
  for (int c : cs) out.push_back(c + d);
  return out;
}

int charge_shift(const Primitive& p) {
  switch (p.op) {
    case Op::Zeta:
      return p.a;
    case Op::Gamma:
      return 1;
    case Op::GammaStar:
      return -1;
    case Op::ROp:
      return p.inverse ? -1 : 1;
    default:
      return 0;
  }
}

template <class F>
int fold_monomials(const LaurentSeries<FockVector>& s, int init, F&& f) {
  int acc = init;
  for (const auto& [k, v] : s.terms()) {
    for (const auto& [mono, c] : v) acc = f(acc, mono);
  }
  return acc;
}

}  // namespace

bool OperatorExpr::has_series() const {
  return std::any_of(ops.begin(), ops.end(), [](const Primitive& p) { return is_series_op(p.op); });
}

OperatorExpr parse_expr(std::string_view text) {
  OperatorExpr e;
  std::stringstream ss{std::string(text)};
  std::string token;
  while (ss >> token) e.ops.push_back(parse_token(token));
  if (e.ops.empty()) throw ParseError("empty expression");
  return e;
}

Window parse_window(std::string_view text) {
  static const std::regex re(R"(\s*([+-]?[0-9]+)\s*:\s*([+-]?[0-9]+)\s*)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("window must look like LO:HI, got '" + s + "'");
  Window w{parse_int(m[1], s), parse_int(m[2], s)};
  if (w.lo > w.hi) throw ParseError("window LO must not exceed HI");
  return w;
}

FockVector parse_seed(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    if (j.is_object()) return FockVector(j.get<FockMonomial>());
    if (j.is_array()) return j.get<FockVector>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid seed JSON: ") + e.what());
  } catch (const PartitionError& e) {
    throw ParseError(std::string("invalid seed shape: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid seed coefficient: ") + e.what());
  }
  throw ParseError("seed must be a FockMonomial object or a term list");
}

EvalResult eval_expr(const OperatorExpr& expr, const FockVector& seed, std::optional<Window> window) {
  // Application order: rightmost primitive first.
  std::vector<Primitive> ops(expr.ops.rbegin(), expr.ops.rend());
  const std::size_t n = ops.size();

  std::vector<std::vector<int>> charges_before(n);
  std::vector<int> cs = charges(seed);
  for (std::size_t t = 0; t < n; ++t) {
    charges_before[t] = cs;
    cs = shifted(cs, charge_shift(ops[t]));
  }

  // Backward pass: exponent range each stage must deliver exactly.
  std::vector<Demand> out_demand(n);
  Demand d = window ? Demand{window->lo, window->hi} : Demand{};
  for (std::size_t t = n; t-- > 0;) {
    out_demand[t] = d;
    const Primitive& p = ops[t];
    if (!is_series_op(p.op)) continue;
    const auto& ch = charges_before[t];
    const int cmin = ch.empty() ? 0 : ch.front();
    const int cmax = ch.empty() ? 0 : ch.back();
    switch (p.op) {
      case Op::SigmaSeries:
        if (p.kind == SchubertKind::Plus || p.kind == SchubertKind::BarPlus) {
          d = Demand{std::nullopt, d.hi};
        } else {
          d = Demand{d.lo, std::nullopt};
        }
        break;
      case Op::ROp:
        d = p.inverse ? Demand{add(d.lo, cmin), add(d.hi, cmax)} : Demand{add(d.lo, -(cmax + 1)), add(d.hi, -(cmin + 1))};
        break;
      default:
        d = Demand{};
        break;
    }
  }

  LaurentSeries<FockVector> s = LaurentSeries<FockVector>::monomial(0, seed);
  if (seed.is_zero()) s = LaurentSeries<FockVector>::polynomial({0, 0});
  for (std::size_t t = 0; t < n; ++t) {
    const Primitive& p = ops[t];
    if (!is_series_op(p.op)) {
      s = map_coeffs(s, [&p](const FockVector& v) { return apply_plain(p, v); });
      continue;
    }
    ExponentBounds bounds;
    std::function<LaurentSeries<FockVector>(const FockVector&, Window)> fn;
    switch (p.op) {
      case Op::SigmaSeries: {
        bounds = schubert_bounds(p.kind);
        if ((p.kind == SchubertKind::Minus || p.kind == SchubertKind::BarMinus) && s.finite()) {
          bounds.lo = -fold_monomials(s, 0, [](int a, const FockMonomial& m) { return std::max(a, m.shape.weight()); });
        }
        fn = [kind = p.kind](const FockVector& v, Window w) { return schubert_fock(kind, v, w); };
        break;
      }
      case Op::ROp: {
        const auto& ch = charges_before[t];
        const int cmin = ch.empty() ? 0 : ch.front();
        const int cmax = ch.empty() ? 0 : ch.back();
        bounds = p.inverse ? ExponentBounds{-cmax, -cmin} : ExponentBounds{cmin + 1, cmax + 1};
        fn = [inv = p.inverse](const FockVector& v, Window w) {
          auto full = r_op(v, inv);
          LaurentSeries<FockVector> r = LaurentSeries<FockVector>::polynomial(w);
          for (const auto& [k, c] : full.terms()) {
            if (w.contains(k)) r.add_term(k, c);
          }
          return r;
        };
        break;
      }
      case Op::Gamma:
      case Op::GammaStar: {
        const bool star = p.op == Op::GammaStar;
        if (s.finite()) {
          bounds.lo = fold_monomials(s, INT_MAX, [star](int a, const FockMonomial& m) {
            return std::min(a, star ? -(m.charge + m.shape.part(1)) - 1 : m.charge - m.shape.length() + 1);
          });
        }
        fn = [star](const FockVector& v, Window w) { return star ? gamma_star(v, w) : gamma(v, w); };
        break;
      }
      default:
        throw std::logic_error("unhandled series operator");
    }
    const Demand& od = out_demand[t];
    if (s.is_zero()) {
      Window w{static_cast<int>(od.lo.value_or(0)), static_cast<int>(od.hi.value_or(od.lo.value_or(0)))};
      s = LaurentSeries<FockVector>::polynomial(w);
      continue;
    }
    auto slo = s.support_lo();
    auto shi = s.support_hi();
    std::optional<long long> lo = od.lo, hi = od.hi;
    if (!lo && slo && bounds.lo) lo = *slo + *bounds.lo;
    if (!hi && shi && bounds.hi) hi = *shi + *bounds.hi;
    if (!lo || !hi) {
      throw InsufficientWindow("'" + p.text + "' produces an infinite series here; pass --window LO:HI");
    }
    if (*lo > *hi) hi = lo;
    s = apply_termwise(s, fn, Window{static_cast<int>(*lo), static_cast<int>(*hi)}, bounds);
  }

  EvalResult r;
  r.is_series = expr.has_series();
  if (r.is_series) {
    r.series = s;
  } else {
    r.vector = s.coefficient(0);
  }
  return r;
}

std::string grammar_help() {
  return R"help(Expressions are whitespace-separated operators applied right to left: the
operator nearest the seed acts first.  "sigma(-1) sigma(2)" means sigma_{-1}(sigma_2(seed)).

  sigma(+) sigma(-)        Schubert derivations sigma_+(z), sigma_-(z)   (series)
  sigmabar(+) sigmabar(-)  their inverses                                 (series)
  sigma(i)                 coefficient sigma_i                            (plain)
  giambelli(l1,l2,...)     Giambelli determinant in the sigma_i           (plain)
  gamma gamma_star         vertex operators Gamma(z), Gamma*(z)           (series)
  djkm(i,j) djkm_hat(i,j)  gl_infinity action of B_ij and its normal-ordered form
  r_op(+) r_op(-)          R(z) and R(z)^{-1}                              (series)
  zeta(k)                  charge shift by k
  <integer>                scalar multiple

All series operators share the variable z.)help";
}

}  // namespace fockcalc::cli
