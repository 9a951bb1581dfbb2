#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockcalc/errors.hpp"
#include "fockcalc/exterior.hpp"
#include "fockcalc/fock.hpp"
#include "fockcalc/integer.hpp"
#include "fockcalc/partition.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc::cli {

class ParseError : public Error {
 public:
  using Error::Error;
};

struct Primitive {
  enum class Op { SigmaSeries, SigmaCoeff, Giambelli, Gamma, GammaStar, Djkm, DjkmHat, ROp, Zeta, Scale };

  Op op = Op::Scale;
  SchubertKind kind = SchubertKind::Plus;
  bool inverse = false;
  int a = 0;
  int b = 0;
  Partition shape;
  Integer scale = 1;
  std::string text;
};

/// Primitives in written order. They are applied right to left.
struct OperatorExpr {
  std::vector<Primitive> ops;

  bool has_series() const;
};

OperatorExpr parse_expr(std::string_view text);

/// Parses "LO:HI".
Window parse_window(std::string_view text);

/// A FockMonomial object or a FockVector term list.
FockVector parse_seed(std::string_view json_text);

struct EvalResult {
  bool is_series = false;
  FockVector vector;
  LaurentSeries<FockVector> series;
};

/// Applies the composite operator to seed. Series-valued results are computed exactly on
/// `window`; without a window the result must be a finite series.
EvalResult eval_expr(const OperatorExpr& expr, const FockVector& seed, std::optional<Window> window);

/// Grammar summary for --help.
std::string grammar_help();

}  // namespace fockcalc::cli
