#pragma once

#include <climits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fockcalc/exterior.hpp"
#include "fockcalc/integer.hpp"

namespace fockcalc::detail {

/// Sorted (decreasing) index list together with the exponent of the formal variable.
using ShiftKey = std::pair<int, std::vector<int>>;
using ShiftTerms = std::map<ShiftKey, Integer>;

/// Expands the Leibniz product of per-factor Schubert series over b_{indices[0]} ^ b_{indices[1]} ^ ...
/// keeping exponents in [lo, hi]. Terms with a repeated index, or an index <= floor, vanish.
ShiftTerms shift_expand(SchubertKind kind, std::span<const int> indices, int lo, int hi, int floor = INT_MIN);

}  // namespace fockcalc::detail
