#pragma once

#include <string>

#include "fockcalc/integer.hpp"

namespace fockcalc::detail {

/// "3*x - y + z" rendering of a linear combination; "0" when empty.
template <class Vec, class Fmt>
std::string format_combination(const Vec& v, Fmt&& fmt) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : v) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (a != 1) s += a.str() + "*";
    s += fmt(m);
    first = false;
  }
  return s;
}

}  // namespace fockcalc::detail
