#include "fockcalc/integer.hpp"

#include <stdexcept>
#include <string>

namespace fockcalc {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  Integer v = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    v = v * 10 + (ch - '0');
  }
  return negative ? Integer(-v) : v;
}

}  // namespace fockcalc
