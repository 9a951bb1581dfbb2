#include "fockcalc/detail/shift_expand.hpp"

#include <algorithm>
#include <functional>

namespace fockcalc::detail {

namespace {

struct Step {
  int shift;
  int exponent;
  int sign;
};

// Inserts x into a decreasing list; returns false on a repeat. Flips sign by the
// number of smaller entries that x has to pass.
bool insert_sorted(std::vector<int>& v, int x, int& sign) {
  auto it = std::lower_bound(v.begin(), v.end(), x, std::greater<>());
  if (it != v.end() && *it == x) return false;
  if ((v.end() - it) % 2 != 0) sign = -sign;
  v.insert(it, x);
  return true;
}

}  // namespace

ShiftTerms shift_expand(SchubertKind kind, std::span<const int> indices, int lo, int hi, int floor) {
  ShiftTerms states;
  if (lo > hi) return states;
  states.emplace(ShiftKey{0, {}}, Integer(1));
  std::vector<Step> steps;
  for (int j : indices) {
    ShiftTerms next;
    for (const auto& [key, coeff] : states) {
      const int e0 = key.first;
      steps.clear();
      switch (kind) {
        case SchubertKind::Plus:
          for (int s = 0; e0 + s <= hi; ++s) steps.push_back({s, s, 1});
          break;
        case SchubertKind::Minus:
          for (int s = 0; e0 - s >= lo && j - s > floor; ++s) steps.push_back({-s, -s, 1});
          break;
        case SchubertKind::BarPlus:
          steps.push_back({0, 0, 1});
          if (e0 + 1 <= hi) steps.push_back({1, 1, -1});
          break;
        case SchubertKind::BarMinus:
          steps.push_back({0, 0, 1});
          if (e0 - 1 >= lo) steps.push_back({-1, -1, -1});
          break;
      }
      for (const Step& st : steps) {
        const int x = j + st.shift;
        if (x <= floor) continue;
        int sign = st.sign;
        std::vector<int> v = key.second;
        if (!insert_sorted(v, x, sign)) continue;
        auto [it, inserted] = next.try_emplace(ShiftKey{e0 + st.exponent, std::move(v)}, coeff);
        if (inserted) {
          if (sign < 0) it->second = -it->second;
        } else {
          if (sign < 0) {
            it->second -= coeff;
          } else {
            it->second += coeff;
          }
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    states = std::move(next);
  }
  for (auto it = states.begin(); it != states.end();) {
    const int e = it->first.first;
    it = (e >= lo && e <= hi) ? std::next(it) : states.erase(it);
  }
  return states;
}

}  // namespace fockcalc::detail
