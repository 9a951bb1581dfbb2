#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "fockcalc/integer.hpp"

namespace fockcalc {

/// Finite Z-linear combination of basis keys. Zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Integer>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, const Integer& coeff = 1) { add_term(key, coeff); }

  void add_term(const Key& key, const Integer& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const map_type& terms() const noexcept { return terms_; }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Integer& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Integer(-1); }
  friend LinearCombination operator*(LinearCombination a, const Integer& s) { return a *= s; }
  friend LinearCombination operator*(const Integer& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  map_type terms_;
};

}  // namespace fockcalc
