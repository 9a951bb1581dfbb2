#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fockcalc {

/// Non-increasing finite sequence of positive integers. Trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws PartitionError on negative or increasing input.
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::span<const int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part lambda_k, zero beyond the length.
  int part(int k) const noexcept { return k >= 1 && k <= length() ? parts_[k - 1] : 0; }

  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition make_partition(std::span<const int> parts);

/// lambda with its i-th part deleted (1-based, i >= 1). For i > length, lambda itself.
Partition remove_part(const Partition& lambda, int i);

/// lambda + (1^j): adds one to each of the first j parts.
Partition add_column(const Partition& lambda, int j);

/// All partitions of weight <= max_weight with at most max_length parts,
/// by weight and then reverse lexicographically within a weight.
std::vector<Partition> enumerate_bounded(int max_weight, int max_length);

/// Partitions of exactly `weight`, reverse lexicographic.
std::vector<Partition> partitions_of(int weight, int max_length);

/// "(2,1)"; the empty partition prints as "()".
std::string to_string(const Partition& lambda);

}  // namespace fockcalc
