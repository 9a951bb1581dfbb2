#include "fockcalc/partition.hpp"

#include <numeric>
#include <stdexcept>

#include "fockcalc/errors.hpp"

namespace fockcalc {

namespace {

std::vector<int> validated(std::span<const int> parts) {
  std::vector<int> v(parts.begin(), parts.end());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) throw PartitionError(PartitionError::Kind::Negative, "partition has a negative part");
    if (k > 0 && v[k] > v[k - 1]) {
      throw PartitionError(PartitionError::Kind::NonMonotone, "partition parts must be non-increasing");
    }
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void revlex(int remaining, int max_part, int slots, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(std::span<const int>(current));
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    revlex(remaining - p, p, slots - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(validated(std::span<const int>(parts.begin(), parts.size()))) {}

Partition::Partition(std::span<const int> parts) : parts_(validated(parts)) {}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::span<const int>(c));
}

Partition make_partition(std::span<const int> parts) { return Partition(parts); }

Partition remove_part(const Partition& lambda, int i) {
  if (i < 1) throw std::out_of_range("remove_part index must be positive");
  // Past the length the removed part is a trailing zero.
  if (i > lambda.length()) return lambda;
  std::vector<int> v = lambda.parts();
  v.erase(v.begin() + (i - 1));
  return Partition(std::span<const int>(v));
}

Partition add_column(const Partition& lambda, int j) {
  if (j < 0) throw std::invalid_argument("add_column needs j >= 0");
  std::vector<int> v = lambda.parts();
  if (static_cast<int>(v.size()) < j) v.resize(j, 0);
  for (int k = 0; k < j; ++k) ++v[k];
  return Partition(std::span<const int>(v));
}

std::vector<Partition> partitions_of(int weight, int max_length) {
  std::vector<Partition> out;
  if (weight < 0 || max_length < 0) return out;
  std::vector<int> current;
  revlex(weight, weight, max_length, current, out);
  return out;
}

std::vector<Partition> enumerate_bounded(int max_weight, int max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto level = partitions_of(n, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (int k = 0; k < lambda.length(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(lambda.parts()[k]);
  }
  return s + ")";
}

}  // namespace fockcalc
