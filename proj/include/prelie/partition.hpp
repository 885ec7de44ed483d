#ifndef PRELIE_PARTITION_HPP
#define PRELIE_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

/// Integer partition, parts stored weakly decreasing.
///
/// Ordered by size first, then lexicographically on the parts, so that
/// within one degree (1,1,1) < (2,1) < (3).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Number of parts equal to k.
  int multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

  /// Order of the centralizer of a permutation of this cycle type:
  /// prod_k k^{m_k} m_k!.
  Integer z() const {
    Integer r = 1;
    for (int k = 1; k <= largest(); ++k) {
      const int m = multiplicity(k);
      if (m == 0) continue;
      Integer kpow;
      mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
      r *= kpow * factorial(static_cast<unsigned>(m));
    }
    return r;
  }

  /// Fixed points of sigma^k for sigma of this cycle type: sum_{d | k} d m_d.
  int fixed_points_of_power(int k) const {
    int r = 0;
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) r += d * multiplicity(d);
    return r;
  }

  /// Union of multisets of parts.
  friend Partition operator+(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return Partition(std::move(parts));
  }

  /// Every part multiplied by k.
  Partition scaled(int k) const {
    std::vector<int> parts = parts_;
    for (int& p : parts) p *= k;
    return Partition(std::move(parts));
  }

  /// `[3,1,1]`
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in ascending Partition order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Partitions of every size 0..max_size.
inline std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace prelie

#endif  // PRELIE_PARTITION_HPP
