#ifndef PRELIE_PERMUTATION_HPP
#define PRELIE_PERMUTATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prelie/partition.hpp"

namespace prelie {

/// Bijection of {1..m}. Composition follows function notation:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  /// images[i] is the image of i+1.
  explicit Permutation(std::vector<int> images) : image_(std::move(images)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
      if (v < 1 || v > static_cast<int>(image_.size()) || seen[v])
        throw std::invalid_argument("not a bijection of {1.." + std::to_string(image_.size()) + "}");
      seen[v] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> im(m);
    for (int i = 0; i < m; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
  }

  /// Cycles given as lists of points; points not mentioned are fixed.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(m);
    for (int i = 0; i < m; ++i) im[i] = i + 1;
    std::vector<bool> used(m + 1, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        if (a < 1 || a > m || used[a]) throw std::invalid_argument("bad cycle notation");
        used[a] = true;
        im[a - 1] = b;
      }
    }
    return Permutation(std::move(im));
  }

  /// Representative of the class with the given cycle type: cycles on
  /// consecutive points, largest first.
  static Permutation of_cycle_type(const Partition& type) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : type.parts()) {
      std::vector<int> c;
      for (int i = 0; i < part; ++i) c.push_back(next++);
      cycles.push_back(std::move(c));
    }
    return from_cycles(type.size(), cycles);
  }

  int degree() const { return static_cast<int>(image_.size()); }

  int operator()(int x) const {
    if (x < 1 || x > degree()) throw std::out_of_range("point outside permutation domain");
    return image_[x - 1];
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> im(a.degree());
    for (int i = 0; i < a.degree(); ++i) im[i] = a(b(i + 1));
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(degree());
    for (int i = 0; i < degree(); ++i) im[image_[i] - 1] = i + 1;
    return Permutation(std::move(im));
  }

  Partition cycle_type() const {
    std::vector<bool> seen(degree() + 1, false);
    std::vector<int> lengths;
    for (int i = 1; i <= degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = (*this)(j)) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return Partition(std::move(lengths));
  }

  int sign() const {
    const Partition type = cycle_type();
    return (type.size() - type.length()) % 2 == 0 ? 1 : -1;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Sign of the permutation that sorts `keys` ascending (keys pairwise distinct).
template <class Key>
int sorting_sign(const std::vector<Key>& keys) {
  int inversions = 0;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[j] < keys[i]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace prelie

#endif  // PRELIE_PERMUTATION_HPP
