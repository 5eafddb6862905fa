#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stabletype {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint or overlapping cycles (applied right to left),
  /// points 0-based. Throws InvalidPermutation on out-of-range points or a
  /// repeated point inside one cycle.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Cycle lengths (including 1-cycles) sorted descending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t order() const;

  /// Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// "(1 2 3)(4 5)" style; "()" for the identity.
  std::string to_string(bool one_based = true) const;

  /// Same map on a larger point set, fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Conjugates the support into [offset, offset + degree) on `degree` points total.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace stabletype
