#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace stabletype {

/// Fixed-capacity bitset over element indices of one group. Used as the
/// identity of a subgroup during lattice enumeration and fusion.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  std::size_t capacity() const noexcept { return capacity_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ULL;
    return h;
  }

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace stabletype
