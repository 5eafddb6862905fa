#include "stabletype/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stabletype/error.hpp"

namespace stabletype {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidPermutation("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree) throw InvalidPermutation("cycle point out of range");
      if (used[from]) throw InvalidPermutation("point repeated within a cycle");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
    Permutation c;
    c.images_ = std::move(images);
    result = c * result;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (auto len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string(bool one_based) const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + (one_based ? 1 : 0);
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::extended(std::size_t degree) const {
  Permutation out = identity(std::max(degree, images_.size()));
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  Permutation out = identity(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) h = (h ^ x) * 1099511628211ULL;
  return h;
}

}  // namespace stabletype
