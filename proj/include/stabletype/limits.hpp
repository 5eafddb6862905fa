#pragma once

#include <cstddef>

namespace stabletype {

/// Size caps shared by every enumeration in the library.
///
/// `order_cap` bounds any fully enumerated group (closures, quotients,
/// automorphism groups). `subgroup_cap` bounds the order of groups whose
/// complete subgroup lattice is enumerated.
struct Limits {
  std::size_t order_cap = 2000;
  std::size_t subgroup_cap = 200;
};

Limits current_limits() noexcept;

/// Replaces the process-wide caps. Meant to be called once at startup
/// (the CLI reads ORDER_CAP / SUBGROUP_CAP); results computed under one
/// setting are never cached across a change.
void set_limits(const Limits& limits) noexcept;

/// Restores the previous caps on scope exit. Used by tests.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& limits) : saved_(current_limits()) { set_limits(limits); }
  ~ScopedLimits() { set_limits(saved_); }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace stabletype
