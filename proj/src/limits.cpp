#include "stabletype/limits.hpp"

#include <atomic>

namespace stabletype {

namespace {
std::atomic<std::size_t> g_order_cap{Limits{}.order_cap};
std::atomic<std::size_t> g_subgroup_cap{Limits{}.subgroup_cap};
}  // namespace

Limits current_limits() noexcept { return Limits{g_order_cap.load(), g_subgroup_cap.load()}; }

void set_limits(const Limits& limits) noexcept {
  g_order_cap.store(limits.order_cap);
  g_subgroup_cap.store(limits.subgroup_cap);
}

}  // namespace stabletype
