#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stabletype/finite_group.hpp"

namespace stabletype::detail {

inline constexpr Elem kUnassigned = ~Elem{0};

/// Extends images of a generating tuple along the domain's Cayley graph.
/// A map that is consistent on every edge x -> x*s is a homomorphism.
class CayleyExtender {
 public:
  CayleyExtender(FiniteGroup domain, std::vector<Elem> generators);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  /// Fills `map` on <generators[0..images.size())>; other entries are
  /// kUnassigned. Returns false on an inconsistent edge, or on a repeated
  /// image when `injective` is set.
  bool extend(const FiniteGroup& codomain, std::span<const Elem> images, bool injective,
              std::vector<Elem>& map) const;

 private:
  FiniteGroup domain_;
  std::vector<Elem> generators_;
};

/// Backtracks over generator images drawn from `candidates[i]` for
/// generator i, pruning at every prefix. `visit` receives each complete
/// homomorphism as a total map and returns false to stop the search.
void search_generator_images(const CayleyExtender& extender, const FiniteGroup& codomain,
                             const std::vector<std::vector<Elem>>& candidates, bool injective,
                             const std::function<bool(const std::vector<Elem>&)>& visit);

}  // namespace stabletype::detail
