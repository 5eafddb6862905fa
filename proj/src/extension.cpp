#include "stabletype/detail/extension.hpp"

namespace stabletype::detail {

CayleyExtender::CayleyExtender(FiniteGroup domain, std::vector<Elem> generators)
    : domain_(std::move(domain)), generators_(std::move(generators)) {}

bool CayleyExtender::extend(const FiniteGroup& codomain, std::span<const Elem> images, bool injective,
                            std::vector<Elem>& map) const {
  map.assign(domain_.order(), kUnassigned);
  std::vector<char> used(injective ? codomain.order() : 0, 0);
  map[domain_.identity()] = codomain.identity();
  if (injective) used[codomain.identity()] = 1;

  std::vector<Elem> queue{domain_.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t i = 0; i < images.size(); ++i) {
      const Elem y = domain_.mul(x, generators_[i]);
      const Elem value = codomain.mul(map[x], images[i]);
      if (map[y] == kUnassigned) {
        if (injective) {
          if (used[value]) return false;
          used[value] = 1;
        }
        map[y] = value;
        queue.push_back(y);
      } else if (map[y] != value) {
        return false;
      }
    }
  }
  return true;
}

void search_generator_images(const CayleyExtender& extender, const FiniteGroup& codomain,
                             const std::vector<std::vector<Elem>>& candidates, bool injective,
                             const std::function<bool(const std::vector<Elem>&)>& visit) {
  const std::size_t depth = extender.generators().size();
  std::vector<Elem> images;
  std::vector<Elem> map;
  if (depth == 0) {
    if (extender.extend(codomain, images, injective, map)) visit(map);
    return;
  }
  bool keep_going = true;
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    for (Elem c : candidates[level]) {
      if (!keep_going) return;
      images.push_back(c);
      if (extender.extend(codomain, images, injective, map)) {
        if (level + 1 == depth)
          keep_going = visit(map);
        else
          self(self, level + 1);
      }
      images.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace stabletype::detail
