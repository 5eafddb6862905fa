// Rep(Q,G) counted through quotients of Q: every map is a surjection onto
// its image followed by an injection, unique up to Out(image).

#include <algorithm>
#include <numeric>

#include "stabletype/homs.hpp"
#include "stabletype/lattice.hpp"
#include "stabletype/named.hpp"
#include "stabletype/out_action.hpp"

namespace stabletype {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

FactorizationReport factorization_check(const FiniteGroup& q, const FiniteGroup& g) {
  FactorizationReport report;
  report.rep_count = rep_classes(q, g).size();

  std::vector<FiniteGroup> quotients;
  for (const auto& n : all_subgroups(q)) {
    if (!is_normal(n)) continue;
    FiniteGroup r = quotient(q, n).group;
    bool seen = false;
    for (const auto& other : quotients) seen = seen || (other.order() == r.order() && is_isomorphic(other, r));
    if (!seen) quotients.push_back(std::move(r));
  }
  std::sort(quotients.begin(), quotients.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });

  for (const auto& r : quotients) {
    FactorizationTerm term{r, describe(r)};
    RepSet surj = surj_classes(q, r);
    RepSet inj = inj_classes(r, g);
    OutGroup out = automorphism_group(r);
    term.surj_classes = surj.size();
    term.inj_classes = inj.size();
    term.out_order = out.out.order();

    const std::size_t pairs = surj.size() * inj.size();
    std::vector<std::size_t> parent(pairs);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (Elem o : out.out.generator_indices()) {
      const std::vector<Elem> a = out.section_map(o);
      std::vector<Elem> a_inv(a.size());
      for (Elem x = 0; x < a.size(); ++x) a_inv[a[x]] = x;
      for (std::size_t s = 0; s < surj.size(); ++s) {
        const auto& sm = surj.classes()[s].representative.image_of;
        std::vector<Elem> moved_s(sm.size());
        for (std::size_t x = 0; x < sm.size(); ++x) moved_s[x] = a[sm[x]];
        const std::size_t s2 = surj.class_of(moved_s);
        for (std::size_t i = 0; i < inj.size(); ++i) {
          const auto& im = inj.classes()[i].representative.image_of;
          std::vector<Elem> moved_i(im.size());
          for (std::size_t y = 0; y < im.size(); ++y) moved_i[y] = im[a_inv[y]];
          const std::size_t i2 = inj.class_of(moved_i);
          parent[find_root(parent, s * inj.size() + i)] = find_root(parent, s2 * inj.size() + i2);
        }
      }
    }
    for (std::size_t x = 0; x < pairs; ++x)
      if (find_root(parent, x) == x) ++term.contribution;
    report.sum += term.contribution;
    report.terms.push_back(std::move(term));
  }
  return report;
}

}  // namespace stabletype
