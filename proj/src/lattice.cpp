#include "stabletype/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "stabletype/error.hpp"
#include "stabletype/limits.hpp"

namespace stabletype {

namespace {

void check_subgroup_cap(const FiniteGroup& g) {
  const std::size_t cap = current_limits().subgroup_cap;
  if (g.order() > cap)
    throw CapExceeded("subgroup enumeration of a group of order " + std::to_string(g.order()) +
                      " exceeds subgroup cap " + std::to_string(cap));
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  check_subgroup_cap(g);
  const std::size_t n = g.order();
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen{{found.front().member_set(), 0}};

  // Cyclic extension: every subgroup is reached from a smaller one by
  // adjoining one element. <H, x> depends only on the coset Hx up to
  // generators of <x>, so those are skipped together.
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup h = found[i];
    if (h.order() == n) continue;
    std::vector<bool> skip(n, false);
    for (Elem x = 0; x < n; ++x) {
      if (h.contains(x) || skip[x]) continue;
      const std::size_t ord = g.element_order(x);
      for (std::size_t k = 1; k < ord; ++k) {
        if (std::gcd(k, ord) != 1) continue;
        const Elem xk = g.pow(x, static_cast<std::int64_t>(k));
        for (Elem m : h.members()) skip[g.mul(m, xk)] = true;
      }
      std::vector<Elem> gens = h.generators();
      gens.push_back(x);
      Subgroup k = Subgroup::generated_by(g, gens);
      if (seen.contains(k.member_set())) continue;
      seen.emplace(k.member_set(), found.size());
      found.push_back(std::move(k));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

SubgroupClassTable subgroup_conjugacy_classes(const FiniteGroup& g) {
  SubgroupClassTable t;
  t.subgroups = all_subgroups(g);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (std::size_t i = 0; i < t.subgroups.size(); ++i) index.emplace(t.subgroups[i].member_set(), i);

  constexpr std::size_t kNone = ~std::size_t{0};
  t.fusion.assign(t.subgroups.size(), kNone);
  for (std::size_t i = 0; i < t.subgroups.size(); ++i) {
    if (t.fusion[i] != kNone) continue;
    const std::size_t cls = t.class_reps.size();
    std::vector<std::size_t> orbit{i};
    std::vector<Elem> witness{g.identity()};
    t.fusion[i] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Elem s : g.generator_indices()) {
        const std::size_t j = index.at(conjugate(t.subgroups[orbit[head]], s).member_set());
        if (t.fusion[j] != kNone) continue;
        t.fusion[j] = cls;
        orbit.push_back(j);
        witness.push_back(g.mul(s, witness[head]));
      }
    }
    // Keep members in list order with their witnesses.
    std::vector<std::size_t> order(orbit.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return orbit[a] < orbit[b]; });
    std::vector<Subgroup> members;
    std::vector<Elem> witnesses;
    for (std::size_t k : order) {
      members.push_back(t.subgroups[orbit[k]]);
      witnesses.push_back(witness[k]);
    }
    t.class_reps.push_back(t.subgroups[i]);
    t.members_per_class.push_back(std::move(members));
    t.witnesses.push_back(std::move(witnesses));
  }
  return t;
}

std::vector<FiniteGroup> p_subgroup_iso_classes(const FiniteGroup& g, unsigned p) {
  FiniteGroup sylow_group = sylow(g, p).as_group();
  SubgroupClassTable classes = subgroup_conjugacy_classes(sylow_group);
  std::vector<FiniteGroup> reps;
  for (const auto& rep : classes.class_reps) {
    FiniteGroup candidate = rep.as_group();
    bool seen = false;
    for (const auto& r : reps) {
      if (r.order() == candidate.order() && is_isomorphic(r, candidate)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(candidate));
  }
  return reps;
}

bool is_cyclic_mod_p(const FiniteGroup& g, unsigned p) {
  Subgroup s = sylow(g, p);
  if (!is_normal(s)) return false;
  const std::size_t index = g.order() / s.order();
  if (index == 1) return true;
  // G/P is cyclic iff some coset xP has order [G:P].
  for (Elem x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    Elem y = x;
    while (!s.contains(y)) {
      y = g.mul(y, x);
      ++k;
    }
    if (k == index) return true;
  }
  return false;
}

bool is_cyclic_mod_p(const Subgroup& h, unsigned p) { return is_cyclic_mod_p(h.as_group(), p); }

CyclicModPPoset cyclic_mod_p_poset(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  SubgroupClassTable table = subgroup_conjugacy_classes(g);
  CyclicModPPoset poset;
  poset.prime = p;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const Subgroup& rep = table.class_reps[c];
    if (!is_cyclic_mod_p(rep, p)) continue;
    poset.class_reps.push_back(rep);
    poset.members.push_back(table.members_per_class[c]);
    poset.subgroup_counts.push_back(table.members_per_class[c].size());
    poset.index_in_normalizer.push_back(normalizer(g, rep).order() / rep.order());
  }
  const std::size_t k = poset.size();
  poset.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (poset.class_reps[i].order() > poset.class_reps[j].order() ||
          poset.class_reps[j].order() % poset.class_reps[i].order() != 0)
        continue;
      for (const auto& m : poset.members[i])
        if (poset.class_reps[j].contains(m)) {
          poset.leq[i][j] = true;
          break;
        }
    }
  return poset;
}

}  // namespace stabletype
