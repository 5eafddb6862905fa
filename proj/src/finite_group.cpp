#include "stabletype/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "stabletype/detail/extension.hpp"
#include "stabletype/error.hpp"
#include "stabletype/limits.hpp"

namespace stabletype {

struct FiniteGroup::Impl {
  std::size_t degree = 1;
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::vector<Elem> generator_indices;
  std::unordered_map<Permutation, Elem, PermutationHash> index;
  std::vector<Elem> table;
  std::vector<Elem> inverse;
  std::vector<std::size_t> orders;
  Elem identity = 0;
  ConjClassTable classes;
  bool abelian = true;
};

namespace {

ConjClassTable build_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> raw_class(n, kNone);
  std::vector<std::vector<Elem>> raw_members;
  for (Elem x = 0; x < n; ++x) {
    if (raw_class[x] != kNone) continue;
    const std::size_t id = raw_members.size();
    std::vector<Elem> orbit{x};
    raw_class[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Elem s : g.generator_indices()) {
        Elem y = g.conj(s, orbit[head]);
        if (raw_class[y] == kNone) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw_members.push_back(std::move(orbit));
  }

  std::vector<std::size_t> perm(raw_members.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& ma = raw_members[a];
    const auto& mb = raw_members[b];
    auto key_a = std::make_tuple(g.element_order(ma.front()), ma.size(), ma.front());
    auto key_b = std::make_tuple(g.element_order(mb.front()), mb.size(), mb.front());
    return key_a < key_b;
  });

  ConjClassTable t;
  t.class_of.assign(n, 0);
  for (std::size_t c = 0; c < perm.size(); ++c) {
    auto& m = raw_members[perm[c]];
    for (Elem x : m) t.class_of[x] = c;
    t.representatives.push_back(m.front());
    t.class_sizes.push_back(m.size());
    t.members.push_back(std::move(m));
  }
  return t;
}

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup(from_sorted({Permutation::identity(1)}, {}, 1)) {}

FiniteGroup FiniteGroup::generate(const std::vector<Permutation>& gens, std::size_t degree) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw InvalidPermutation("generator degree does not match group degree");
  const std::size_t cap = current_limits().order_cap;

  std::vector<Permutation> found{Permutation::identity(degree)};
  std::unordered_map<Permutation, Elem, PermutationHash> seen{{found.front(), 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : gens) {
      Permutation y = found[head] * s;
      if (seen.contains(y)) continue;
      if (found.size() >= cap)
        throw CapExceeded("group closure exceeds order cap " + std::to_string(cap));
      seen.emplace(y, static_cast<Elem>(found.size()));
      found.push_back(std::move(y));
    }
  }
  std::sort(found.begin(), found.end());
  return from_sorted(std::move(found), gens, degree);
}

FiniteGroup FiniteGroup::from_sorted(std::vector<Permutation> elements, std::vector<Permutation> gens,
                                     std::size_t degree) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->elements = std::move(elements);
  const std::size_t n = impl->elements.size();
  impl->index.reserve(n * 2);
  for (Elem i = 0; i < n; ++i) impl->index.emplace(impl->elements[i], i);
  impl->identity = impl->index.at(Permutation::identity(degree));

  impl->generators = std::move(gens);
  for (const auto& s : impl->generators) impl->generator_indices.push_back(impl->index.at(s));

  // Right multiplication by generators, then the full table along a BFS tree.
  const std::size_t k = impl->generators.size();
  std::vector<Elem> right(n * k);
  for (Elem x = 0; x < n; ++x)
    for (std::size_t s = 0; s < k; ++s)
      right[x * k + s] = impl->index.at(impl->elements[x] * impl->generators[s]);

  constexpr Elem kNone = detail::kUnassigned;
  std::vector<Elem> parent(n, kNone), via(n, 0), bfs{impl->identity};
  parent[impl->identity] = impl->identity;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = right[bfs[head] * k + s];
      if (parent[y] != kNone) continue;
      parent[y] = bfs[head];
      via[y] = static_cast<Elem>(s);
      bfs.push_back(y);
    }
  }
  if (bfs.size() != n) throw BadParameter("generators do not generate the element list");

  impl->table.assign(n * n, 0);
  for (Elem i = 0; i < n; ++i) {
    Elem* row = &impl->table[static_cast<std::size_t>(i) * n];
    row[impl->identity] = i;
    for (std::size_t t = 1; t < bfs.size(); ++t) {
      Elem j = bfs[t];
      row[j] = right[row[parent[j]] * k + via[j]];
    }
  }

  impl->inverse.resize(n);
  for (Elem i = 0; i < n; ++i) impl->inverse[i] = impl->index.at(impl->elements[i].inverse());

  impl->orders.resize(n);
  for (Elem i = 0; i < n; ++i) {
    std::size_t ord = 1;
    for (Elem x = i; x != impl->identity; x = impl->table[static_cast<std::size_t>(x) * n + i]) ++ord;
    impl->orders[i] = ord;
  }

  for (std::size_t a = 0; a < k && impl->abelian; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Elem ga = impl->generator_indices[a], gb = impl->generator_indices[b];
      if (impl->table[ga * n + gb] != impl->table[gb * n + ga]) {
        impl->abelian = false;
        break;
      }
    }

  FiniteGroup group{std::shared_ptr<const Impl>(impl)};
  impl->classes = build_classes(group);
  return group;
}

std::size_t FiniteGroup::order() const noexcept { return impl_->elements.size(); }
std::size_t FiniteGroup::degree() const noexcept { return impl_->degree; }
Elem FiniteGroup::identity() const noexcept { return impl_->identity; }
const std::vector<Permutation>& FiniteGroup::elements() const noexcept { return impl_->elements; }
const std::vector<Permutation>& FiniteGroup::generators() const noexcept { return impl_->generators; }
const std::vector<Elem>& FiniteGroup::generator_indices() const noexcept { return impl_->generator_indices; }

Elem FiniteGroup::mul(Elem a, Elem b) const noexcept {
  return impl_->table[static_cast<std::size_t>(a) * impl_->elements.size() + b];
}

Elem FiniteGroup::inv(Elem a) const noexcept { return impl_->inverse[a]; }

Elem FiniteGroup::pow(Elem a, std::int64_t k) const noexcept {
  const auto ord = static_cast<std::int64_t>(impl_->orders[a]);
  k %= ord;
  if (k < 0) k += ord;
  Elem result = impl_->identity;
  for (std::int64_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

std::size_t FiniteGroup::element_order(Elem e) const noexcept { return impl_->orders[e]; }

std::optional<Elem> FiniteGroup::find(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Elem FiniteGroup::index_of(const Permutation& p) const {
  auto found = find(p);
  if (!found) throw BadParameter("permutation " + p.to_string() + " is not a group element");
  return *found;
}

const ConjClassTable& FiniteGroup::classes() const noexcept { return impl_->classes; }
bool FiniteGroup::is_abelian() const noexcept { return impl_->abelian; }

// ---------------------------------------------------------------------------

ElementSet close_in(const FiniteGroup& g, std::span<const Elem> gens) {
  ElementSet set(g.order());
  std::vector<Elem> found{g.identity()};
  set.set(g.identity());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem s : gens) {
      Elem y = g.mul(found[head], s);
      if (set.test(y)) continue;
      set.set(y);
      found.push_back(y);
    }
  }
  return set;
}

Subgroup::Subgroup(FiniteGroup parent, ElementSet set, std::vector<Elem> generators)
    : parent_(std::move(parent)), set_(std::move(set)), generators_(std::move(generators)) {
  members_ = set_.to_indices();
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::span<const Elem> gens) {
  std::vector<Elem> kept;
  for (Elem s : gens)
    if (s != parent.identity() && std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
  return Subgroup(parent, close_in(parent, kept), kept);
}

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ElementSet set(parent.order());
  for (Elem m : members) set.set(m);
  if (!set.test(parent.identity())) throw BadParameter("subgroup member set lacks the identity");
  for (Elem a : members)
    for (Elem b : members)
      if (!set.test(parent.mul(a, b))) throw BadParameter("member set is not closed under multiplication");

  std::vector<Elem> gens;
  ElementSet span = close_in(parent, gens);
  for (Elem m : members) {
    if (span.test(m)) continue;
    gens.push_back(m);
    span = close_in(parent, gens);
  }
  return Subgroup(parent, std::move(set), std::move(gens));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Elem> all(parent.order());
  std::iota(all.begin(), all.end(), Elem{0});
  ElementSet set(parent.order());
  for (Elem e : all) set.set(e);
  return Subgroup(parent, std::move(set), parent.generator_indices());
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  ElementSet set(parent.order());
  set.set(parent.identity());
  return Subgroup(parent, std::move(set), {});
}

FiniteGroup Subgroup::as_group() const {
  std::vector<Permutation> perms;
  perms.reserve(members_.size());
  for (Elem m : members_) perms.push_back(parent_.element(m));
  std::vector<Permutation> gens;
  for (Elem s : generators_) gens.push_back(parent_.element(s));
  return FiniteGroup::from_sorted(std::move(perms), std::move(gens), parent_.degree());
}

// ---------------------------------------------------------------------------

FiniteGroup close_generators(const std::vector<Permutation>& gens, std::size_t degree) {
  return FiniteGroup::generate(gens, degree);
}

const ConjClassTable& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Elem t : s.generators())
      if (g.mul(x, t) != g.mul(t, x)) {
        commutes = false;
        break;
      }
    if (commutes) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (Elem t : s.generators())
      if (!s.contains(g.conj(x, t))) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup conjugate(const Subgroup& s, Elem x) {
  const FiniteGroup& g = s.parent();
  std::vector<Elem> gens;
  for (Elem t : s.generators()) gens.push_back(g.conj(x, t));
  return Subgroup::generated_by(g, gens);
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  for (Elem x : g.generator_indices())
    for (Elem t : s.generators())
      if (!s.contains(g.conj(x, t))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<Elem> gens(elems.begin(), elems.end());
  ElementSet span = close_in(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem x : g.generator_indices()) {
      Elem y = g.conj(x, gens[i]);
      if (span.test(y)) continue;
      gens.push_back(y);
      span = close_in(g, gens);
    }
  }
  return Subgroup::generated_by(g, gens);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().same_as(g)) throw BadParameter("subgroup does not belong to this group");
  if (!is_normal(n)) throw NotNormal("subgroup is not normal");

  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> coset_of(g.order(), kNone);
  std::vector<Elem> coset_rep;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kNone) continue;
    for (Elem m : n.members()) coset_of[g.mul(x, m)] = coset_rep.size();
    coset_rep.push_back(x);
  }
  const std::size_t cosets = coset_rep.size();
  auto action_of = [&](Elem x) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c) images[c] = static_cast<Point>(coset_of[g.mul(x, coset_rep[c])]);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (Elem s : g.generator_indices()) {
    Permutation p = action_of(s);
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  Quotient q{FiniteGroup::generate(gens, cosets), {}};
  q.projection.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) q.projection[x] = q.group.index_of(action_of(x));
  return q;
}

Subgroup sylow(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup current = Subgroup::trivial(g);
  while (current.order() < target) {
    Subgroup norm = normalizer(g, current);
    std::optional<Elem> step;
    for (Elem x : norm.members()) {
      if (current.contains(x)) continue;
      if (current.contains(g.pow(x, p))) {
        step = x;
        break;
      }
    }
    if (!step) throw BadParameter("no p-element extends the current p-subgroup");  // unreachable by Sylow theory
    std::vector<Elem> gens = current.generators();
    gens.push_back(*step);
    current = Subgroup::generated_by(g, gens);
  }
  return current;
}

Subgroup o_p_prime(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  const auto& cls = g.classes();
  Subgroup current = Subgroup::trivial(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t c = 0; c < cls.size(); ++c) {
      Elem rep = cls.representatives[c];
      if (g.element_order(rep) % p == 0 || current.contains(rep)) continue;
      std::vector<Elem> gens = current.generators();
      gens.push_back(rep);
      Subgroup candidate = normal_closure(g, gens);
      if (candidate.order() % p != 0) {
        current = std::move(candidate);
        grew = true;
      }
    }
  }
  return current;
}

FiniteGroup reduce_mod_p(const FiniteGroup& g, unsigned p) {
  Subgroup core = o_p_prime(g, p);
  if (core.order() == 1) return g;
  return quotient(g, core).group;
}

// ---------------------------------------------------------------------------

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  ElementSet span = close_in(g, gens);
  std::size_t size = 1;
  while (size < g.order()) {
    Elem best = 0;
    std::size_t best_size = 0;
    ElementSet best_span;
    std::vector<bool> tried(g.order(), false);
    for (Elem x = 0; x < g.order(); ++x) {
      if (span.test(x) || tried[x]) continue;
      // Generators of <x> all give the same closure.
      const std::size_t ord = g.element_order(x);
      for (std::size_t k = 1; k < ord; ++k)
        if (std::gcd(k, ord) == 1) tried[g.pow(x, static_cast<std::int64_t>(k))] = true;
      gens.push_back(x);
      ElementSet candidate = close_in(g, gens);
      gens.pop_back();
      const std::size_t c = candidate.count();
      if (c > best_size) {
        best = x;
        best_size = c;
        best_span = std::move(candidate);
        if (c == g.order()) break;
      }
    }
    gens.push_back(best);
    span = std::move(best_span);
    size = best_size;
  }
  return gens;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> order_class_fingerprint(const FiniteGroup& g) {
  const auto& cls = g.classes();
  std::vector<std::pair<std::size_t, std::size_t>> fp;
  fp.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) fp.emplace_back(g.element_order(x), cls.class_sizes[cls.class_of[x]]);
  std::sort(fp.begin(), fp.end());
  return fp;
}

}  // namespace

std::optional<std::vector<Elem>> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (g.classes().size() != h.classes().size()) return std::nullopt;
  if (order_class_fingerprint(g) != order_class_fingerprint(h)) return std::nullopt;

  detail::CayleyExtender extender(g, small_generating_set(g));
  const auto& gc = g.classes();
  const auto& hc = h.classes();
  std::vector<std::vector<Elem>> candidates;
  for (Elem s : extender.generators()) {
    std::vector<Elem> c;
    const std::size_t size = gc.class_sizes[gc.class_of[s]];
    for (Elem y = 0; y < h.order(); ++y)
      if (h.element_order(y) == g.element_order(s) && hc.class_sizes[hc.class_of[y]] == size) c.push_back(y);
    candidates.push_back(std::move(c));
  }

  std::optional<std::vector<Elem>> found;
  detail::search_generator_images(extender, h, candidates, /*injective=*/true,
                                  [&](const std::vector<Elem>& map) {
                                    found = map;
                                    return false;
                                  });
  return found;
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) noexcept {
  std::uint64_t part = 1;
  if (p < 2 || n == 0) return 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::uint64_t n, unsigned p) noexcept { return n >= 1 && p_part(n, p) == n; }

}  // namespace stabletype
