#include "stabletype/named.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "stabletype/error.hpp"
#include "stabletype/limits.hpp"

namespace stabletype {

namespace {

using MulFn = std::function<std::size_t(std::size_t, std::size_t)>;

FiniteGroup left_regular(std::size_t n, const std::vector<std::size_t>& gens, const MulFn& mul) {
  if (n > current_limits().order_cap) throw CapExceeded("regular representation exceeds order cap");
  std::vector<Permutation> perms;
  for (std::size_t s : gens) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(mul(s, x));
    perms.emplace_back(std::move(images));
  }
  return FiniteGroup::generate(perms, n);
}

FiniteGroup cyclic(unsigned n) {
  if (n == 0) throw BadParameter("cyclic group order must be positive");
  if (n == 1) return FiniteGroup{};
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return FiniteGroup::generate({Permutation::from_cycles(n, {cycle})}, n);
}

FiniteGroup dihedral(unsigned n) {
  if (n < 2 || n % 2 != 0) throw BadParameter("dihedral order must be even and at least 2");
  const unsigned m = n / 2;
  if (m == 1) return cyclic(2);
  if (m == 2)
    return FiniteGroup::generate({Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                                 4);
  std::vector<Point> rot(m), refl(m);
  for (unsigned i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    refl[i] = (m - i) % m;
  }
  return FiniteGroup::generate({Permutation(rot), Permutation(refl)}, m);
}

FiniteGroup quaternion(unsigned n) {
  if (n < 8 || n % 4 != 0) throw BadParameter("generalized quaternion order must be divisible by 4 and at least 8");
  const std::size_t m = n / 4;
  const std::size_t rot = 2 * m;  // order of a
  // Element a^i b^j has index j*rot + i.
  auto mul = [=](std::size_t x, std::size_t y) {
    const std::size_t i = x % rot, j = x / rot, k = y % rot, l = y / rot;
    std::size_t exp = j ? i + rot - k : i + k;
    if (j && l) exp += m;
    return (j ^ l) * rot + exp % rot;
  };
  return left_regular(n, {1, rot}, mul);
}

FiniteGroup symmetric(unsigned n) {
  if (n == 0) throw BadParameter("symmetric degree must be positive");
  if (n == 1) return FiniteGroup{};
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return FiniteGroup::generate({Permutation::from_cycles(n, {cycle}), Permutation::from_cycles(n, {{0, 1}})}, n);
}

FiniteGroup alternating(unsigned n) {
  if (n == 0) throw BadParameter("alternating degree must be positive");
  if (n < 3) return FiniteGroup::generate({}, n);
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return FiniteGroup::generate(gens, n);
}

FiniteGroup elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p)) throw BadParameter("elementary abelian group needs a prime");
  if (k == 0) return FiniteGroup{};
  const std::size_t degree = static_cast<std::size_t>(p) * k;
  std::vector<Permutation> gens;
  for (unsigned r = 0; r < k; ++r) {
    std::vector<Point> cycle(p);
    std::iota(cycle.begin(), cycle.end(), static_cast<Point>(r * p));
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return FiniteGroup::generate(gens, degree);
}

FiniteGroup heisenberg(unsigned p) {
  if (!is_prime(p) || p == 2) throw BadParameter("heisenberg group needs an odd prime");
  const std::size_t q = p, n = q * q * q;
  // (a, b, c) has index a*p^2 + b*p + c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  auto mul = [=](std::size_t x, std::size_t y) {
    const std::size_t a = x / (q * q), b = (x / q) % q, c = x % q;
    const std::size_t a2 = y / (q * q), b2 = (y / q) % q, c2 = y % q;
    return ((a + a2) % q) * q * q + ((b + b2) % q) * q + (c + c2 + a * b2) % q;
  };
  return left_regular(n, {q * q, q}, mul);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::string abelian_name(const std::vector<std::size_t>& factors) {
  if (factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "C" + std::to_string(factors[i]);
  }
  return out;
}

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

/// Invariant factors (largest first) from per-prime partitions.
std::vector<std::size_t> combine_primary(const std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>& primary) {
  std::size_t len = 0;
  for (const auto& [p, parts] : primary) len = std::max(len, parts.size());
  std::vector<std::size_t> factors(len, 1);
  for (const auto& [p, parts] : primary)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (unsigned e = 0; e < parts[i]; ++e) factors[i] *= p;
  return factors;
}

/// Every abelian group of order n, as invariant factor lists.
std::vector<std::vector<std::size_t>> abelian_types(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::vector<std::vector<unsigned>>>> per_prime;
  for (auto p : prime_factors(n)) {
    unsigned e = 0;
    for (auto m = n; m % p == 0; m /= p) ++e;
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    per_prime.emplace_back(p, std::move(parts));
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == per_prime.size()) {
      out.push_back(combine_primary(chosen));
      return;
    }
    for (const auto& part : per_prime[i].second) {
      chosen.emplace_back(per_prime[i].first, part);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

FiniteGroup abelian_from_factors(const std::vector<std::size_t>& factors) {
  FiniteGroup g;
  for (auto f : factors) g = direct_product(g, cyclic(static_cast<unsigned>(f)));
  return g;
}

struct NamedAtom {
  std::string name;
  std::function<FiniteGroup()> build;
};

/// Non-abelian named atoms of order d, in preference order.
std::vector<NamedAtom> nonabelian_atoms(std::uint64_t d) {
  std::vector<NamedAtom> atoms;
  std::uint64_t fact = 1;
  for (unsigned k = 1; k <= 7; ++k) {
    fact *= k;
    if (k >= 3 && fact == d) atoms.push_back({"S" + std::to_string(k), [k] { return symmetric(k); }});
    if (k >= 4 && fact / 2 == d) atoms.push_back({"A" + std::to_string(k), [k] { return alternating(k); }});
  }
  if (d >= 6 && d % 2 == 0 && d != 6) {
    auto n = static_cast<unsigned>(d);
    atoms.push_back({"D" + std::to_string(n), [n] { return dihedral(n); }});
  }
  if (d >= 8 && d % 4 == 0) {
    auto n = static_cast<unsigned>(d);
    atoms.push_back({"Q" + std::to_string(n), [n] { return quaternion(n); }});
  }
  for (unsigned p = 3; static_cast<std::uint64_t>(p) * p * p <= d; p += 2)
    if (is_prime(p) && static_cast<std::uint64_t>(p) * p * p == d)
      atoms.push_back({"H" + std::to_string(p), [p] { return heisenberg(p); }});
  return atoms;
}

std::string perm_descriptor(const FiniteGroup& g) {
  if (g.generators().empty()) return "C1";
  std::ostringstream os;
  os << "perm{";
  bool first = true;
  for (const auto& s : g.generators()) {
    if (s.is_identity()) continue;
    if (!first) os << ',';
    first = false;
    os << s.to_string(true);
  }
  os << '}';
  return first ? "C1" : os.str();
}

}  // namespace

FiniteGroup make_named(NamedFamily family, unsigned n, unsigned k) {
  switch (family) {
    case NamedFamily::Cyclic: return cyclic(n);
    case NamedFamily::Dihedral: return dihedral(n);
    case NamedFamily::Quaternion: return quaternion(n);
    case NamedFamily::Symmetric: return symmetric(n);
    case NamedFamily::Alternating: return alternating(n);
    case NamedFamily::ElementaryAbelian: return elementary_abelian(n, k);
    case NamedFamily::Heisenberg: return heisenberg(n);
  }
  throw BadParameter("unknown group family");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() == 1) return h;
  if (h.order() == 1) return g;
  if (g.order() * h.order() > current_limits().order_cap)
    throw CapExceeded("direct product exceeds order cap");
  const std::size_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(s.shifted(0, degree));
  for (const auto& s : h.generators()) gens.push_back(s.shifted(g.degree(), degree));
  return FiniteGroup::generate(gens, degree);
}

FiniteGroup regular_representation(const FiniteGroup& g) {
  std::vector<std::size_t> gens(g.generator_indices().begin(), g.generator_indices().end());
  return left_regular(g.order(), gens, [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
  });
}

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> primary;
  for (auto p : prime_factors(g.order())) {
    // at_least[j] = number of cyclic factors of exponent >= j+1.
    std::vector<unsigned> at_least;
    std::uint64_t prev = 1;
    for (std::uint64_t pj = p;; pj *= p) {
      std::uint64_t count = 0;
      for (Elem x = 0; x < g.order(); ++x)
        if (pj % g.element_order(x) == 0) ++count;
      if (count == prev) break;
      unsigned s = 0;
      for (auto ratio = count / prev; ratio > 1; ratio /= p) ++s;
      at_least.push_back(s);
      prev = count;
    }
    std::vector<unsigned> parts;
    for (unsigned i = 1; !at_least.empty() && i <= at_least.front(); ++i) {
      unsigned len = 0;
      for (auto s : at_least)
        if (s >= i) ++len;
      parts.push_back(len);
    }
    primary.emplace_back(p, std::move(parts));
  }
  return combine_primary(primary);
}

std::string describe(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  if (n == 1) return "C1";
  if (g.is_abelian()) return abelian_name(abelian_invariants(g));

  for (const auto& atom : nonabelian_atoms(n))
    if (is_isomorphic(atom.build(), g)) return atom.name;

  for (std::uint64_t d = n / 2; d >= 6; --d) {
    if (n % d) continue;
    const std::uint64_t rest = n / d;
    for (const auto& atom : nonabelian_atoms(d)) {
      FiniteGroup left = atom.build();
      for (const auto& factors : abelian_types(rest)) {
        if (is_isomorphic(direct_product(left, abelian_from_factors(factors)), g))
          return atom.name + " x " + abelian_name(factors);
      }
      if (rest >= 6 && rest <= d) {
        for (const auto& other : nonabelian_atoms(rest))
          if (is_isomorphic(direct_product(left, other.build()), g)) return atom.name + " x " + other.name;
      }
    }
  }
  return perm_descriptor(g);
}

}  // namespace stabletype
