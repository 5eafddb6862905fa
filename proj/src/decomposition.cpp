#include "stabletype/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "stabletype/error.hpp"
#include "stabletype/named.hpp"

namespace stabletype {

namespace {

// contains[i][j]: number of members of class j that contain the given
// subgroup of class i (counted for one fixed subgroup).
std::vector<std::size_t> containing_counts(const CyclicModPPoset& poset, const Subgroup& s) {
  std::vector<std::size_t> out(poset.size(), 0);
  for (std::size_t j = 0; j < poset.size(); ++j) {
    if (poset.class_reps[j].order() % s.order() != 0) continue;
    for (const auto& k : poset.members[j])
      if (k.contains(s)) ++out[j];
  }
  return out;
}

}  // namespace

MobiusTable mobius_f(const CyclicModPPoset& poset) {
  const std::size_t n = poset.size();
  MobiusTable t{poset, std::vector<Rational>(n, 0)};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.class_reps[a].order() > poset.class_reps[b].order();
  });
  // Every proper overgroup is strictly larger, so it is solved first.
  for (std::size_t i : order) {
    auto counts = containing_counts(poset, poset.class_reps[i]);
    Rational sum = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum += Rational(static_cast<unsigned long>(counts[j])) * t.f[j];
    t.f[i] = 1 - sum;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& member : poset.members[i]) {
      auto counts = containing_counts(poset, member);
      Rational sum = 0;
      for (std::size_t j = 0; j < n; ++j) sum += Rational(static_cast<unsigned long>(counts[j])) * t.f[j];
      if (sum != 1)
        throw PosetInconsistent("Mobius sum at a subgroup of order " + std::to_string(member.order()) + " is " +
                                to_fraction_string(sum));
    }
  return t;
}

void FormalSum::add(const FiniteGroup& g, const Rational& coeff) {
  if (coeff == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (it->group.order() == g.order() && is_isomorphic(it->group, g)) {
      it->coeff += coeff;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  terms_.push_back(Term{g, describe(g), coeff});
}

Rational FormalSum::coefficient(const FiniteGroup& g) const {
  for (const auto& t : terms_)
    if (t.group.order() == g.order() && is_isomorphic(t.group, g)) return t.coeff;
  return 0;
}

Decomposition mw_decomposition(const FiniteGroup& g, unsigned p) {
  const CyclicModPPoset poset = cyclic_mod_p_poset(g, p);
  const MobiusTable mobius = mobius_f(poset);
  Decomposition d;
  d.prime = p;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const Subgroup& h = poset.class_reps[i];
    RawTerm raw{h, mobius.f[i], poset.index_in_normalizer[i], 0, reduce_mod_p(h.as_group(), p), false};
    raw.coeff = raw.f / Rational(static_cast<unsigned long>(raw.normalizer_index));
    raw.dropped = raw.reduced.order() % p != 0;
    if (!raw.dropped && raw.coeff != 0) {
      if (o_p_prime(raw.reduced, p).order() != 1 || !is_cyclic_mod_p(raw.reduced, p))
        throw PosetInconsistent("summand " + describe(raw.reduced) + " is not reduced cyclic mod p");
      d.sum.add(raw.reduced, raw.coeff);
    }
    d.raw.push_back(std::move(raw));
  }
  return d;
}

bool formal_sum_equal(const FormalSum& a, const FormalSum& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [&](const FormalSum::Term& t) { return b.coefficient(t.group) == t.coeff; });
}

IntegralForm integral_form(const FormalSum& s) {
  IntegralForm out;
  for (const auto& t : s.terms()) out.denominator = lcm(out.denominator, mpz_class(t.coeff.get_den()));
  for (const auto& t : s.terms()) {
    Rational scaled = t.coeff * Rational(out.denominator);
    if (scaled > 0)
      out.positive.add(t.group, scaled);
    else
      out.negative.add(t.group, -scaled);
  }
  return out;
}

std::vector<Subgroup> cyclic_pprime_classes(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  std::vector<Subgroup> out;
  for (const auto& h : subgroup_conjugacy_classes(g).class_reps) {
    if (h.order() % p == 0) continue;
    const bool cyclic = std::any_of(h.members().begin(), h.members().end(),
                                    [&](Elem x) { return g.element_order(x) == h.order(); });
    if (cyclic) out.push_back(h);
  }
  return out;
}

std::size_t rational_rank(const std::vector<std::vector<std::size_t>>& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (std::size_t v : row) r.emplace_back(static_cast<unsigned long>(v));
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

PsiRank psi_rank(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  const auto& cls = g.classes();
  PsiRank out;
  for (std::size_t c = 0; c < cls.size(); ++c)
    if (g.element_order(cls.representatives[c]) % p != 0) out.matrix.columns.push_back(cls.representatives[c]);
  for (const auto& h : subgroup_conjugacy_classes(g).class_reps)
    if (h.order() % p != 0) out.matrix.rows.push_back(h);

  // |(G/H)^x| = |C_G(x)| * |x^G n H| / |H|
  for (const auto& h : out.matrix.rows) {
    std::vector<std::size_t> row;
    for (Elem x : out.matrix.columns) {
      const std::size_t c = cls.class_of[x];
      const std::size_t meet = static_cast<std::size_t>(
          std::count_if(cls.members[c].begin(), cls.members[c].end(), [&](Elem y) { return h.contains(y); }));
      row.push_back(g.order() / cls.class_sizes[c] * meet / h.order());
    }
    out.matrix.entries.push_back(std::move(row));
  }
  out.rank = rational_rank(out.matrix.entries);
  out.cyclic_classes = cyclic_pprime_classes(g, p).size();
  return out;
}

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace stabletype
