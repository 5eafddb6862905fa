#include "stabletype/equivalence.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "stabletype/error.hpp"
#include "stabletype/lattice.hpp"
#include "stabletype/named.hpp"

namespace stabletype {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::SylowMismatch: return "SylowMismatch";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::General: return "general";
    case Method::NormalSylow: return "normal-sylow";
    case Method::ReducedCyclic: return "reduced-cyclic";
  }
  return "?";
}

PointwiseTable pointwise_conjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!h.parent().same_as(g) || !k.parent().same_as(g)) throw BadParameter("subgroups must belong to the group");
  const auto& cls = g.classes();
  PointwiseTable t;
  t.h_counts.assign(cls.size(), 0);
  t.k_counts.assign(cls.size(), 0);
  for (Elem x : h.members()) ++t.h_counts[cls.class_of[x]];
  for (Elem x : k.members()) ++t.k_counts[cls.class_of[x]];
  t.conjugate = t.h_counts == t.k_counts;
  return t;
}

bool pointwise_conjugate_symmetric(const FiniteGroup& h, const FiniteGroup& k) {
  if (h.degree() != k.degree()) throw BadParameter("groups act on different numbers of points");
  if (h.order() != k.order()) return false;
  auto types = [](const FiniteGroup& g) {
    std::map<std::vector<std::size_t>, std::size_t> m;
    for (const auto& e : g.elements()) ++m[e.cycle_type()];
    return m;
  };
  return types(h) == types(k);
}

MarksComparison perm_marks_equal(const OutAction& x, const OutAction& y, unsigned p) {
  const FiniteGroup& out = x.out.out;
  const bool same_q = x.out.q.same_as(y.out.q) || x.out.q.elements() == y.out.q.elements();
  if (!same_q || !(out.same_as(y.out.out) || out.elements() == y.out.out.elements()))
    throw OutMismatch("actions are not over the same realization of Out(Q)");
  SubgroupFamily family = cyclic_mod_p_family(out, p);
  // Identical element lists index identically, so y's table can be read
  // against x's out group.
  GroupAction ya = y.action;
  ya.group = out;
  MarksComparison c;
  c.x = marks(x.action, family);
  c.y = marks(ya, family);
  c.equal = c.x.counts == c.y.counts;
  return c;
}

namespace {

std::optional<Witness> first_difference(const std::string& q, const MarksComparison& c) {
  for (std::size_t i = 0; i < c.x.counts.size(); ++i)
    if (c.x.counts[i] != c.y.counts[i]) return Witness{q, c.x.family[i], c.x.counts[i], c.y.counts[i]};
  return std::nullopt;
}

bool same_marks(const RepSet& a, const RepSet& b, const OutGroup& out, unsigned p) {
  return perm_marks_equal(out_action(a, out), out_action(b, out), p).equal;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
}

}  // namespace

EquivalenceVerdict stably_equivalent(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p,
                                     const VerifyOptions& verify) {
  require_prime(p);
  EquivalenceVerdict v;
  v.prime = p;
  v.method = Method::General;
  const FiniteGroup r1 = reduce_mod_p(g1, p);
  const FiniteGroup r2 = reduce_mod_p(g2, p);
  const FiniteGroup s1 = sylow(r1, p).as_group();
  const FiniteGroup s2 = sylow(r2, p).as_group();
  if (!is_isomorphic(s1, s2)) {
    v.result = Verdict::SylowMismatch;
    v.witness = Witness{describe(s1) + " vs " + describe(s2), "Sylow", s1.order(), s2.order()};
    return v;
  }

  bool rep_ok = true;
  bool k_ok = true;
  for (const auto& q : p_subgroup_iso_classes(r1, p)) {
    const std::string name = describe(q);
    try {
      OutGroup out = automorphism_group(q);
      RepSet inj1 = inj_classes(q, r1, p);
      RepSet inj2 = inj_classes(q, r2, p);
      QReport report{q, name, inj1.size(), inj2.size(), perm_marks_equal(out_action(inj1, out), out_action(inj2, out), p)};
      if (verify.second_section) {
        OutGroup other = automorphism_group(q, SectionChoice::Greatest);
        MarksComparison again = perm_marks_equal(out_action(inj1, other), out_action(inj2, other), p);
        if (again.x.counts != report.marks.x.counts || again.y.counts != report.marks.y.counts)
          throw ActionInconsistent("marks for " + name + " depend on the Out section");
      }
      if (verify.rep_level) {
        rep_ok = rep_ok && same_marks(rep_classes(q, r1, p), rep_classes(q, r2, p), out, p);
      }
      if (verify.k_level) {
        k_ok = k_ok && same_marks(k_classes(q, r1, p), k_classes(q, r2, p), out, p);
      }
      if (!report.marks.equal && !v.witness) v.witness = first_difference(name, report.marks);
      v.per_q.push_back(std::move(report));
    } catch (const CapExceeded& e) {
      throw CapExceeded("while testing Q = " + name + ": " + e.what());
    }
  }
  v.result = v.witness ? Verdict::NotEquivalent : Verdict::Equivalent;
  if (verify.rep_level) v.rep_level_equivalent = rep_ok;
  if (verify.k_level) v.k_level_equivalent = k_ok;
  return v;
}

EquivalenceVerdict normal_sylow_equivalent(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p) {
  require_prime(p);
  EquivalenceVerdict v;
  v.prime = p;
  v.method = Method::NormalSylow;
  const Subgroup p1 = sylow(g1, p);
  const Subgroup p2 = sylow(g2, p);
  if (!is_normal(p1)) throw NotNormalSylow("Sylow " + std::to_string(p) + "-subgroup of the first group is not normal");
  if (!is_normal(p2)) throw NotNormalSylow("Sylow " + std::to_string(p) + "-subgroup of the second group is not normal");
  const FiniteGroup p1g = p1.as_group();
  const FiniteGroup p2g = p2.as_group();
  auto iso = is_isomorphic(p1g, p2g);
  if (!iso) {
    v.result = Verdict::SylowMismatch;
    v.witness = Witness{describe(p1g) + " vs " + describe(p2g), "Sylow", p1g.order(), p2g.order()};
    return v;
  }
  std::vector<Elem> iso_inv(iso->size());
  for (Elem x = 0; x < iso->size(); ++x) iso_inv[(*iso)[x]] = x;

  const WeylGroup w1 = weyl_group(g1, p1);
  const WeylGroup w2 = weyl_group(g2, p2);
  // Carry W_2 into Out(P_1): a |-> iso^-1 o a o iso.
  std::vector<Elem> images;
  for (Elem w : w2.w.generators()) {
    const std::vector<Elem> a = w2.out.section_map(w);
    std::vector<Elem> t(a.size());
    for (Elem x = 0; x < a.size(); ++x) t[x] = iso_inv[a[(*iso)[x]]];
    images.push_back(w1.out.out_of(t));
  }
  const Subgroup carried = Subgroup::generated_by(w1.out.out, images);
  v.weyl_table = pointwise_conjugate(w1.out.out, w1.w, carried);
  if (!v.weyl_table->conjugate) {
    const auto& t = *v.weyl_table;
    const auto& cls = w1.out.out.classes();
    for (std::size_t c = 0; c < t.h_counts.size(); ++c)
      if (t.h_counts[c] != t.k_counts[c]) {
        v.witness = Witness{describe(p1g), "Out class " + std::to_string(c) + " (order " +
                                               std::to_string(w1.out.out.element_order(cls.representatives[c])) + ")",
                            t.h_counts[c], t.k_counts[c]};
        break;
      }
  }
  v.result = v.weyl_table->conjugate ? Verdict::Equivalent : Verdict::NotEquivalent;
  return v;
}

EquivalenceVerdict reduced_cyclic_equivalent(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p) {
  require_prime(p);
  for (const auto* g : {&g1, &g2}) {
    const char* which = g == &g1 ? "first" : "second";
    if (o_p_prime(*g, p).order() != 1)
      throw NotReducedCyclicModP(std::string("the ") + which + " group has nontrivial O_{p'}");
    if (!is_cyclic_mod_p(*g, p))
      throw NotReducedCyclicModP(std::string("the ") + which + " group is not cyclic mod " + std::to_string(p));
  }
  EquivalenceVerdict v;
  v.prime = p;
  v.method = Method::ReducedCyclic;
  const FiniteGroup s1 = sylow(g1, p).as_group();
  const FiniteGroup s2 = sylow(g2, p).as_group();
  if (!is_isomorphic(s1, s2)) {
    v.result = Verdict::SylowMismatch;
    v.witness = Witness{describe(s1) + " vs " + describe(s2), "Sylow", s1.order(), s2.order()};
  } else if (is_isomorphic(g1, g2)) {
    v.result = Verdict::Equivalent;
  } else {
    v.result = Verdict::NotEquivalent;
    v.witness = Witness{describe(g1) + " vs " + describe(g2), "isomorphism type", g1.order(), g2.order()};
  }
  return v;
}

EquivalenceVerdict decide_equivalence(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p, Method method) {
  switch (method) {
    case Method::General: return stably_equivalent(g1, g2, p);
    case Method::NormalSylow: return normal_sylow_equivalent(g1, g2, p);
    case Method::ReducedCyclic: return reduced_cyclic_equivalent(g1, g2, p);
    case Method::Auto: break;
  }
  require_prime(p);
  const FiniteGroup r1 = reduce_mod_p(g1, p);
  const FiniteGroup r2 = reduce_mod_p(g2, p);
  if (is_cyclic_mod_p(r1, p) && is_cyclic_mod_p(r2, p)) return reduced_cyclic_equivalent(r1, r2, p);
  if (is_normal(sylow(g1, p)) && is_normal(sylow(g2, p))) return normal_sylow_equivalent(g1, g2, p);
  return stably_equivalent(g1, g2, p);
}

}  // namespace stabletype
