#include "stabletype/out_action.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "stabletype/detail/extension.hpp"
#include "stabletype/error.hpp"
#include "stabletype/lattice.hpp"
#include "stabletype/named.hpp"

namespace stabletype {

namespace {

Permutation as_permutation(std::span<const Elem> map) {
  return Permutation(std::vector<Point>(map.begin(), map.end()));
}

std::vector<Elem> as_map(const Permutation& p) {
  const auto& images = p.images();
  return std::vector<Elem>(images.begin(), images.end());
}

/// Builds the group of all listed automorphisms from a few of them.
FiniteGroup group_from_automorphisms(const std::vector<std::vector<Elem>>& autos, std::size_t degree) {
  std::vector<Permutation> gens;
  FiniteGroup current = FiniteGroup::generate({}, degree);
  for (const auto& a : autos) {
    if (current.order() == autos.size()) break;
    Permutation p = as_permutation(a);
    if (current.find(p)) continue;
    gens.push_back(std::move(p));
    current = FiniteGroup::generate(gens, degree);
  }
  return current;
}

// Index of `x` in the sorted member list of a subgroup.
Elem position_in(const Subgroup& h, Elem x) {
  const auto& m = h.members();
  return static_cast<Elem>(std::lower_bound(m.begin(), m.end(), x) - m.begin());
}

}  // namespace

std::vector<Elem> OutGroup::section_map(Elem o) const { return as_map(aut.element(section.at(o))); }

Elem OutGroup::out_of(std::span<const Elem> automorphism) const {
  return aut_to_out[aut.index_of(as_permutation(automorphism))];
}

OutGroup automorphism_group(const FiniteGroup& q, SectionChoice section) {
  const std::vector<Elem> gens = small_generating_set(q);
  if (gens.size() > kMaxHomGenerators)
    throw GeneratingSetTooLarge("automorphism search needs " + std::to_string(gens.size()) + " generators");
  const auto& cls = q.classes();
  std::vector<std::vector<Elem>> candidates;
  for (Elem s : gens) {
    std::vector<Elem> c;
    for (Elem y = 0; y < q.order(); ++y)
      if (q.element_order(y) == q.element_order(s) &&
          cls.class_sizes[cls.class_of[y]] == cls.class_sizes[cls.class_of[s]])
        c.push_back(y);
    candidates.push_back(std::move(c));
  }
  detail::CayleyExtender extender(q, gens);
  std::vector<std::vector<Elem>> autos;
  detail::search_generator_images(extender, q, candidates, /*injective=*/true, [&](const std::vector<Elem>& m) {
    autos.push_back(m);
    return true;
  });
  std::sort(autos.begin(), autos.end());

  FiniteGroup aut = group_from_automorphisms(autos, q.order());
  if (aut.order() != autos.size())
    throw ActionInconsistent("automorphisms do not form a group of the enumerated size");

  std::vector<Elem> inner;
  for (Elem s : q.generator_indices()) {
    std::vector<Elem> m(q.order());
    for (Elem x = 0; x < q.order(); ++x) m[x] = q.conj(s, x);
    inner.push_back(aut.index_of(as_permutation(m)));
  }
  Subgroup inn = Subgroup::generated_by(aut, inner);
  Quotient quo = quotient(aut, inn);

  std::vector<Elem> sec(quo.group.order(), detail::kUnassigned);
  for (Elem a = 0; a < aut.order(); ++a) {
    Elem& slot = sec[quo.projection[a]];
    if (slot == detail::kUnassigned || section == SectionChoice::Greatest) slot = a;
  }
  return OutGroup{q, aut, inn, quo.group, std::move(quo.projection), std::move(sec), section};
}

OutAction out_action(const RepSet& reps, const OutGroup& out) {
  if (!reps.domain().same_as(out.q)) throw BadParameter("rep set and automorphism group have different domains");
  const FiniteGroup& q = out.q;
  const std::size_t n = reps.size();

  // phi o a^-1 for an automorphism a stored in aut.
  auto precompose_inverse = [&](const std::vector<Elem>& phi, Elem a) {
    const Permutation inv = out.aut.element(a).inverse();
    std::vector<Elem> psi(q.order());
    for (Elem x = 0; x < q.order(); ++x) psi[x] = phi[inv.images()[x]];
    return psi;
  };

  GroupAction action{out.out, n, std::vector<std::vector<std::size_t>>(out.out.order(), std::vector<std::size_t>(n))};
  for (std::size_t c = 0; c < n; ++c) {
    const auto& phi = reps.classes()[c].representative.image_of;
    for (Elem a : out.inn.generators())
      if (reps.class_of(precompose_inverse(phi, a)) != c)
        throw ActionInconsistent("inner automorphism moves class " + std::to_string(c));
    for (Elem o = 0; o < out.out.order(); ++o) action.image[o][c] = reps.class_of(precompose_inverse(phi, out.section[o]));
  }
  return OutAction{reps, out, std::move(action)};
}

WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) throw BadParameter("subgroup does not belong to this group");
  OutGroup out = automorphism_group(h.as_group());
  Subgroup n = normalizer(g, h);
  std::vector<Elem> images;
  for (Elem s : n.generators()) {
    std::vector<Elem> m(h.order());
    for (std::size_t i = 0; i < h.order(); ++i) m[i] = position_in(h, g.conj(s, h.members()[i]));
    images.push_back(out.out_of(m));
  }
  Subgroup w = Subgroup::generated_by(out.out, images);
  return WeylGroup{std::move(out), std::move(w)};
}

WBarReport w_bar(const Homomorphism& alpha, unsigned p, WBarMode mode) {
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  if (!alpha.is_injective()) throw BadParameter("W-bar is defined for injective maps only");
  const FiniteGroup& g = alpha.codomain;
  const FiniteGroup& q = alpha.domain;
  Subgroup image = alpha.image();
  WBarReport report;

  if (mode == WBarMode::Shortcut) {
    Subgroup c = centralizer(g, image);
    std::size_t z = 0;
    for (Elem m : image.members())
      if (c.contains(m)) ++z;
    report.multiplicity = c.order() / z;
    report.nonzero = report.multiplicity % p != 0;
    return report;
  }

  std::vector<Elem> preimage(g.order(), detail::kUnassigned);
  for (Elem x = 0; x < q.order(); ++x) preimage[alpha.image_of[x]] = x;
  OutGroup out = automorphism_group(q);
  std::vector<std::size_t> hits(out.out.order(), 0);
  std::vector<Elem> m(q.order());
  const Subgroup normal = normalizer(g, image);
  for (Elem n : normal.members()) {
    for (Elem x = 0; x < q.order(); ++x) m[x] = preimage[g.conj(n, alpha.image_of[x])];
    ++hits[out.out_of(m)];
  }
  // Each coset n Im contributes |Im| elements to one out-class.
  for (std::size_t h : hits) {
    if (h == 0) continue;
    if (h % image.order() != 0) throw ActionInconsistent("fiber is not a union of cosets of the image");
    const std::size_t fiber = h / image.order();
    if (report.multiplicity != 0 && report.multiplicity != fiber)
      throw ActionInconsistent("fibers of W over Out(Q) differ in size");
    report.multiplicity = fiber;
    ++report.support;
  }
  report.nonzero = report.multiplicity % p != 0;
  return report;
}

namespace {

SubgroupFamily family_from_reps(const FiniteGroup& acting, std::vector<Subgroup> reps) {
  SubgroupFamily f{acting, std::move(reps), {}};
  for (std::size_t i = 0; i < f.reps.size(); ++i)
    f.labels.push_back(std::to_string(i) + ":" + describe(f.reps[i].as_group()));
  return f;
}

}  // namespace

SubgroupFamily cyclic_mod_p_family(const FiniteGroup& acting, unsigned p) {
  return family_from_reps(acting, cyclic_mod_p_poset(acting, p).class_reps);
}

SubgroupFamily all_subgroups_family(const FiniteGroup& acting) {
  return family_from_reps(acting, subgroup_conjugacy_classes(acting).class_reps);
}

MarkVector marks(const GroupAction& action, const SubgroupFamily& family) {
  return marks(action, family, family.labels);
}

MarkVector marks(const GroupAction& action, const SubgroupFamily& family, std::span<const std::string> labels) {
  if (!action.group.same_as(family.acting)) throw BadParameter("family belongs to a different acting group");
  MarkVector mv;
  for (const auto& label : labels) {
    auto it = std::find(family.labels.begin(), family.labels.end(), label);
    if (it == family.labels.end()) throw UnknownFamilyLabel("no subgroup class labelled '" + label + "'");
    const Subgroup& s = family.reps[static_cast<std::size_t>(it - family.labels.begin())];
    std::size_t fixed = 0;
    for (std::size_t x = 0; x < action.points; ++x)
      if (std::all_of(s.generators().begin(), s.generators().end(),
                      [&](Elem g) { return action.apply(g, x) == x; }))
        ++fixed;
    mv.family.push_back(label);
    mv.counts.push_back(fixed);
  }
  return mv;
}

}  // namespace stabletype
