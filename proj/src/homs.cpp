#include "stabletype/homs.hpp"

#include <algorithm>
#include <string>

#include "stabletype/detail/extension.hpp"
#include "stabletype/error.hpp"

namespace stabletype {

bool Homomorphism::is_injective() const {
  std::vector<bool> hit(codomain.order(), false);
  for (Elem y : image_of) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> hit(codomain.order(), false);
  std::size_t distinct = 0;
  for (Elem y : image_of)
    if (!hit[y]) {
      hit[y] = true;
      ++distinct;
    }
  return distinct == codomain.order();
}

Subgroup Homomorphism::image() const {
  std::vector<Elem> gens;
  for (Elem s : domain.generator_indices()) gens.push_back(image_of[s]);
  return Subgroup::generated_by(codomain, gens);
}

std::vector<Homomorphism> enumerate_homs(const FiniteGroup& q, const FiniteGroup& g) {
  std::vector<Elem> gens = small_generating_set(q);
  if (gens.size() > kMaxHomGenerators)
    throw GeneratingSetTooLarge("domain needs " + std::to_string(gens.size()) + " generators; at most " +
                                std::to_string(kMaxHomGenerators) + " supported");
  detail::CayleyExtender extender(q, gens);
  std::vector<std::vector<Elem>> candidates;
  for (Elem s : gens) {
    std::vector<Elem> c;
    for (Elem y = 0; y < g.order(); ++y)
      if (q.element_order(s) % g.element_order(y) == 0) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<Elem>> maps;
  detail::search_generator_images(extender, g, candidates, /*injective=*/false,
                                  [&](const std::vector<Elem>& map) {
                                    maps.push_back(map);
                                    return true;
                                  });
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> homs;
  homs.reserve(maps.size());
  for (auto& m : maps) homs.push_back(Homomorphism{q, g, std::move(m)});
  return homs;
}

RepSet::RepSet(FiniteGroup q, FiniteGroup g, unsigned prime, std::size_t hom_count, std::vector<RepClass> classes)
    : q_(std::move(q)), g_(std::move(g)), prime_(prime), hom_count_(hom_count), classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) index_.emplace(classes_[i].representative.image_of, i);
}

std::vector<Elem> RepSet::canonical(std::span<const Elem> image_of) const {
  std::vector<Elem> best(image_of.begin(), image_of.end());
  std::vector<Elem> candidate(image_of.size());
  for (Elem x = 0; x < g_.order(); ++x) {
    for (std::size_t i = 0; i < image_of.size(); ++i) candidate[i] = g_.conj(x, image_of[i]);
    if (candidate < best) best = candidate;
  }
  return best;
}

std::size_t RepSet::class_of(std::span<const Elem> image_of) const {
  auto it = index_.find(canonical(image_of));
  if (it == index_.end()) throw BadParameter("homomorphism class is not part of this set");
  return it->second;
}

bool k_flag(const Homomorphism& alpha, unsigned p) {
  if (!alpha.is_injective()) return false;
  const FiniteGroup& g = alpha.codomain;
  Subgroup image = alpha.image();
  Subgroup c = centralizer(g, image);
  std::size_t z = 0;
  for (Elem m : image.members())
    if (c.contains(m)) ++z;
  return (c.order() / z) % p != 0;
}

RepSet rep_classes(const FiniteGroup& q, const FiniteGroup& g, unsigned prime) {
  if (prime != 0 && !is_prime(prime)) throw BadPrime(std::to_string(prime) + " is not prime");
  std::vector<Homomorphism> homs = enumerate_homs(q, g);
  std::map<std::vector<Elem>, std::size_t> position;
  for (std::size_t i = 0; i < homs.size(); ++i) position.emplace(homs[i].image_of, i);

  std::vector<bool> assigned(homs.size(), false);
  std::vector<RepClass> classes;
  std::vector<Elem> conj(q.order());
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (assigned[i]) continue;
    // Sorted order makes the first unassigned map the least of its orbit.
    std::size_t orbit = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      for (std::size_t k = 0; k < conj.size(); ++k) conj[k] = g.conj(x, homs[i].image_of[k]);
      const std::size_t j = position.at(conj);
      if (!assigned[j]) {
        assigned[j] = true;
        ++orbit;
      }
    }
    RepClass c;
    c.representative = homs[i];
    c.orbit_size = orbit;
    c.injective = c.representative.is_injective();
    c.surjective = c.representative.is_surjective();
    c.in_k = prime != 0 && k_flag(c.representative, prime);
    classes.push_back(std::move(c));
  }
  return RepSet(q, g, prime, homs.size(), std::move(classes));
}

RepSet inj_classes(const FiniteGroup& q, const FiniteGroup& g, unsigned prime) {
  if (q.order() > g.order() || g.order() % q.order() != 0) {
    // Lagrange rules out injections; skip enumeration but keep |Hom| honest.
    return rep_classes(q, g, prime).filtered([](const RepClass&) { return false; });
  }
  return rep_classes(q, g, prime).filtered([](const RepClass& c) { return c.injective; });
}

RepSet k_classes(const FiniteGroup& q, const FiniteGroup& g, unsigned prime) {
  return rep_classes(q, g, prime).filtered([](const RepClass& c) { return c.in_k; });
}

RepSet surj_classes(const FiniteGroup& q, const FiniteGroup& r) {
  return rep_classes(q, r, 0).filtered([](const RepClass& c) { return c.surjective; });
}

}  // namespace stabletype
