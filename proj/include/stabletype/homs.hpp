#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stabletype/finite_group.hpp"

namespace stabletype {

/// A homomorphism stored as a total map on element indices.
struct Homomorphism {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<Elem> image_of;

  bool is_injective() const;
  bool is_surjective() const;
  Subgroup image() const;
};

/// All homomorphisms Q -> G, sorted by image_of. Generator images are
/// backtracked with the pruning ord(image) | ord(generator).
/// Throws GeneratingSetTooLarge when Q needs more than four generators.
std::vector<Homomorphism> enumerate_homs(const FiniteGroup& q, const FiniteGroup& g);

inline constexpr std::size_t kMaxHomGenerators = 4;

struct RepClass {
  Homomorphism representative;  ///< lexicographically least map in the orbit
  std::size_t orbit_size = 0;
  bool injective = false;
  bool surjective = false;
  bool in_k = false;  ///< meaningful only when the set was built with a prime
};

/// G-conjugacy classes of homomorphisms Q -> G (or a flagged subset of
/// them), with lookup from any map to its class.
class RepSet {
 public:
  RepSet(FiniteGroup q, FiniteGroup g, unsigned prime, std::size_t hom_count, std::vector<RepClass> classes);

  const FiniteGroup& domain() const noexcept { return q_; }
  const FiniteGroup& codomain() const noexcept { return g_; }
  unsigned prime() const noexcept { return prime_; }
  /// |Hom(Q,G)| of the full set this was built from.
  std::size_t hom_count() const noexcept { return hom_count_; }
  const std::vector<RepClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  /// Least G-conjugate of `image_of`.
  std::vector<Elem> canonical(std::span<const Elem> image_of) const;
  /// Class index of the map; throws BadParameter if the class is not in this set.
  std::size_t class_of(std::span<const Elem> image_of) const;

  /// Same set restricted to classes satisfying `keep`.
  template <typename Pred>
  RepSet filtered(Pred keep) const {
    std::vector<RepClass> kept;
    for (const auto& c : classes_)
      if (keep(c)) kept.push_back(c);
    return RepSet(q_, g_, prime_, hom_count_, std::move(kept));
  }

 private:
  FiniteGroup q_;
  FiniteGroup g_;
  unsigned prime_;
  std::size_t hom_count_;
  std::vector<RepClass> classes_;
  std::map<std::vector<Elem>, std::size_t> index_;
};

/// Rep(Q,G) = Hom(Q,G)/G. With `prime` = 0 the in_k flags stay false.
RepSet rep_classes(const FiniteGroup& q, const FiniteGroup& g, unsigned prime = 0);
/// Inj(Q,G): the injective classes.
RepSet inj_classes(const FiniteGroup& q, const FiniteGroup& g, unsigned prime = 0);
/// K(Q,G): injective classes with C_G(Im)/Z(Im) of p'-order.
RepSet k_classes(const FiniteGroup& q, const FiniteGroup& g, unsigned prime);
/// Surj(Q,R): the surjective classes.
RepSet surj_classes(const FiniteGroup& q, const FiniteGroup& r);

/// |C_G(Im a)| / |Z(Im a)| prime to p; false for non-injective maps.
bool k_flag(const Homomorphism& alpha, unsigned p);
inline bool k_flag(const RepClass& alpha, unsigned p) { return k_flag(alpha.representative, p); }

/// Per-quotient term of the Rep factorization through Surj x Inj.
struct FactorizationTerm {
  FiniteGroup quotient;
  std::string name;
  std::size_t surj_classes = 0;
  std::size_t inj_classes = 0;
  std::size_t out_order = 0;
  /// |(Surj(Q,R) x Inj(R,G)) / Out(R)|
  std::size_t contribution = 0;
};

struct FactorizationReport {
  std::size_t rep_count = 0;  ///< |Rep(Q,G)|
  std::size_t sum = 0;        ///< sum of contributions
  std::vector<FactorizationTerm> terms;

  bool holds() const noexcept { return rep_count == sum; }
};

/// Counts Rep(Q,G) both directly and as a sum over quotients R of Q of
/// Out(R)-orbits on Surj(Q,R) x Inj(R,G) (post-composition on the left
/// factor, pre-composition by the inverse on the right).
FactorizationReport factorization_check(const FiniteGroup& q, const FiniteGroup& g);

}  // namespace stabletype
