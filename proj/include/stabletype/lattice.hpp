#pragma once

#include <cstddef>
#include <vector>

#include "stabletype/finite_group.hpp"

namespace stabletype {

/// Every subgroup exactly once, sorted by (order, member index list).
/// Throws CapExceeded when |G| exceeds the subgroup cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Conjugacy classes of subgroups.
///
/// `subgroups` is the all_subgroups() list; `fusion[i]` is the class of
/// subgroups[i]. Each class rep is its lexicographically least member and
/// `witnesses[c][k]` conjugates the rep onto `members_per_class[c][k]`
/// (w R w^-1 = member). Classes are ordered by (order, rep members).
struct SubgroupClassTable {
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> fusion;
  std::vector<Subgroup> class_reps;
  std::vector<std::vector<Subgroup>> members_per_class;
  std::vector<std::vector<Elem>> witnesses;

  std::size_t size() const noexcept { return class_reps.size(); }
};

SubgroupClassTable subgroup_conjugacy_classes(const FiniteGroup& g);

/// Isomorphism-class representatives of all subgroups of a Sylow
/// p-subgroup, ascending by order, trivial group first and P last.
std::vector<FiniteGroup> p_subgroup_iso_classes(const FiniteGroup& g, unsigned p);

/// Sylow p-subgroup normal with cyclic quotient.
bool is_cyclic_mod_p(const FiniteGroup& g, unsigned p);
bool is_cyclic_mod_p(const Subgroup& h, unsigned p);

/// Conjugacy classes of cyclic mod p subgroups, ordered as in
/// subgroup_conjugacy_classes (so class 0 is always the trivial subgroup).
struct CyclicModPPoset {
  unsigned prime = 0;
  std::vector<Subgroup> class_reps;
  std::vector<std::vector<Subgroup>> members;
  /// leq[i][j]: some member of class i lies in some member of class j.
  std::vector<std::vector<bool>> leq;
  /// [N_G(H) : H] for each class rep.
  std::vector<std::size_t> index_in_normalizer;
  std::vector<std::size_t> subgroup_counts;

  std::size_t size() const noexcept { return class_reps.size(); }
};

CyclicModPPoset cyclic_mod_p_poset(const FiniteGroup& g, unsigned p);

}  // namespace stabletype
