#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stabletype/finite_group.hpp"
#include "stabletype/homs.hpp"

namespace stabletype {

/// Which automorphism represents each outer class.
enum class SectionChoice { Least, Greatest };

/// Aut(Q), Inn(Q) and Out(Q) = Aut/Inn. Automorphisms are permutations of
/// Q's element indices, so an element of `aut` doubles as a map on Q.
struct OutGroup {
  FiniteGroup q;
  FiniteGroup aut;
  Subgroup inn;
  FiniteGroup out;
  std::vector<Elem> aut_to_out;
  /// One automorphism (index into aut) per element of out.
  std::vector<Elem> section;
  SectionChoice section_choice = SectionChoice::Least;

  const ConjClassTable& out_classes() const { return out.classes(); }
  /// The section automorphism of `o` as an index map on Q.
  std::vector<Elem> section_map(Elem o) const;
  /// Outer class of an automorphism given as an index map on Q.
  Elem out_of(std::span<const Elem> automorphism) const;
};

OutGroup automorphism_group(const FiniteGroup& q, SectionChoice section = SectionChoice::Least);

/// A finite group acting on points 0..points-1: image[g][x].
struct GroupAction {
  FiniteGroup group;
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> image;

  std::size_t apply(Elem g, std::size_t x) const { return image[g][x]; }
};

/// Out(Q) acting on the classes of a RepSet by [phi] -> [phi o a^-1].
struct OutAction {
  RepSet reps;
  OutGroup out;
  GroupAction action;
};

/// Throws ActionInconsistent if an inner automorphism moves a class.
OutAction out_action(const RepSet& reps, const OutGroup& out);

struct WeylGroup {
  OutGroup out;  ///< Out(H), with H realized as H.as_group()
  Subgroup w;    ///< subgroup of out.out
};

/// W_G(H) = N_G(H) / H C_G(H) as a subgroup of Out(H).
WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h);

enum class WBarMode {
  Shortcut,  ///< common fiber size |C_G(Im)| / |Z(Im)|
  Literal,   ///< sum over N_G(Im)/Im counted element by element
};

struct WBarReport {
  bool nonzero = false;
  /// Common fiber size of W -> Out(Q) over its image.
  std::size_t multiplicity = 0;
  /// Number of out-elements hit (|image of W|). Zero in Shortcut mode.
  std::size_t support = 0;
};

/// W-bar = sum over w in N_G(Im a)/Im a of the outer class of w, nonzero mod p.
/// Throws BadParameter for a non-injective map.
WBarReport w_bar(const Homomorphism& alpha, unsigned p, WBarMode mode = WBarMode::Shortcut);
inline bool w_bar_nonzero(const Homomorphism& alpha, unsigned p, WBarMode mode = WBarMode::Shortcut) {
  return w_bar(alpha, p, mode).nonzero;
}

/// Subgroup-class representatives of an acting group, with stable labels.
struct SubgroupFamily {
  FiniteGroup acting;
  std::vector<Subgroup> reps;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return reps.size(); }
};

/// Conjugacy classes of cyclic mod p subgroups of `acting`.
SubgroupFamily cyclic_mod_p_family(const FiniteGroup& acting, unsigned p);
/// Conjugacy classes of all subgroups of `acting`.
SubgroupFamily all_subgroups_family(const FiniteGroup& acting);

struct MarkVector {
  std::vector<std::string> family;
  std::vector<std::size_t> counts;

  friend bool operator==(const MarkVector&, const MarkVector&) = default;
};

/// Points fixed by every element of each family subgroup.
MarkVector marks(const GroupAction& action, const SubgroupFamily& family);
/// Marks at the named labels only; throws UnknownFamilyLabel.
MarkVector marks(const GroupAction& action, const SubgroupFamily& family, std::span<const std::string> labels);

}  // namespace stabletype
