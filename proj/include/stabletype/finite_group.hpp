#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "stabletype/element_set.hpp"
#include "stabletype/permutation.hpp"

namespace stabletype {

/// Index of an element inside FiniteGroup::elements().
using Elem = std::uint32_t;

/// Conjugacy classes of a group.
///
/// Representatives are the least element index of each class; classes are
/// ordered by (element order, class size, representative).
struct ConjClassTable {
  std::vector<std::size_t> class_of;
  std::vector<Elem> representatives;
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Elem>> members;

  std::size_t size() const noexcept { return representatives.size(); }
};

class Subgroup;

/// A fully enumerated permutation group.
///
/// Elements are stored sorted lexicographically by image sequence, so
/// element indices are canonical for a given set of permutations. The
/// multiplication table is precomputed. A FiniteGroup is an immutable,
/// cheaply copyable handle; copies share storage.
class FiniteGroup {
 public:
  /// The trivial group on one point.
  FiniteGroup();

  /// Closure of `gens` on `degree` points. Throws CapExceeded past the
  /// order cap and InvalidPermutation for generators of the wrong degree.
  static FiniteGroup generate(const std::vector<Permutation>& gens, std::size_t degree);

  std::size_t order() const noexcept;
  std::size_t degree() const noexcept;
  Elem identity() const noexcept;

  const std::vector<Permutation>& elements() const noexcept;
  const Permutation& element(Elem e) const { return elements()[e]; }
  const std::vector<Permutation>& generators() const noexcept;
  const std::vector<Elem>& generator_indices() const noexcept;

  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const noexcept;
  Elem pow(Elem a, std::int64_t k) const noexcept;
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(Elem e) const noexcept;

  std::optional<Elem> find(const Permutation& p) const;
  /// Throws BadParameter when `p` is not an element.
  Elem index_of(const Permutation& p) const;

  const ConjClassTable& classes() const noexcept;
  bool is_abelian() const noexcept;

  /// True when both handles refer to the same stored group.
  bool same_as(const FiniteGroup& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static FiniteGroup from_sorted(std::vector<Permutation> elements, std::vector<Permutation> gens,
                                 std::size_t degree);
  friend class Subgroup;

  std::shared_ptr<const Impl> impl_;
};

/// A subgroup of an enumerated parent group, stored as a sorted index set.
class Subgroup {
 public:
  /// Subgroup generated by the given element indices.
  static Subgroup generated_by(const FiniteGroup& parent, std::span<const Elem> gens);
  /// Throws BadParameter when `members` is not closed under multiplication.
  static Subgroup from_members(const FiniteGroup& parent, std::vector<Elem> members);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const ElementSet& member_set() const noexcept { return set_; }
  std::size_t order() const noexcept { return members_.size(); }

  bool contains(Elem e) const noexcept { return set_.test(e); }
  bool contains(const Subgroup& other) const noexcept { return other.set_.is_subset_of(set_); }

  /// The subgroup as a group in its own right. Element i of the result is
  /// the permutation of members()[i] (sorting is inherited from the parent).
  FiniteGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.set_ == b.set_;
  }

 private:
  Subgroup(FiniteGroup parent, ElementSet set, std::vector<Elem> generators);

  FiniteGroup parent_;
  ElementSet set_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
};

/// Closure of `gens` under the parent's multiplication.
ElementSet close_in(const FiniteGroup& g, std::span<const Elem> gens);

// Structure operations.

FiniteGroup close_generators(const std::vector<Permutation>& gens, std::size_t degree);
const ConjClassTable& conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);
/// g S g^-1
Subgroup conjugate(const Subgroup& s, Elem g);
bool is_normal(const Subgroup& s);
/// Normal closure of a set of elements.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elems);

struct Quotient {
  FiniteGroup group;
  /// Element index of G -> element index of G/N.
  std::vector<Elem> projection;
};

/// Left-multiplication action on cosets. Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

Subgroup sylow(const FiniteGroup& g, unsigned p);
Subgroup o_p_prime(const FiniteGroup& g, unsigned p);
FiniteGroup reduce_mod_p(const FiniteGroup& g, unsigned p);

/// Element-to-element isomorphism G -> H if one exists.
std::optional<std::vector<Elem>> is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Minimal-ish generating set chosen greedily (largest closure first).
std::vector<Elem> small_generating_set(const FiniteGroup& g);

// Arithmetic helpers.
bool is_prime(std::uint64_t n) noexcept;
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p) noexcept;
bool is_p_power(std::uint64_t n, unsigned p) noexcept;

}  // namespace stabletype
