#pragma once

#include <string>

#include "stabletype/finite_group.hpp"

namespace stabletype {

enum class NamedFamily {
  Cyclic,             ///< C n: one n-cycle on n points
  Dihedral,           ///< D n (order n): symmetries of the n/2-gon; D2, D4 regular
  Quaternion,         ///< Q n (order n, 4 | n, n >= 8): left regular representation
  Symmetric,          ///< S n: (1 2 ... n), (1 2)
  Alternating,        ///< A n: (1 2 3), (1 2 4), ..., (1 2 n)
  ElementaryAbelian,  ///< E p^k: k disjoint p-cycles
  Heisenberg,         ///< H p: unitriangular 3x3 over F_p, left regular on p^3 points
};

/// Fixed permutation realizations of the standard families. `n` is the
/// order parameter (or prime for E/H); `k` is the rank for E.
/// Throws BadParameter for invalid parameters.
FiniteGroup make_named(NamedFamily family, unsigned n, unsigned k = 1);

/// G x H acting on disjoint point sets (G first).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Left regular representation on |G| points (point i = element i).
FiniteGroup regular_representation(const FiniteGroup& g);

/// Abelian invariants as invariant factors d1 | d2 | ..., largest first.
/// Precondition: g abelian.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);

/// A descriptor-language name for `g`: a recognized structure such as
/// "S3", "C4 x C2" or "Q12 x C2", otherwise a perm{...} generator list.
std::string describe(const FiniteGroup& g);

}  // namespace stabletype
