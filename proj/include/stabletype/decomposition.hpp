#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stabletype/finite_group.hpp"
#include "stabletype/lattice.hpp"

namespace stabletype {

using Rational = mpq_class;

/// Solution of sum_{K >= J} f(K) = 1 over cyclic mod p subgroups, where the
/// sum runs over subgroups K containing J, J itself included.
struct MobiusTable {
  CyclicModPPoset poset;
  std::vector<Rational> f;  ///< one value per class of the poset
};

/// Throws PosetInconsistent if the solved values fail the defining sums.
MobiusTable mobius_f(const CyclicModPPoset& poset);

/// Rational combination of isomorphism classes of groups. Keys are
/// registered first-seen and matched by isomorphism; zero terms are removed.
class FormalSum {
 public:
  struct Term {
    FiniteGroup group;
    std::string name;
    Rational coeff;
  };

  void add(const FiniteGroup& g, const Rational& coeff);
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// Zero when no key is isomorphic to g.
  Rational coefficient(const FiniteGroup& g) const;

 private:
  std::vector<Term> terms_;
};

/// One summand f(H)/[N_G(H):H] BH before aggregation.
struct RawTerm {
  Subgroup h;
  Rational f;
  std::size_t normalizer_index = 0;
  Rational coeff;
  FiniteGroup reduced;
  /// Reduced form has order prime to p, so the summand is p-locally trivial.
  bool dropped = false;
};

struct Decomposition {
  unsigned prime = 0;
  FormalSum sum;
  std::vector<RawTerm> raw;
};

/// BG as a rational wedge of BH over classes of cyclic mod p subgroups,
/// each H replaced by H/O_{p'}(H) and aggregated by isomorphism class.
Decomposition mw_decomposition(const FiniteGroup& g, unsigned p);
inline FormalSum mw_decompose(const FiniteGroup& g, unsigned p) { return mw_decomposition(g, p).sum; }

bool formal_sum_equal(const FormalSum& a, const FormalSum& b);

/// S = (positive - negative) / denominator with integer coefficients.
struct IntegralForm {
  FormalSum positive;
  FormalSum negative;
  mpz_class denominator{1};
};

IntegralForm integral_form(const FormalSum& s);

/// Conjugacy classes of cyclic subgroups of order prime to p.
std::vector<Subgroup> cyclic_pprime_classes(const FiniteGroup& g, unsigned p);

/// Fixed points |(G/H)^g| for p'-subgroups H (rows) and p'-element classes
/// (columns), i.e. Brauer characters of the permutation modules F_p[G/H].
struct PsiMatrix {
  std::vector<Subgroup> rows;
  std::vector<Elem> columns;  ///< class representatives
  std::vector<std::vector<std::size_t>> entries;
};

struct PsiRank {
  std::size_t rank = 0;
  std::size_t cyclic_classes = 0;
  PsiMatrix matrix;

  bool holds() const noexcept { return rank == cyclic_classes; }
};

PsiRank psi_rank(const FiniteGroup& g, unsigned p);

/// Rank over the rationals, by exact elimination.
std::size_t rational_rank(const std::vector<std::vector<std::size_t>>& m);

/// "3/2", "-1", "0".
std::string to_fraction_string(const Rational& q);

}  // namespace stabletype
