#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stabletype/finite_group.hpp"
#include "stabletype/out_action.hpp"

namespace stabletype {

/// |H n (g)| and |K n (g)| for each conjugacy class (g) of G.
struct PointwiseTable {
  std::vector<std::size_t> h_counts;
  std::vector<std::size_t> k_counts;
  bool conjugate = false;
};

PointwiseTable pointwise_conjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Pointwise conjugacy inside the full symmetric group of the common
/// degree, decided by cycle-type multisets (the symmetric group itself is
/// never built). Throws BadParameter when the degrees differ.
bool pointwise_conjugate_symmetric(const FiniteGroup& h, const FiniteGroup& k);

struct MarksComparison {
  bool equal = false;
  MarkVector x;
  MarkVector y;
};

/// Compares two actions of one Out(Q) by marks over its cyclic mod p
/// subgroup classes. Throws OutMismatch if the out groups are not the
/// same realization.
MarksComparison perm_marks_equal(const OutAction& x, const OutAction& y, unsigned p);

enum class Verdict { Equivalent, NotEquivalent, SylowMismatch };
enum class Method { Auto, General, NormalSylow, ReducedCyclic };

const char* to_string(Verdict v);
const char* to_string(Method m);

struct QReport {
  FiniteGroup q;
  std::string name;
  std::size_t inj1 = 0;
  std::size_t inj2 = 0;
  MarksComparison marks;
};

/// Where two groups were told apart.
struct Witness {
  std::string q;
  std::string label;
  std::size_t count1 = 0;
  std::size_t count2 = 0;
};

struct EquivalenceVerdict {
  Verdict result = Verdict::Equivalent;
  unsigned prime = 0;
  Method method = Method::General;
  std::vector<QReport> per_q;
  std::optional<Witness> witness;
  /// Normal-Sylow method: class counts of both Weyl groups inside Out(P).
  std::optional<PointwiseTable> weyl_table;
  /// Extra opinions filled in when requested through VerifyOptions.
  std::optional<bool> rep_level_equivalent;
  std::optional<bool> k_level_equivalent;
};

struct VerifyOptions {
  bool rep_level = false;       ///< also compare Rep(Q,G) marks
  bool k_level = false;         ///< also compare K(Q,G) marks
  bool second_section = false;  ///< recompute Inj marks with the other section
};

/// General decider: reduce mod O_{p'}, compare Sylow subgroups, then compare
/// Inj(Q,G_i) as Out(Q)-sets by marks for every p-subgroup class Q.
EquivalenceVerdict stably_equivalent(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p,
                                     const VerifyOptions& verify = {});

/// Both Sylow subgroups normal: compare Weyl groups inside Out(P) up to
/// pointwise conjugacy. Throws NotNormalSylow.
EquivalenceVerdict normal_sylow_equivalent(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p);

/// Both groups reduced and cyclic mod p: equivalent iff isomorphic.
/// Throws NotReducedCyclicModP.
EquivalenceVerdict reduced_cyclic_equivalent(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p);

/// Method dispatch. Auto picks reduced-cyclic when both reduced forms are
/// cyclic mod p, else normal-sylow when both Sylows are normal, else general.
EquivalenceVerdict decide_equivalence(const FiniteGroup& g1, const FiniteGroup& g2, unsigned p, Method method);

}  // namespace stabletype
