#include <gtest/gtest.h>

#include "corpus.hpp"
#include "stabletype/descriptor.hpp"
#include "stabletype/equivalence.hpp"
#include "stabletype/error.hpp"
#include "stabletype/lattice.hpp"
#include "stabletype/named.hpp"

using namespace stabletype;

namespace {

Subgroup sub(const FiniteGroup& g, std::vector<std::vector<std::vector<Point>>> gens) {
  std::vector<Elem> idx;
  for (auto& c : gens) idx.push_back(g.index_of(Permutation::from_cycles(g.degree(), c)));
  return Subgroup::generated_by(g, idx);
}

bool sylows_isomorphic(const FiniteGroup& a, const FiniteGroup& b, unsigned p) {
  return is_isomorphic(sylow(a, p).as_group(), sylow(b, p).as_group()).has_value();
}

// Pairs exercised by the symmetric / agreement properties.
const std::vector<std::string>& pair_groups() {
  static const std::vector<std::string> list = {"C2", "C4", "C6", "S3", "D8", "Q8", "A4", "S4",
                                                "C2 x C2", "Q12", "Q12 x C2", "D6 x C4", "C12", "D10"};
  return list;
}

}  // namespace

TEST(PointwiseConjugate, Examples) {
  FiniteGroup s4 = parse_group("S4");
  Subgroup t = sub(s4, {{{0, 1}}});
  Subgroup dt = sub(s4, {{{0, 1}, {2, 3}}});
  EXPECT_TRUE(pointwise_conjugate(s4, t, t).conjugate);
  auto table = pointwise_conjugate(s4, t, dt);
  EXPECT_FALSE(table.conjugate);
  // Classes ordered by (element order, size): e, double transpositions, transpositions, ...
  EXPECT_EQ(table.h_counts, (std::vector<std::size_t>{1, 0, 1, 0, 0}));
  EXPECT_EQ(table.k_counts, (std::vector<std::size_t>{1, 1, 0, 0, 0}));
}

TEST(PointwiseConjugate, InvariantUnderConjugation) {
  for (const auto& d : {"S4", "D8", "A4", "S3 x S3"}) {
    FiniteGroup g = parse_group(d);
    auto classes = subgroup_conjugacy_classes(g);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j) {
        const bool base = pointwise_conjugate(g, classes.class_reps[i], classes.class_reps[j]).conjugate;
        for (Elem x : g.generator_indices()) {
          EXPECT_EQ(pointwise_conjugate(g, conjugate(classes.class_reps[i], x), classes.class_reps[j]).conjugate, base);
          EXPECT_EQ(pointwise_conjugate(g, classes.class_reps[i], conjugate(classes.class_reps[j], x)).conjugate, base);
        }
      }
  }
}

TEST(PointwiseConjugateSymmetric, Examples) {
  FiniteGroup e = regular_representation(parse_group("E3^3"));
  FiniteGroup h = parse_group("H3");
  ASSERT_EQ(e.degree(), 27u);
  ASSERT_EQ(h.degree(), 27u);
  const std::vector<std::size_t> nine_threes(9, 3);
  for (const auto* g : {&e, &h})
    for (Elem x = 0; x < g->order(); ++x)
      if (x != g->identity()) {
        EXPECT_EQ(g->element(x).cycle_type(), nine_threes);
      }
  EXPECT_TRUE(pointwise_conjugate_symmetric(e, h));
  EXPECT_TRUE(pointwise_conjugate_symmetric(e, e));
  EXPECT_FALSE(is_isomorphic(e, h).has_value());

  FiniteGroup c4 = close_generators({Permutation::from_cycles(4, {{0, 1, 2, 3}})}, 4);
  FiniteGroup v4 = close_generators({Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}, 4);
  EXPECT_FALSE(pointwise_conjugate_symmetric(c4, v4));
  EXPECT_THROW(pointwise_conjugate_symmetric(c4, parse_group("S3")), BadParameter);
}

TEST(PointwiseConjugateSymmetric, AgreesWithEnumeratedSymmetricGroup) {
  for (std::size_t n : {3u, 4u, 5u}) {
    FiniteGroup sn = make_named(NamedFamily::Symmetric, n);
    auto reps = subgroup_conjugacy_classes(sn).class_reps;
    for (const auto& a : reps)
      for (const auto& b : reps)
        EXPECT_EQ(pointwise_conjugate_symmetric(a.as_group(), b.as_group()), pointwise_conjugate(sn, a, b).conjugate)
            << "S" << n;
  }
}

TEST(PermMarksEqual, Examples) {
  FiniteGroup c2 = parse_group("C2");
  OutGroup out2 = automorphism_group(c2);
  auto x = out_action(inj_classes(c2, parse_group("Q12 x C2")), out2);
  EXPECT_TRUE(perm_marks_equal(x, x, 2).equal);
  auto y = out_action(inj_classes(c2, parse_group("D6 x C4")), out2);
  EXPECT_TRUE(perm_marks_equal(x, y, 2).equal);

  FiniteGroup c3 = parse_group("C3");
  OutGroup out3 = automorphism_group(c3);
  auto in_s3 = out_action(inj_classes(c3, parse_group("S3")), out3);
  auto in_c6 = out_action(inj_classes(c3, parse_group("C6")), out3);
  auto cmp = perm_marks_equal(in_s3, in_c6, 3);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.x.counts, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(cmp.y.counts, (std::vector<std::size_t>{2, 0}));
}

TEST(PermMarksEqual, OutMismatch) {
  FiniteGroup c2 = parse_group("C2");
  FiniteGroup c4 = parse_group("C4");
  auto a = out_action(inj_classes(c2, c4), automorphism_group(c2));
  auto b = out_action(inj_classes(c4, c4), automorphism_group(c4));
  EXPECT_THROW(perm_marks_equal(a, b, 2), OutMismatch);
  // Independently built but identical realizations are accepted.
  auto c = out_action(inj_classes(c4, parse_group("D8")), automorphism_group(c4));
  EXPECT_NO_THROW(perm_marks_equal(b, c, 2));
}

TEST(PermMarksEqual, EquivalenceRelation) {
  for (const auto& qd : {"C2", "C4", "C2 x C2", "C3"}) {
    FiniteGroup q = parse_group(qd);
    OutGroup out = automorphism_group(q);
    std::vector<OutAction> acts;
    for (const auto& d : testcorpus::small_descriptors()) acts.push_back(out_action(inj_classes(q, parse_group(d)), out));
    for (unsigned p : {2u, 3u})
      for (std::size_t i = 0; i < acts.size(); ++i) {
        EXPECT_TRUE(perm_marks_equal(acts[i], acts[i], p).equal);
        for (std::size_t j = 0; j < acts.size(); ++j) {
          const bool ij = perm_marks_equal(acts[i], acts[j], p).equal;
          EXPECT_EQ(ij, perm_marks_equal(acts[j], acts[i], p).equal);
          for (std::size_t k = 0; k < acts.size(); ++k)
            if (ij && perm_marks_equal(acts[j], acts[k], p).equal) {
              EXPECT_TRUE(perm_marks_equal(acts[i], acts[k], p).equal);
            }
        }
      }
  }
}

TEST(StablyEquivalent, Examples) {
  FiniteGroup s4 = parse_group("S4");
  EXPECT_EQ(stably_equivalent(s4, s4, 2).result, Verdict::Equivalent);
  EXPECT_EQ(stably_equivalent(parse_group("C6"), parse_group("C2"), 2).result, Verdict::Equivalent);

  FiniteGroup g1 = parse_group("Q12 x C2");
  FiniteGroup g2 = parse_group("D6 x C4");
  EXPECT_FALSE(is_isomorphic(g1, g2).has_value());
  for (unsigned p : {2u, 3u}) {
    auto v = stably_equivalent(g1, g2, p);
    EXPECT_EQ(v.result, Verdict::Equivalent) << "p=" << p;
    EXPECT_FALSE(v.witness.has_value());
    EXPECT_FALSE(v.per_q.empty());
  }

  auto mismatch = stably_equivalent(parse_group("C4"), parse_group("C2 x C2"), 2);
  EXPECT_EQ(mismatch.result, Verdict::SylowMismatch);
  EXPECT_TRUE(mismatch.witness.has_value());
}

TEST(StablyEquivalent, NotEquivalentCarriesWitness) {
  auto v = stably_equivalent(parse_group("A4"), parse_group("C2 x C2"), 2);
  EXPECT_EQ(v.result, Verdict::NotEquivalent);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->q, "C2");  // one class of involutions in A4, three in V4

  auto w = stably_equivalent(parse_group("S3"), parse_group("C6"), 3);
  EXPECT_EQ(w.result, Verdict::NotEquivalent);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_EQ(w.witness->q, "C3");
}

TEST(StablyEquivalent, DegeneratePrimeAndErrors) {
  EXPECT_EQ(stably_equivalent(parse_group("S3"), parse_group("A4"), 5).result, Verdict::Equivalent);
  EXPECT_THROW(stably_equivalent(parse_group("S3"), parse_group("S3"), 6), BadPrime);
}

TEST(StablyEquivalent, SymmetricSylowNecessaryAndReductionInvariant) {
  const auto& gs = pair_groups();
  for (unsigned p : {2u, 3u})
    for (std::size_t i = 0; i < gs.size(); ++i) {
      FiniteGroup a = parse_group(gs[i]);
      for (std::size_t j = i; j < gs.size(); ++j) {
        FiniteGroup b = parse_group(gs[j]);
        auto ab = stably_equivalent(a, b, p);
        EXPECT_EQ(ab.result, stably_equivalent(b, a, p).result) << gs[i] << " / " << gs[j] << " p=" << p;
        EXPECT_EQ(ab.result, stably_equivalent(reduce_mod_p(a, p), b, p).result);
        if (ab.result == Verdict::Equivalent) {
          EXPECT_TRUE(sylows_isomorphic(a, b, p)) << gs[i] << " / " << gs[j];
        }
        if (ab.result == Verdict::NotEquivalent) {
          EXPECT_TRUE(ab.witness.has_value());
        }
      }
    }
}

TEST(StablyEquivalent, InjRepAndKOpinionsAgree) {
  VerifyOptions all{true, true, true};
  const auto& gs = pair_groups();
  for (unsigned p : {2u, 3u})
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i; j < gs.size(); ++j) {
        auto v = stably_equivalent(parse_group(gs[i]), parse_group(gs[j]), p, all);
        if (v.result == Verdict::SylowMismatch) continue;
        const bool inj = v.result == Verdict::Equivalent;
        EXPECT_EQ(v.rep_level_equivalent, inj) << gs[i] << " / " << gs[j] << " p=" << p;
        EXPECT_EQ(v.k_level_equivalent, inj) << gs[i] << " / " << gs[j] << " p=" << p;
      }
}

TEST(NormalSylowEquivalent, Examples) {
  FiniteGroup a4 = parse_group("A4");
  EXPECT_EQ(normal_sylow_equivalent(a4, parse_group("A4"), 2).result, Verdict::Equivalent);
  auto s3c6 = normal_sylow_equivalent(parse_group("S3"), parse_group("C6"), 3);
  EXPECT_EQ(s3c6.result, Verdict::NotEquivalent);
  EXPECT_TRUE(s3c6.witness.has_value());
  EXPECT_EQ(normal_sylow_equivalent(a4, parse_group("C2 x C2"), 2).result, Verdict::NotEquivalent);
  // V4 x| C3 with C3 acting through a different 3-cycle of Out(V4).
  FiniteGroup other = parse_group("perm{(1 2)(3 4),(1 3)(2 4),(1 3 2)}");
  ASSERT_EQ(other.order(), 12u);
  EXPECT_EQ(normal_sylow_equivalent(a4, other, 2).result, Verdict::Equivalent);
  EXPECT_EQ(normal_sylow_equivalent(parse_group("C4"), parse_group("C2 x C2"), 2).result, Verdict::SylowMismatch);
  EXPECT_THROW(normal_sylow_equivalent(parse_group("S4"), a4, 2), NotNormalSylow);
}

TEST(NormalSylowEquivalent, AgreesWithGeneral) {
  const auto& gs = pair_groups();
  for (unsigned p : {2u, 3u})
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i; j < gs.size(); ++j) {
        FiniteGroup a = parse_group(gs[i]);
        FiniteGroup b = parse_group(gs[j]);
        if (!is_normal(sylow(a, p)) || !is_normal(sylow(b, p))) continue;
        EXPECT_EQ(normal_sylow_equivalent(a, b, p).result, stably_equivalent(a, b, p).result)
            << gs[i] << " / " << gs[j] << " p=" << p;
      }
}

TEST(ReducedCyclicEquivalent, Examples) {
  FiniteGroup s3 = parse_group("S3");
  EXPECT_EQ(reduced_cyclic_equivalent(s3, parse_group("S3"), 3).result, Verdict::Equivalent);
  EXPECT_EQ(reduced_cyclic_equivalent(s3, parse_group("C3"), 3).result, Verdict::NotEquivalent);
  EXPECT_EQ(reduced_cyclic_equivalent(parse_group("perm{(1 2 3 4 5),(2 3 5 4)}"), parse_group("D10"), 5).result,
            Verdict::NotEquivalent);
  EXPECT_EQ(reduced_cyclic_equivalent(parse_group("C4"), parse_group("C2 x C2"), 2).result, Verdict::SylowMismatch);
  EXPECT_THROW(reduced_cyclic_equivalent(parse_group("C6"), s3, 3), NotReducedCyclicModP);
  EXPECT_THROW(reduced_cyclic_equivalent(s3, parse_group("S4"), 2), NotReducedCyclicModP);
}

TEST(ReducedCyclicEquivalent, AgreesWithGeneralAndIsomorphism) {
  std::vector<std::pair<FiniteGroup, unsigned>> reduced;
  for (const auto& d : testcorpus::descriptors())
    for (unsigned p : {2u, 3u, 5u}) {
      FiniteGroup g = parse_group(d);
      if (g.order() % p == 0 && o_p_prime(g, p).order() == 1 && is_cyclic_mod_p(g, p)) reduced.emplace_back(g, p);
    }
  ASSERT_GE(reduced.size(), 8u);
  for (const auto& [a, p] : reduced)
    for (const auto& [b, q] : reduced) {
      if (p != q || a.order() > 60 || b.order() > 60) continue;
      auto v = reduced_cyclic_equivalent(a, b, p);
      EXPECT_EQ(v.result == Verdict::Equivalent, is_isomorphic(a, b).has_value());
      const Verdict general = stably_equivalent(a, b, p).result;
      EXPECT_EQ(v.result, general) << describe(a) << " / " << describe(b);
    }
}

TEST(DecideEquivalence, AutoPicksApplicableMethod) {
  EXPECT_EQ(decide_equivalence(parse_group("C6"), parse_group("C2"), 2, Method::Auto).method, Method::ReducedCyclic);
  // A4 is itself cyclic mod 2.
  EXPECT_EQ(decide_equivalence(parse_group("A4"), parse_group("C2 x C2"), 2, Method::Auto).method,
            Method::ReducedCyclic);
  EXPECT_EQ(decide_equivalence(parse_group("S3 x S3"), parse_group("S3 x S3"), 3, Method::Auto).method,
            Method::NormalSylow);
  auto order24 = decide_equivalence(parse_group("Q12 x C2"), parse_group("D6 x C4"), 2, Method::Auto);
  EXPECT_EQ(order24.result, Verdict::Equivalent);
  EXPECT_EQ(decide_equivalence(parse_group("S4"), parse_group("S4"), 2, Method::Auto).method, Method::General);
}
