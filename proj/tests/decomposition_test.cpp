#include <algorithm>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "stabletype/decomposition.hpp"
#include "stabletype/descriptor.hpp"
#include "stabletype/equivalence.hpp"
#include "stabletype/error.hpp"
#include "stabletype/named.hpp"

using namespace stabletype;

namespace {

std::vector<Rational> f_by_order(const MobiusTable& t) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < t.f.size(); ++i) out.push_back(t.f[i]);
  return out;
}

// |(G/H)^x| by listing cosets gH and testing g^-1 x g in H.
std::size_t fixed_cosets(const FiniteGroup& g, const Subgroup& h, Elem x) {
  std::vector<bool> seen(g.order(), false);
  std::size_t fixed = 0;
  for (Elem a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    for (Elem m : h.members()) seen[g.mul(a, m)] = true;
    if (h.contains(g.mul(g.mul(g.inv(a), x), a))) ++fixed;
  }
  return fixed;
}

FormalSum single(const FiniteGroup& g, Rational c = 1) {
  FormalSum s;
  s.add(g, c);
  return s;
}

}  // namespace

TEST(Mobius, Examples) {
  auto cp = mobius_f(cyclic_mod_p_poset(parse_group("C5"), 5));
  EXPECT_EQ(f_by_order(cp), (std::vector<Rational>{0, 1}));

  // S3 at 3: classes 1, C2, C3, S3.
  auto s3_3 = mobius_f(cyclic_mod_p_poset(parse_group("S3"), 3));
  EXPECT_EQ(f_by_order(s3_3), (std::vector<Rational>{0, 0, 0, 1}));

  // S3 at 2: classes 1, C2, C3.
  auto s3_2 = mobius_f(cyclic_mod_p_poset(parse_group("S3"), 2));
  EXPECT_EQ(f_by_order(s3_2), (std::vector<Rational>{-3, 1, 1}));
}

TEST(Mobius, DefiningSumsHoldOverEverySubgroup) {
  // Recomputed straight from the subgroup list, without the class structure.
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u, 5u}) {
      auto poset = cyclic_mod_p_poset(g, p);
      auto t = mobius_f(poset);
      std::vector<std::pair<Subgroup, Rational>> valued;
      for (std::size_t i = 0; i < poset.size(); ++i)
        for (const auto& m : poset.members[i]) valued.emplace_back(m, t.f[i]);
      for (const auto& [j, fj] : valued) {
        Rational sum = 0;
        for (const auto& [k, fk] : valued)
          if (k.contains(j)) sum += fk;
        EXPECT_EQ(sum, 1) << d << " p=" << p;
      }
      for (const auto& f : t.f) EXPECT_EQ(f.get_den(), 1) << d;  // integer-valued on the corpus
    }
  }
}

TEST(MwDecompose, Examples) {
  FiniteGroup s3 = parse_group("S3");
  EXPECT_TRUE(formal_sum_equal(mw_decompose(s3, 3), single(s3)));
  auto s3_2 = mw_decompose(s3, 2);
  ASSERT_EQ(s3_2.size(), 1u);
  EXPECT_EQ(s3_2.terms()[0].name, "C2");
  EXPECT_EQ(s3_2.terms()[0].coeff, 1);
  for (unsigned p : {2u, 3u, 5u}) {
    FiniteGroup cp = parse_group("C" + std::to_string(p));
    EXPECT_TRUE(formal_sum_equal(mw_decompose(cp, p), single(cp)));
  }
  auto raw = mw_decomposition(s3, 2).raw;
  ASSERT_EQ(raw.size(), 3u);
  EXPECT_TRUE(raw[0].dropped);  // trivial group
  EXPECT_TRUE(raw[2].dropped);  // C3 is a 2'-group
}

TEST(MwDecompose, ReducedCyclicGroupsCollapse) {
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u, 5u}) {
      if (g.order() % p != 0 || o_p_prime(g, p).order() != 1 || !is_cyclic_mod_p(g, p)) continue;
      auto s = mw_decompose(g, p);
      EXPECT_TRUE(formal_sum_equal(s, single(g))) << d << " p=" << p;
    }
  }
}

TEST(MwDecompose, KeysAreReducedCyclicAndInvariantUnderReduction) {
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u}) {
      auto s = mw_decompose(g, p);
      for (const auto& t : s.terms()) {
        EXPECT_EQ(o_p_prime(t.group, p).order(), 1u);
        EXPECT_TRUE(is_cyclic_mod_p(t.group, p));
        EXPECT_NE(t.coeff, 0);
      }
      EXPECT_TRUE(formal_sum_equal(s, mw_decompose(reduce_mod_p(g, p), p))) << d << " p=" << p;
    }
  }
}

TEST(MwDecompose, StablyEquivalentGroupsHaveEqualSums) {
  const std::vector<std::string> gs = {"C2", "C4", "C6", "S3", "D8", "Q8", "A4", "S4",
                                       "C2 x C2", "Q12", "Q12 x C2", "D6 x C4", "C12"};
  std::size_t equivalent_pairs = 0;
  for (unsigned p : {2u, 3u})
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        FiniteGroup a = parse_group(gs[i]);
        FiniteGroup b = parse_group(gs[j]);
        if (stably_equivalent(a, b, p).result != Verdict::Equivalent) continue;
        ++equivalent_pairs;
        EXPECT_TRUE(formal_sum_equal(mw_decompose(a, p), mw_decompose(b, p))) << gs[i] << " / " << gs[j];
      }
  EXPECT_GE(equivalent_pairs, 3u);
}

TEST(FormalSum, EqualityAndAggregation) {
  FiniteGroup c2 = parse_group("C2");
  EXPECT_FALSE(formal_sum_equal(single(c2), single(parse_group("D2"), Rational(1, 2))));
  EXPECT_TRUE(formal_sum_equal(single(c2), single(parse_group("D2"))));
  FormalSum s;
  s.add(c2, Rational(1, 2));
  s.add(parse_group("D2"), Rational(-1, 2));
  EXPECT_TRUE(s.empty());
}

TEST(IntegralForm, Examples) {
  auto one = integral_form(single(parse_group("C2")));
  EXPECT_EQ(one.denominator, 1);
  EXPECT_EQ(one.positive.size(), 1u);
  EXPECT_TRUE(one.negative.empty());

  FormalSum s;
  FiniteGroup a = parse_group("C3");
  FiniteGroup b = parse_group("S3");
  s.add(a, Rational(3, 2));
  s.add(b, Rational(-1, 2));
  auto f = integral_form(s);
  EXPECT_EQ(f.denominator, 2);
  EXPECT_EQ(f.positive.coefficient(a), 3);
  EXPECT_EQ(f.negative.coefficient(b), 1);

  auto s3 = integral_form(mw_decompose(parse_group("S3"), 2));
  EXPECT_EQ(s3.denominator, 1);
  EXPECT_EQ(s3.positive.coefficient(parse_group("C2")), 1);
  EXPECT_TRUE(s3.negative.empty());
}

TEST(FractionString, Format) {
  EXPECT_EQ(to_fraction_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_fraction_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_fraction_string(Rational(0)), "0");
}

TEST(CyclicPPrimeClasses, Examples) {
  FiniteGroup s3 = parse_group("S3");
  EXPECT_EQ(cyclic_pprime_classes(s3, 3).size(), 2u);
  EXPECT_EQ(cyclic_pprime_classes(s3, 2).size(), 2u);
  EXPECT_EQ(cyclic_pprime_classes(parse_group("D8"), 2).size(), 1u);
  EXPECT_EQ(cyclic_pprime_classes(parse_group("H3"), 3).size(), 1u);
}

TEST(PsiRank, Examples) {
  auto s3 = psi_rank(parse_group("S3"), 3);
  EXPECT_EQ(s3.rank, 2u);
  EXPECT_EQ(s3.cyclic_classes, 2u);
  EXPECT_EQ(s3.matrix.entries, (std::vector<std::vector<std::size_t>>{{6, 0}, {3, 1}}));

  auto triv = psi_rank(FiniteGroup{}, 2);
  EXPECT_EQ(triv.rank, 1u);
  EXPECT_EQ(triv.cyclic_classes, 1u);

  auto s4 = psi_rank(parse_group("S4"), 2);
  EXPECT_EQ(s4.rank, 2u);
  EXPECT_EQ(s4.cyclic_classes, 2u);
}

TEST(PsiRank, EntriesMatchCosetCountingAndRankEquality) {
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u, 5u}) {
      auto r = psi_rank(g, p);
      EXPECT_TRUE(r.holds()) << d << " p=" << p << ": rank " << r.rank << " vs " << r.cyclic_classes;
      if (g.order() > 60) continue;
      for (std::size_t i = 0; i < r.matrix.rows.size(); ++i) {
        EXPECT_EQ(r.matrix.entries[i][0], g.order() / r.matrix.rows[i].order());
        for (std::size_t j = 0; j < r.matrix.columns.size(); ++j)
          EXPECT_EQ(r.matrix.entries[i][j], fixed_cosets(g, r.matrix.rows[i], r.matrix.columns[j])) << d;
      }
    }
  }
}

TEST(RationalRank, Examples) {
  EXPECT_EQ(rational_rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rational_rank({{6, 0}, {3, 1}}), 2u);
  EXPECT_EQ(rational_rank({}), 0u);
}
