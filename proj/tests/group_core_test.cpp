#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "stabletype/descriptor.hpp"
#include "stabletype/error.hpp"
#include "stabletype/finite_group.hpp"
#include "stabletype/limits.hpp"
#include "stabletype/named.hpp"

using namespace stabletype;

namespace {

Permutation cyc(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

Subgroup sub(const FiniteGroup& g, std::vector<Permutation> gens) {
  std::vector<Elem> idx;
  for (auto& p : gens) idx.push_back(g.index_of(p));
  return Subgroup::generated_by(g, idx);
}

bool is_hom(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Elem>& map) {
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

std::vector<std::size_t> sorted_class_sizes(const FiniteGroup& g) {
  auto sizes = g.classes().class_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation({0, 3}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 1, 0}}), InvalidPermutation);
}

TEST(Permutation, CycleTypeAndOrder) {
  auto p = cyc(6, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.to_string(), "(1 2 3)(4 5)");
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(CloseGenerators, MatchesBruteForceClosure) {
  struct Case {
    std::vector<Permutation> gens;
    std::size_t degree;
    std::size_t order;
  };
  std::vector<Case> cases = {
      {{cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}, 3, 6},
      {{}, 1, 1},
      {{cyc(4, {{0, 1, 2, 3}})}, 4, 4},
  };
  for (const auto& c : cases) {
    FiniteGroup g = close_generators(c.gens, c.degree);
    auto expected = oracle::closure(c.gens, c.degree);
    EXPECT_EQ(g.order(), c.order);
    EXPECT_EQ(g.elements(), expected);
  }
}

TEST(CloseGenerators, Errors) {
  EXPECT_THROW(close_generators({cyc(3, {{0, 1}})}, 4), InvalidPermutation);
  ScopedLimits small({100, 50});
  EXPECT_THROW(make_named(NamedFamily::Symmetric, 5), CapExceeded);
}

TEST(MakeNamed, DihedralSixIsSymmetricThree) {
  FiniteGroup d6 = make_named(NamedFamily::Dihedral, 6);
  EXPECT_EQ(d6.order(), 6u);
  EXPECT_EQ(d6.classes().size(), 3u);
  EXPECT_TRUE(is_isomorphic(d6, make_named(NamedFamily::Symmetric, 3)).has_value());
}

TEST(MakeNamed, QuaternionTwelveHasUniqueInvolution) {
  FiniteGroup q = make_named(NamedFamily::Quaternion, 12);
  EXPECT_EQ(q.order(), 12u);
  std::size_t involutions = 0;
  for (Elem x = 0; x < q.order(); ++x)
    if (q.element_order(x) == 2) ++involutions;
  EXPECT_EQ(involutions, 1u);
  EXPECT_FALSE(q.is_abelian());
}

TEST(MakeNamed, HeisenbergThree) {
  FiniteGroup h = make_named(NamedFamily::Heisenberg, 3);
  EXPECT_EQ(h.order(), 27u);
  EXPECT_EQ(h.degree(), 27u);
  for (Elem x = 0; x < h.order(); ++x) EXPECT_EQ(3 % h.element_order(x), 0u);
  EXPECT_FALSE(h.is_abelian());
}

TEST(MakeNamed, BadParameters) {
  EXPECT_THROW(make_named(NamedFamily::Dihedral, 5), BadParameter);
  EXPECT_THROW(make_named(NamedFamily::Quaternion, 10), BadParameter);
  EXPECT_THROW(make_named(NamedFamily::Quaternion, 4), BadParameter);
  EXPECT_THROW(make_named(NamedFamily::Heisenberg, 2), BadParameter);
  EXPECT_THROW(make_named(NamedFamily::ElementaryAbelian, 4, 2), BadParameter);
}

TEST(DirectProduct, Examples) {
  FiniteGroup c2 = make_named(NamedFamily::Cyclic, 2);
  FiniteGroup v4 = direct_product(c2, c2);
  EXPECT_EQ(v4.order(), 4u);
  for (Elem x = 0; x < v4.order(); ++x) EXPECT_LE(v4.element_order(x), 2u);

  FiniteGroup q12c2 = direct_product(make_named(NamedFamily::Quaternion, 12), c2);
  EXPECT_EQ(q12c2.order(), 24u);

  FiniteGroup s3 = make_named(NamedFamily::Symmetric, 3);
  EXPECT_TRUE(is_isomorphic(direct_product(s3, FiniteGroup{}), s3).has_value());
}

TEST(ConjugacyClasses, Examples) {
  FiniteGroup s3 = parse_group("S3");
  EXPECT_EQ(s3.classes().class_sizes, (std::vector<std::size_t>{1, 3, 2}));
  FiniteGroup c4 = parse_group("C4");
  EXPECT_EQ(c4.classes().class_sizes, (std::vector<std::size_t>{1, 1, 1, 1}));
  FiniteGroup q8 = parse_group("Q8");
  EXPECT_EQ(sorted_class_sizes(q8), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(ConjugacyClasses, AgreeWithBruteForceAndClassEquation) {
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    const auto& t = g.classes();
    EXPECT_EQ(std::accumulate(t.class_sizes.begin(), t.class_sizes.end(), std::size_t{0}), g.order()) << d;
    if (g.order() <= 60) {
      EXPECT_EQ(sorted_class_sizes(g), oracle::class_sizes(g.elements())) << d;
    }
    for (std::size_t c = 0; c < t.size(); ++c) {
      EXPECT_EQ(t.representatives[c], t.members[c].front());
      for (Elem x : t.members[c]) {
        EXPECT_EQ(g.element(x).cycle_type(), g.element(t.representatives[c]).cycle_type()) << d;
        EXPECT_EQ(g.element_order(x), g.element_order(t.representatives[c])) << d;
      }
    }
  }
}

TEST(CentralizerNormalizer, Examples) {
  FiniteGroup s3 = parse_group("S3");
  Subgroup a3 = sub(s3, {cyc(3, {{0, 1, 2}})});
  EXPECT_EQ(centralizer(s3, a3), a3);
  Subgroup t = sub(s3, {cyc(3, {{0, 1}})});
  EXPECT_EQ(normalizer(s3, t), t);
  EXPECT_EQ(centralizer(s3, Subgroup::trivial(s3)), Subgroup::whole(s3));
  Subgroup n = normalizer(s3, a3);
  EXPECT_TRUE(n.contains(centralizer(s3, a3)));
}

TEST(Quotient, Examples) {
  FiniteGroup s3 = parse_group("S3");
  Subgroup a3 = sub(s3, {cyc(3, {{0, 1, 2}})});
  EXPECT_EQ(quotient(s3, a3).group.order(), 2u);
  EXPECT_EQ(quotient(s3, Subgroup::whole(s3)).group.order(), 1u);

  FiniteGroup q12 = parse_group("Q12");
  Subgroup z = center(q12);
  ASSERT_EQ(z.order(), 2u);
  FiniteGroup q = quotient(q12, z).group;
  EXPECT_EQ(q.order(), 6u);
  EXPECT_FALSE(q.is_abelian());
  EXPECT_TRUE(is_isomorphic(q, s3).has_value());
}

TEST(Quotient, RejectsNonNormal) {
  FiniteGroup s3 = parse_group("S3");
  EXPECT_THROW(quotient(s3, sub(s3, {cyc(3, {{0, 1}})})), NotNormal);
}

TEST(Quotient, ProjectionIsSurjectiveHomWithKernelN) {
  for (const auto& d : testcorpus::small_descriptors()) {
    FiniteGroup g = parse_group(d);
    std::vector<Subgroup> normals = {Subgroup::trivial(g), center(g), Subgroup::whole(g)};
    for (unsigned p : {2u, 3u}) normals.push_back(o_p_prime(g, p));
    for (const auto& n : normals) {
      Quotient q = quotient(g, n);
      EXPECT_EQ(q.group.order() * n.order(), g.order());
      EXPECT_TRUE(is_hom(g, q.group, q.projection)) << d;
      std::vector<bool> hit(q.group.order(), false);
      for (Elem x = 0; x < g.order(); ++x) {
        hit[q.projection[x]] = true;
        EXPECT_EQ(q.projection[x] == q.group.identity(), n.contains(x));
      }
      EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST(Sylow, Examples) {
  FiniteGroup s4 = parse_group("S4");
  Subgroup p = sylow(s4, 2);
  EXPECT_EQ(p.order(), 8u);
  EXPECT_TRUE(is_isomorphic(p.as_group(), parse_group("D8")).has_value());

  FiniteGroup a4 = parse_group("A4");
  Subgroup v = sylow(a4, 2);
  EXPECT_EQ(v.order(), 4u);
  EXPECT_TRUE(is_normal(v));

  EXPECT_EQ(sylow(parse_group("S3"), 5).order(), 1u);
  EXPECT_THROW(sylow(s4, 4), BadPrime);
}

TEST(Sylow, FullPartAndConjugatesAreSylow) {
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u, 5u}) {
      Subgroup s = sylow(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p)) << d << " p=" << p;
      EXPECT_TRUE(is_p_power(s.order(), p));
      for (Elem x : g.generator_indices()) EXPECT_EQ(conjugate(s, x).order(), s.order());
    }
  }
}

TEST(OPPrime, Examples) {
  EXPECT_EQ(o_p_prime(parse_group("C6"), 2).order(), 3u);
  EXPECT_EQ(o_p_prime(parse_group("S3"), 3).order(), 1u);
  EXPECT_EQ(o_p_prime(parse_group("D8"), 2).order(), 1u);
  EXPECT_EQ(o_p_prime(parse_group("Q12 x C2"), 3).order(), 4u);
  EXPECT_EQ(o_p_prime(parse_group("D6 x C4"), 3).order(), 4u);
}

TEST(ReduceModP, Examples) {
  FiniteGroup c2 = parse_group("C2");
  EXPECT_TRUE(is_isomorphic(reduce_mod_p(parse_group("C6"), 2), c2).has_value());
  EXPECT_TRUE(is_isomorphic(reduce_mod_p(parse_group("S3"), 2), c2).has_value());
  FiniteGroup s3 = parse_group("S3");
  EXPECT_TRUE(reduce_mod_p(s3, 3).same_as(s3));
}

TEST(ReduceModP, IdempotentUpToIsomorphism) {
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    for (unsigned p : {2u, 3u}) {
      FiniteGroup r = reduce_mod_p(g, p);
      EXPECT_EQ(o_p_prime(r, p).order(), 1u) << d;
      EXPECT_TRUE(is_isomorphic(reduce_mod_p(r, p), r).has_value()) << d;
    }
  }
}

TEST(IsIsomorphic, Examples) {
  auto s3 = parse_group("S3");
  auto d6 = parse_group("D6");
  auto iso = is_isomorphic(s3, d6);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_hom(s3, d6, *iso));
  EXPECT_FALSE(is_isomorphic(parse_group("C4"), parse_group("C2 x C2")).has_value());
  EXPECT_FALSE(is_isomorphic(parse_group("D8"), parse_group("Q8")).has_value());
  EXPECT_FALSE(is_isomorphic(parse_group("E3^3"), parse_group("H3")).has_value());
}

TEST(IsIsomorphic, ReflexiveSymmetricAndHomomorphic) {
  const auto& ds = testcorpus::small_descriptors();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    FiniteGroup g = parse_group(ds[i]);
    auto self = is_isomorphic(g, g);
    ASSERT_TRUE(self.has_value()) << ds[i];
    EXPECT_TRUE(is_hom(g, g, *self));
    for (std::size_t j = 0; j < ds.size(); ++j) {
      FiniteGroup h = parse_group(ds[j]);
      auto ab = is_isomorphic(g, h);
      auto ba = is_isomorphic(h, g);
      EXPECT_EQ(ab.has_value(), ba.has_value()) << ds[i] << " vs " << ds[j];
      if (ab) {
        EXPECT_TRUE(is_hom(g, h, *ab));
        std::vector<Elem> sorted = *ab;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      }
    }
  }
}

TEST(IsIsomorphic, RealizationIndependent) {
  // Same abstract group, different permutation realizations.
  EXPECT_TRUE(is_isomorphic(parse_group("D4"), parse_group("C2 x C2")).has_value());
  EXPECT_TRUE(is_isomorphic(parse_group("E2^2"), parse_group("C2 x C2")).has_value());
  EXPECT_TRUE(is_isomorphic(parse_group("C6"), parse_group("C2 x C3")).has_value());
  EXPECT_TRUE(is_isomorphic(regular_representation(parse_group("S4")), parse_group("S4")).has_value());
  EXPECT_TRUE(is_isomorphic(parse_group("perm{(1 2 3 4 5),(2 5)(3 4)}"), parse_group("D10")).has_value());
}

TEST(Describe, RecognizesCommonGroups) {
  EXPECT_EQ(describe(parse_group("D6")), "S3");
  EXPECT_EQ(describe(parse_group("C2 x C2")), "C2 x C2");
  EXPECT_EQ(describe(parse_group("C4 x C2 x C3")), "C12 x C2");
  EXPECT_EQ(describe(parse_group("A4")), "A4");
  EXPECT_EQ(describe(parse_group("Q12 x C2")), "Q12 x C2");
  EXPECT_EQ(describe(parse_group("D6 x C4")), "S3 x C4");
  EXPECT_EQ(describe(parse_group("C1")), "C1");
  // Whatever describe returns must parse back to an isomorphic group.
  for (const auto& d : testcorpus::descriptors()) {
    FiniteGroup g = parse_group(d);
    EXPECT_TRUE(is_isomorphic(parse_group(describe(g)), g).has_value()) << d << " -> " << describe(g);
  }
}

TEST(Descriptor, ParsesGrammar) {
  EXPECT_EQ(parse_group("perm{(1 2 3),(1 2)}").order(), 6u);
  EXPECT_EQ(parse_group("  Q12x C2 ").order(), 24u);
  EXPECT_EQ(parse_group("E2^3").order(), 8u);
  EXPECT_EQ(parse_group("perm{(1 2)(3 4),(1 3)(2 4)}").order(), 4u);
  EXPECT_EQ(parse_group("perm{}").order(), 1u);
}

TEST(Descriptor, ReportsErrorPosition) {
  try {
    parse_group("S3 x Z4");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_group(""), ParseError);
  EXPECT_THROW(parse_group("S3 C2"), ParseError);
  EXPECT_THROW(parse_group("D7"), ParseError);
  EXPECT_THROW(parse_group("perm{(1 2 1)}"), ParseError);
  EXPECT_THROW(parse_group("perm{(0 1)}"), ParseError);
  EXPECT_THROW(parse_group("E2^"), ParseError);
}
