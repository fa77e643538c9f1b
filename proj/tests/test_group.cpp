#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "acdlab/chartab.hpp"
#include "acdlab/constructions.hpp"
#include "acdlab/errors.hpp"
#include "acdlab/group.hpp"
#include "oracles.hpp"

using namespace acdlab;

namespace {

FiniteGroup group_of(const std::string& spec) { return build(parse_group_spec(spec)); }

ElementIndex idx(const FiniteGroup& g, const std::string& cycles) {
  return *g.index_of(Perm::parse_cycles(g.degree(), cycles));
}

std::multiset<std::size_t> class_sizes(const ClassData& c) { return {c.sizes.begin(), c.sizes.end()}; }

}  // namespace

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0}), InputError);
  EXPECT_THROW(Perm(std::vector<Point>{0, 2}), InputError);
}

TEST(Perm, ComposesLeftToRight) {
  const Perm a = Perm::parse_cycles(3, "(0 1)");
  const Perm b = Perm::parse_cycles(3, "(1 2)");
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(Perm::parse_cycles(4, "(0,1)(2,3)").to_cycle_string(), "(0,1)(2,3)");
  EXPECT_EQ(Perm::identity(3).to_cycle_string(), "()");
}

TEST(GenerateGroup, SpecExamples) {
  EXPECT_EQ(generate_group({}, 1).order(), 1u);
  EXPECT_EQ(generate_group({Perm::parse_cycles(3, "(0 1)"), Perm::parse_cycles(3, "(0 1 2)")}).order(), 6u);
  const auto c5 = generate_group({Perm::parse_cycles(5, "(0 1 2 3 4)")});
  EXPECT_EQ(c5.order(), 5u);
  EXPECT_TRUE(is_abelian(c5));
}

TEST(GenerateGroup, Errors) {
  EXPECT_THROW(generate_group({Perm::identity(2), Perm::identity(3)}), InputError);
  EXPECT_THROW(generate_group({Perm::parse_cycles(3, "(0 1)")}, 4), InputError);
  const std::vector<Perm> s6{Perm::parse_cycles(6, "(0 1)"), Perm::parse_cycles(6, "(0 1 2 3 4 5)")};
  EXPECT_THROW(generate_group(s6, 6, 100), SizeLimitError);
  EXPECT_EQ(generate_group(s6, 6, 720).order(), 720u);
}

TEST(GenerateGroup, DeterministicAndIndependentOfGeneratorOrder) {
  const Perm t = Perm::parse_cycles(4, "(0 1)");
  const Perm c = Perm::parse_cycles(4, "(0 1 2 3)");
  const auto g1 = generate_group({t, c});
  const auto g2 = generate_group({c, t, c});
  EXPECT_EQ(g1.elements(), g2.elements());
  EXPECT_EQ(g1.element(FiniteGroup::identity()), Perm::identity(4));
}

TEST(GenerateGroup, WordsReachTheirElements) {
  const auto g = group_of("S(4)");
  for (ElementIndex i = 0; i < g.order(); ++i) {
    Perm x = Perm::identity(g.degree());
    for (auto w : g.word(i)) x = x * g.element(g.generators()[w]);
    EXPECT_EQ(x, g.element(i));
  }
}

TEST(GenerateGroup, MultiplicationTableMatchesPermutations) {
  const auto g = group_of("D(10)*C(3)");
  for (ElementIndex a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.inv(a), *g.index_of(g.element(a).inverse()));
    for (ElementIndex b = 0; b < g.order(); b += 7) EXPECT_EQ(g.mul(a, b), oracle::product(g, a, b));
  }
  const ElementIndex x = 5;
  EXPECT_EQ(g.pow(x, -1), g.inv(x));
  EXPECT_EQ(g.pow(x, 0), FiniteGroup::identity());
  EXPECT_EQ(g.conj(x, 3), g.mul(g.mul(g.inv(3), x), 3));
}

TEST(ElementOrder, SpecExamples) {
  const auto s3 = group_of("S(3)");
  EXPECT_EQ(element_order(s3, FiniteGroup::identity()), 1u);
  EXPECT_EQ(element_order(s3, idx(s3, "(0 1 2)")), 3u);
  const auto s4 = group_of("S(4)");
  EXPECT_EQ(element_order(s4, idx(s4, "(0 1)(2 3)")), 2u);
  for (ElementIndex i = 0; i < s4.order(); ++i) EXPECT_EQ(element_order(s4, i), oracle::order_of(s4, i));
}

TEST(Exponent, SpecExamples) {
  EXPECT_EQ(exponent(group_of("C(4)")), 4u);
  EXPECT_EQ(exponent(group_of("S(3)")), 6u);
  EXPECT_EQ(exponent(group_of("A(4)")), 6u);
  const auto g = group_of("F(7,3)");
  EXPECT_EQ(g.order() % exponent(g), 0u);
}

TEST(ConjugacyClasses, SpecExamples) {
  EXPECT_EQ(conjugacy_classes(group_of("C(6)")).num_classes, 6u);
  EXPECT_EQ(class_sizes(conjugacy_classes(group_of("S(3)"))), (std::multiset<std::size_t>{1, 3, 2}));
  EXPECT_EQ(class_sizes(conjugacy_classes(group_of("S(4)"))), (std::multiset<std::size_t>{1, 6, 3, 8, 6}));
}

TEST(ConjugacyClasses, InvariantsAgainstBruteForce) {
  for (const char* spec : {"S(4)", "A(5)", "Q(8)", "F(7,3)", "D(12)", "C(2)*S(3)", "SD(2,2,3)"}) {
    const auto g = group_of(spec);
    const auto c = conjugacy_classes(g);
    const auto brute = oracle::classes(g);
    EXPECT_EQ(c.num_classes, brute.size()) << spec;
    EXPECT_EQ(std::accumulate(c.sizes.begin(), c.sizes.end(), std::size_t{0}), g.order());
    EXPECT_EQ(c.reps[0], FiniteGroup::identity());
    EXPECT_EQ(c.sizes[0], 1u);
    for (std::size_t k = 0; k < c.num_classes; ++k) {
      EXPECT_EQ(c.class_of[c.reps[k]], k);
      EXPECT_EQ(c.rep_orders[k], g.element_order(c.reps[k]));
      EXPECT_EQ(c.class_of[g.inv(c.reps[k])], c.inverse_class[k]);
      if (k > 0) {
        EXPECT_LT(c.members[k - 1].front(), c.members[k].front()) << "classes ordered by minimal element";
      }
    }
    for (ElementIndex x = 0; x < g.order(); ++x)
      for (ElementIndex h = 0; h < g.order(); h += 3) EXPECT_EQ(c.class_of[g.conj(h, x)], c.class_of[h]);
  }
}

TEST(PowerMap, SpecExamples) {
  const auto s3 = group_of("S(3)");
  const auto cs3 = conjugacy_classes(s3);
  std::vector<std::size_t> id(cs3.num_classes);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(power_map(s3, cs3, 1), id);
  EXPECT_EQ(power_map(s3, cs3, -1), id);

  const auto c5 = group_of("C(5)");
  const auto cc5 = conjugacy_classes(c5);
  const auto sq = power_map(c5, cc5, 2);
  EXPECT_EQ(sq[0], 0u);
  // a single 4-cycle on the nonidentity classes
  std::size_t x = 1, steps = 0;
  do {
    x = sq[x];
    ++steps;
  } while (x != 1);
  EXPECT_EQ(steps, 4u);
}

TEST(PowerMap, ComposesMultiplicatively) {
  for (const char* spec : {"A(5)", "F(13,4)", "Q(8)*C(3)"}) {
    const auto g = group_of(spec);
    const auto c = conjugacy_classes(g);
    const auto e = static_cast<long long>(exponent(g));
    for (long long k = 1; k < e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      for (long long k2 : {-1LL, 2LL, 5LL, 7LL}) {
        if (std::gcd(k2, e) != 1) continue;
        const auto pk = power_map(g, c, k);
        const auto pk2 = power_map(g, c, k2);
        const auto pkk = power_map(g, c, k * k2);
        for (std::size_t i = 0; i < c.num_classes; ++i) EXPECT_EQ(pk[pk2[i]], pkk[i]) << spec;
      }
    }
  }
}

TEST(DerivedSubgroup, SpecExamples) {
  EXPECT_TRUE(derived_subgroup(group_of("C(12)")).is_trivial());
  const auto s3 = group_of("S(3)");
  EXPECT_EQ(derived_subgroup(s3).order(), 3u);
  const auto s4 = group_of("S(4)");
  const auto d = derived_subgroup(s4);
  EXPECT_EQ(d.order(), 12u);
  EXPECT_TRUE(is_normal(s4, d));
}

TEST(DerivedSubgroup, IndexEqualsLinearCharacterCount) {
  for (const auto& s : default_catalog()) {
    const auto g = build(s);
    if (g.order() > 400) continue;
    const auto t = character_table(g);
    const auto linear = std::count(t.degrees.begin(), t.degrees.end(), 1u);
    EXPECT_EQ(g.order() / derived_subgroup(g).order(), static_cast<std::size_t>(linear)) << to_string(s);
  }
}

TEST(IsSolvable, SpecExamples) {
  EXPECT_TRUE(is_solvable(group_of("C(7)")));
  EXPECT_TRUE(is_solvable(group_of("S(4)")));
  EXPECT_FALSE(is_solvable(group_of("A(5)")));
  EXPECT_FALSE(is_solvable(group_of("S(5)")));
}

TEST(NormalClosure, SpecExamples) {
  const auto s3 = group_of("S(3)");
  const ElementIndex id[] = {FiniteGroup::identity()};
  EXPECT_TRUE(normal_closure(s3, id).is_trivial());
  const ElementIndex t[] = {idx(s3, "(0 1)")};
  EXPECT_EQ(normal_closure(s3, t).order(), 6u);
  const auto s4 = group_of("S(4)");
  const ElementIndex v[] = {idx(s4, "(0 1)(2 3)")};
  EXPECT_EQ(normal_closure(s4, v).order(), 4u);
}

TEST(MinimalNormalSubgroups, SpecExamples) {
  const auto s3 = minimal_normal_subgroups(group_of("S(3)"));
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_EQ(s3[0].order(), 3u);
  const auto c6 = minimal_normal_subgroups(group_of("C(6)"));
  ASSERT_EQ(c6.size(), 2u);
  EXPECT_EQ(c6[0].order(), 2u);
  EXPECT_EQ(c6[1].order(), 3u);
  const auto s4 = minimal_normal_subgroups(group_of("S(4)"));
  ASSERT_EQ(s4.size(), 1u);
  EXPECT_EQ(s4[0].order(), 4u);
  EXPECT_THROW(minimal_normal_subgroups(group_of("C(1)")), DomainError);
}

TEST(MinimalNormalSubgroups, AgreeWithNormalLatticeOracle) {
  for (const char* spec : {"C(2)*S(3)", "Q(8)", "D(8)", "C(3)*D(10)", "A(4)", "C(30)", "MAT(3;[[0,1],[1,0]],[[-1,0],[0,1]])"}) {
    const auto g = group_of(spec);
    const auto lattice = oracle::normal_subgroups(g);
    std::vector<std::set<ElementIndex>> minimal;
    for (const auto& n : lattice) {
      if (n.size() == 1) continue;
      const bool is_min = std::none_of(lattice.begin(), lattice.end(), [&](const auto& m) {
        return m.size() > 1 && m.size() < n.size() && std::includes(n.begin(), n.end(), m.begin(), m.end());
      });
      if (is_min) minimal.push_back(n);
    }
    const auto got = minimal_normal_subgroups(g);
    ASSERT_EQ(got.size(), minimal.size()) << spec;
    for (const auto& h : got) {
      const std::set<ElementIndex> hs(h.members.begin(), h.members.end());
      EXPECT_NE(std::find(minimal.begin(), minimal.end(), hs), minimal.end()) << spec;
    }
  }
}

TEST(MinimalNormalSubgroups, ElementaryAbelianInSolvableCatalogGroups) {
  for (const auto& s : default_catalog()) {
    const auto g = build(s);
    if (g.order() == 1 || !is_solvable(g)) continue;
    for (const auto& n : minimal_normal_subgroups(g)) {
      const auto primes = prime_divisors(n.order());
      ASSERT_EQ(primes.size(), 1u) << to_string(s);
      for (auto x : n.members)
        if (x != FiniteGroup::identity()) EXPECT_EQ(g.element_order(x), primes[0]) << to_string(s);
    }
  }
}

TEST(SubgroupIntersection, SpecExamples) {
  const auto c6 = group_of("C(6)");
  const auto mins = minimal_normal_subgroups(c6);
  EXPECT_EQ(subgroup_intersection(mins[0], mins[0]), mins[0]);
  EXPECT_TRUE(subgroup_intersection(mins[0], mins[1]).is_trivial());

  const auto g = group_of("C(2)*S(3)");
  const auto z = center(g);
  ASSERT_EQ(z.order(), 2u);
  const auto d = derived_subgroup(g);
  ASSERT_EQ(d.order(), 3u);
  EXPECT_TRUE(subgroup_intersection(z, d).is_trivial());

  EXPECT_THROW(subgroup_intersection(z, whole_group(c6)), InputError);
}

TEST(SubgroupFromMembers, RejectsNonSubgroups) {
  const auto s3 = group_of("S(3)");
  EXPECT_THROW(subgroup_from_members(s3, {0, idx(s3, "(0 1 2)")}), InputError);
  EXPECT_EQ(subgroup_from_members(s3, {0, idx(s3, "(0 1)")}).order(), 2u);
}

TEST(PNilpotence, SpecExamples) {
  for (auto p : {2u, 3u, 5u}) EXPECT_TRUE(is_p_nilpotent(group_of("C(30)"), p).p_nilpotent);
  const auto s3 = group_of("S(3)");
  const auto r2 = is_p_nilpotent(s3, 2);
  EXPECT_TRUE(r2.p_nilpotent);
  ASSERT_TRUE(r2.complement.has_value());
  EXPECT_EQ(r2.complement->order(), 3u);
  EXPECT_TRUE(is_normal(s3, *r2.complement));
  EXPECT_FALSE(is_p_nilpotent(s3, 3).p_nilpotent);
  EXPECT_THROW(is_p_nilpotent(s3, 4), InputError);
}

TEST(PNilpotence, AgreesWithNormalSubgroupOracle) {
  for (const char* spec : {"S(4)", "A(4)", "Q(8)", "D(20)", "F(7,3)", "C(2)*S(3)", "SD(3,2,8)", "A(5)"}) {
    const auto g = group_of(spec);
    for (auto p : prime_divisors(g.order()))
      EXPECT_EQ(is_p_nilpotent(g, p).p_nilpotent, oracle::p_nilpotent(g, p)) << spec << " p=" << p;
  }
}
