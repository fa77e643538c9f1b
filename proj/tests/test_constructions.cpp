#include <gtest/gtest.h>

#include "acdlab/chartab.hpp"
#include "acdlab/constructions.hpp"
#include "acdlab/errors.hpp"

using namespace acdlab;

namespace {

std::size_t offset_of(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST(Build, NamedFamilies) {
  EXPECT_EQ(build(GroupSpec::cyclic(1)).order(), 1u);
  EXPECT_EQ(build(GroupSpec::cyclic(12)).order(), 12u);
  EXPECT_EQ(build(GroupSpec::dihedral(2)).order(), 2u);
  EXPECT_EQ(build(GroupSpec::dihedral(4)).order(), 4u);
  EXPECT_TRUE(is_abelian(build(GroupSpec::dihedral(4))));
  EXPECT_EQ(build(GroupSpec::dihedral(50)).order(), 50u);
  EXPECT_EQ(build(GroupSpec::symmetric(5)).order(), 120u);
  EXPECT_EQ(build(GroupSpec::alternating(4)).order(), 12u);
  EXPECT_EQ(build(GroupSpec::alternating(6)).order(), 360u);
  const auto q8 = build(GroupSpec::dicyclic(8));
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(center(q8).order(), 2u);
  // Q8 has a single involution
  std::size_t involutions = 0;
  for (ElementIndex i = 0; i < q8.order(); ++i) involutions += q8.element_order(i) == 2;
  EXPECT_EQ(involutions, 1u);
}

TEST(Build, FieldSemidirectExamples) {
  const auto f21 = build(GroupSpec::field_semidirect(7, 1, 3));
  EXPECT_EQ(f21.order(), 21u);
  EXPECT_FALSE(is_abelian(f21));
  EXPECT_EQ(conjugacy_classes(f21).num_classes, 5u);
  const auto f20 = build(GroupSpec::field_semidirect(5, 1, 4));
  EXPECT_EQ(f20.order(), 20u);
  EXPECT_EQ(conjugacy_classes(f20).num_classes, 5u);
  for (auto [p, a] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}}) {
    const auto g = build(GroupSpec::field_semidirect(p, a, 1));
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) q *= p;
    EXPECT_EQ(g.order(), q);
    EXPECT_TRUE(is_abelian(g));
    for (ElementIndex i = 1; i < g.order(); ++i) EXPECT_EQ(g.element_order(i), p);
  }
}

TEST(Build, FieldSemidirectStructureOnCatalog) {
  for (const auto& s : default_catalog()) {
    const auto* f = std::get_if<spec::FieldSemidirect>(&s.kind);
    if (!f) continue;
    const auto g = build(s);
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < f->a; ++i) q *= f->p;
    ASSERT_EQ(g.order(), f->d * q) << to_string(s);
    if (f->d == 1) continue;
    const auto aff = affine_structure(g);
    ASSERT_TRUE(aff.has_value()) << to_string(s);
    EXPECT_EQ(aff->p, f->p);
    EXPECT_EQ(aff->module.order(), q);
    EXPECT_EQ(aff->complement.order(), f->d);
    EXPECT_FALSE(is_p_nilpotent(g, f->p).p_nilpotent) << to_string(s);
    for (auto r : prime_divisors(f->d)) EXPECT_TRUE(is_p_nilpotent(g, r).p_nilpotent) << to_string(s);
  }
}

TEST(Build, MatrixFixtures) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"MAT(5;[[0,1],[1,0]],[[0,-1],[1,-1]])", 150},   // S3 on F_5^2
      {"MAT(7;[[0,1],[1,0]],[[0,-1],[1,-1]])", 294},   // S3 on F_7^2
      {"MAT(2;[[0,1],[1,1]])", 12},                     // A4
      {"MAT(2;[[0,1],[1,0]],[[0,1],[1,1]])", 24},       // S4
      {"MAT(3;[[0,-1],[1,0]],[[1,1],[1,-1]])", 72},     // Q8 on F_3^2
      {"MAT(3;[[0,1],[1,0]],[[-1,0],[0,1]])", 72},      // D8 on F_3^2
  };
  for (const auto& [text, order] : cases) {
    const auto g = build(parse_group_spec(text));
    EXPECT_EQ(g.order(), order) << text;
    const auto aff = affine_structure(g);
    ASSERT_TRUE(aff.has_value()) << text << ": module must be irreducible and faithful";
    EXPECT_EQ(aff->module.order() * aff->complement.order(), order);
  }
  const auto g72 = build(parse_group_spec(cases[4].first));
  const auto q8 = as_group(g72, affine_structure(g72)->complement);
  EXPECT_EQ(conjugacy_classes(q8).num_classes, 5u);
  EXPECT_EQ(center(q8).order(), 2u);
}

TEST(Build, SymmetricFourIsAffine) {
  const auto g = build(GroupSpec::symmetric(4));
  const auto aff = affine_structure(g);
  ASSERT_TRUE(aff.has_value());
  EXPECT_EQ(aff->p, 2u);
  EXPECT_EQ(aff->module.order(), 4u);
  EXPECT_EQ(aff->complement.order(), 6u);
  EXPECT_FALSE(affine_structure(build(GroupSpec::cyclic(6))).has_value());
  EXPECT_FALSE(affine_structure(build(GroupSpec::dihedral(12))).has_value());
}

TEST(Build, DirectProducts) {
  const auto g = build(parse_group_spec("C(2)*S(3)"));
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.degree(), 5u);
  EXPECT_EQ(center(g).order(), 2u);
  EXPECT_EQ(build(parse_group_spec("C(3)*D(10)")).order(), 30u);
  EXPECT_EQ(build(parse_group_spec("C(2)*C(2)*C(2)")).order(), 8u);
}

TEST(Build, SameSpecSameElementOrder) {
  for (const char* s : {"SD(2,3,7)", "MAT(3;[[0,-1],[1,0]],[[1,1],[1,-1]])", "C(2)*S(3)"}) {
    EXPECT_EQ(build(parse_group_spec(s)).elements(), build(parse_group_spec(s)).elements());
  }
}

TEST(Build, ValidationErrors) {
  EXPECT_THROW(build(GroupSpec::field_semidirect(7, 1, 4)), ConstructionError);   // 4 does not divide 6
}

TEST(Dihedral, SpecExamples) {
  for (auto [p, classes] : {std::pair{3u, 3u}, {5u, 4u}, {7u, 5u}}) {
    const auto g = dihedral(p);
    EXPECT_EQ(g.order(), 2u * p);
    EXPECT_EQ(conjugacy_classes(g).num_classes, classes);
    EXPECT_EQ(classes, (p + 3) / 2);
    const auto t = character_table(g);
    EXPECT_EQ(std::count(t.degrees.begin(), t.degrees.end(), 1u), 2);
    EXPECT_EQ(std::count(t.degrees.begin(), t.degrees.end(), 2u), static_cast<long>((p - 1) / 2));
  }
  EXPECT_THROW(dihedral(2), InputError);
  EXPECT_THROW(dihedral(9), InputError);
}

TEST(DefaultCatalog, Contents) {
  const auto cat = default_catalog();
  auto has = [&](const std::string& s) {
    return std::any_of(cat.begin(), cat.end(), [&](const GroupSpec& g) { return to_string(g) == s; });
  };
  for (const char* s : {"S(4)", "F(7,3)", "A(5)", "C(60)", "D(50)", "Q(8)", "C(2)*S(3)", "C(3)*D(10)",
                        "SD(2,2,3)", "SD(5,3,124)", "F(113,112)", "MAT(2;[[0,1],[1,1]])"})
    EXPECT_TRUE(has(s)) << s;
  EXPECT_FALSE(has("S(6)"));
  EXPECT_FALSE(has("A(6)"));
  EXPECT_EQ(cat, default_catalog());
  for (const auto& s : cat) {
    EXPECT_NO_THROW(validate(s)) << to_string(s);
    EXPECT_EQ(parse_group_spec(to_string(s)), s);
  }
}

TEST(DefaultCatalog, OddOrderMembersAreSolvable) {
  for (const auto& s : default_catalog()) {
    const auto g = build(s);
    if (g.order() % 2 == 1) EXPECT_TRUE(is_solvable(g)) << to_string(s);
  }
}

TEST(DefaultCatalog, FieldSemidirectCoverage) {
  // every (p, a, d) with p^a <= 125, d | p^a - 1 and ord_d(p) = a
  std::size_t expected = 0;
  for (std::uint64_t q = 2; q <= 125; ++q) {
    const auto pd = prime_divisors(q);
    if (pd.size() != 1) continue;
    std::uint64_t a = 0;
    for (auto t = q; t > 1; t /= pd[0]) ++a;
    for (std::uint64_t d = 1; d < q; ++d)
      if ((q - 1) % d == 0 && (d == 1 || multiplicative_order(pd[0], d) == a)) ++expected;
  }
  std::size_t got = 0;
  for (const auto& s : default_catalog()) got += std::holds_alternative<spec::FieldSemidirect>(s.kind);
  EXPECT_EQ(got, expected);
}

TEST(ParseGroupSpec, SpecExamples) {
  const auto d14 = parse_group_spec("D(14)");
  ASSERT_TRUE(std::holds_alternative<spec::Dihedral>(d14.kind));
  EXPECT_EQ(std::get<spec::Dihedral>(d14.kind).order, 14u);
  const auto f = parse_group_spec("F(7,3)");
  ASSERT_TRUE(std::holds_alternative<spec::FieldSemidirect>(f.kind));
  EXPECT_EQ(std::get<spec::FieldSemidirect>(f.kind).p, 7u);
  EXPECT_EQ(std::get<spec::FieldSemidirect>(f.kind).a, 1u);
  EXPECT_EQ(std::get<spec::FieldSemidirect>(f.kind).d, 3u);
  const auto prod = parse_group_spec("C(2)*S(3)");
  ASSERT_TRUE(std::holds_alternative<spec::DirectProduct>(prod.kind));
  EXPECT_EQ(std::get<spec::DirectProduct>(prod.kind).factors.size(), 2u);
}

TEST(ParseGroupSpec, WhitespaceAndNesting) {
  EXPECT_EQ(to_string(parse_group_spec("  C( 2 ) *  ( S(3) * A(4) ) ")), "C(2)*S(3)*A(4)");
  EXPECT_EQ(to_string(parse_group_spec("SD(2, 2, 3)")), "SD(2,2,3)");
  EXPECT_EQ(to_string(parse_group_spec("SD(7,1,3)")), "F(7,3)");
  EXPECT_EQ(to_string(parse_group_spec("MAT(3; [[0,-1],[1,0]], [[1,1],[1,-1]])")),
            "MAT(3;[[0,-1],[1,0]],[[1,1],[1,-1]])");
}

TEST(ParseGroupSpec, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(offset_of("C(2"), 3u);
  EXPECT_EQ(offset_of("X(2)"), 0u);
  EXPECT_EQ(offset_of("C(2)*"), 5u);
  EXPECT_EQ(offset_of("C(2) S(3)"), 5u);
  EXPECT_EQ(offset_of("F(7;3)"), 3u);
  EXPECT_EQ(offset_of("C(-2)"), 2u);
  EXPECT_EQ(offset_of("MAT(3;[[1,0],[0,1]"), 18u);
  EXPECT_EQ(offset_of("C(99999999999999999999)"), 2u);
  EXPECT_EQ(offset_of(""), 0u);
}

TEST(ParseGroupSpec, SemanticErrorsNameTheConstraint) {
  auto message = [](const std::string& text) {
    try {
      parse_group_spec(text);
    } catch (const ConstructionError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("F(7,4)").find("d | p^a - 1"), std::string::npos);
  EXPECT_NE(message("SD(2,2,1)").find("no error"), std::string::npos);
  EXPECT_NE(message("SD(5,2,4)").find("multiplicative order"), std::string::npos);
  EXPECT_NE(message("F(6,5)").find("prime"), std::string::npos);
  EXPECT_NE(message("D(7)").find("even"), std::string::npos);
  EXPECT_NE(message("S(7)").find("n <= 6"), std::string::npos);
  EXPECT_NE(message("MAT(3;[[1,1],[1,1]])").find("invertible"), std::string::npos);
  EXPECT_NE(message("MAT(3;[[1,0],[0,1]],[[1]])").find("square"), std::string::npos);
  EXPECT_NE(message("Q(6)").find("divisible by 4"), std::string::npos);
}
