#include <gtest/gtest.h>

#include <random>

#include "acdlab/modp.hpp"
#include "oracles.hpp"

using namespace acdlab::modp;

namespace {

Mat random_matrix(std::mt19937& rng, std::size_t n, std::uint64_t q) {
  std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(q - 1));
  Mat m(n, Vec(n));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

}  // namespace

TEST(Modp, FieldBasics) {
  const Field f{13};
  EXPECT_EQ(f.mul(f.inv(5), 5), 1u);
  EXPECT_EQ(f.from_int(-1), 12u);
  EXPECT_EQ(f.pow(2, 12), 1u);
  EXPECT_EQ(primitive_root(f), 2u);
  EXPECT_EQ(primitive_root(Field{7}), 3u);
}

TEST(Modp, CharpolyMatchesDeterminantOracle) {
  std::mt19937 rng(7);
  for (std::uint64_t q : {7ULL, 31ULL, 97ULL}) {
    const Field f{q};
    for (std::size_t n = 1; n <= 6; ++n) {
      const Mat m = random_matrix(rng, n, q);
      const Poly cp = charpoly(f, m);
      ASSERT_EQ(cp.size(), n + 1);
      EXPECT_EQ(cp.back(), 1u);
      for (Elem x = 0; x < 6; ++x) {
        Mat shifted = m;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) shifted[i][j] = f.sub(i == j ? x : 0, m[i][j]);
        EXPECT_EQ(poly_eval(f, cp, x), oracle::determinant(f, shifted));
      }
    }
  }
}

TEST(Modp, NullspaceVectorsAreAnnihilated) {
  std::mt19937 rng(11);
  const Field f{101};
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_matrix(rng, 5, 101);
    m[4] = m[0];  // force a kernel
    for (std::size_t j = 0; j < 5; ++j) m[3][j] = f.add(m[1][j], m[2][j]);
    const auto ker = nullspace(f, m);
    Mat r = m;
    EXPECT_EQ(ker.size(), 5 - rref(f, r).size());
    for (const auto& v : ker) {
      for (const auto& row : m) {
        Elem s = 0;
        for (std::size_t j = 0; j < 5; ++j) s = f.add(s, f.mul(row[j], v[j]));
        EXPECT_EQ(s, 0u);
      }
    }
  }
}

TEST(Modp, DistinctRootsMatchExhaustiveScan) {
  std::mt19937 rng(3);
  for (std::uint64_t q : {11ULL, 43ULL, 211ULL}) {
    const Field f{q};
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(q - 1));
      Poly p(1 + trial % 7);
      for (auto& c : p) c = dist(rng);
      p.push_back(1);
      std::vector<Elem> brute;
      for (Elem x = 0; x < q; ++x)
        if (poly_eval(f, p, x) == 0) brute.push_back(x);
      EXPECT_EQ(distinct_roots(f, p), brute);
    }
  }
}

TEST(Modp, GcdOfProducts) {
  const Field f{17};
  // (x - 1)(x - 2) and (x - 2)(x - 3)
  const Poly a{2, f.from_int(-3), 1};
  const Poly b{6, f.from_int(-5), 1};
  EXPECT_EQ(poly_gcd(f, a, b), (Poly{f.from_int(-2), 1}));
}
