#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace tate;

TEST(Multidegree, Basics) {
  Multidegree a{1, -2};
  Multidegree b{0, 3};
  EXPECT_EQ(-1, a.total());
  EXPECT_EQ((Multidegree{1, 1}), a + b);
  EXPECT_EQ((Multidegree{1, -5}), a - b);
  EXPECT_EQ((Multidegree{-1, 2}), -a);
  EXPECT_EQ("(1,-2)", a.toString());
  EXPECT_TRUE(leq(Multidegree{0, 0}, Multidegree{0, 1}));
  EXPECT_FALSE(leq(a, b));
  EXPECT_FALSE(leq(b, a));
  EXPECT_EQ((Multidegree{1, 3}), componentwiseMax(a, b));
  EXPECT_EQ((Multidegree{0, -2}), componentwiseMin(a, b));
  EXPECT_TRUE(LexLess{}(b, a));
}

TEST(ProductSpace, Variables) {
  ProductSpace s({1, 2});
  EXPECT_EQ(2u, s.factors());
  EXPECT_EQ(5u, s.numVariables());
  EXPECT_EQ(3, s.totalDim());
  EXPECT_EQ(2u, s.groupOffset(1));
  EXPECT_EQ(1u, s.groupOf(2));
  EXPECT_EQ(4u, s.variable(1, 2));
  EXPECT_EQ((Multidegree{-1, -1}), s.exteriorDegree(0b00101));
  EXPECT_EQ((Multidegree{2, 1}), s.polynomialDegree({1, 1, 0, 0, 1}));
  EXPECT_THROW(ProductSpace({}), std::invalid_argument);
  EXPECT_THROW(ProductSpace({0}), std::invalid_argument);
}

TEST(ProductSpace, PieceDimensions) {
  ProductSpace s({1, 2});
  EXPECT_EQ(6u, dimSPiece(s, Multidegree{1, 1}));
  EXPECT_EQ(6u, dimEPiece(s, Multidegree{-1, -1}));
  EXPECT_EQ(0u, dimSPiece(s, Multidegree{-1, 3}));
  EXPECT_EQ(0u, dimEPiece(s, Multidegree{-3, 0}));
  EXPECT_EQ(1u, dimEPiece(s, Multidegree{-2, -3}));
  for (int i = -1; i <= 4; ++i)
    for (int j = -1; j <= 4; ++j)
      EXPECT_EQ(testsupport::dimS({1, 2}, {i, j}),
                static_cast<std::int64_t>(dimSPiece(s, Multidegree{i, j})));
  for (int i = -3; i <= 0; ++i)
    for (int j = -4; j <= 0; ++j)
      EXPECT_EQ(testsupport::dimE({1, 2}, {i, j}),
                static_cast<std::int64_t>(dimEPiece(s, Multidegree{i, j})));
}

TEST(ProductSpace, ExteriorBasisMatchesSubsetEnumeration) {
  ProductSpace s({2, 1, 1});
  std::size_t n = s.numVariables();
  std::set<ExtMask> seen;
  for (ExtMask m = 0; m < (ExtMask{1} << n); ++m) {
    Multidegree a = s.exteriorDegree(m);
    const auto& basis = s.exteriorBasis(a);
    EXPECT_NE(basis.end(), std::find(basis.begin(), basis.end(), m));
    seen.insert(m);
  }
  EXPECT_EQ(std::size_t{1} << n, seen.size());
  const auto& b = s.exteriorBasis(Multidegree{-1, -1, 0});
  for (std::size_t k = 1; k < b.size(); ++k)
    EXPECT_TRUE(maskLexLess(b[k - 1], b[k]));
}

TEST(Polynomial, MonomialBasisMatchesCompositions) {
  ProductSpace s({1, 2});
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      auto basis = monomialBasis(s, Multidegree{i, j});
      std::vector<std::vector<int>> a, b, cur;
      std::vector<int> tmp;
      testsupport::compositions(2, i, tmp, a);
      testsupport::compositions(3, j, tmp, b);
      std::set<Exponents> expected;
      for (auto& x : a)
        for (auto& y : b) {
          Exponents e = x;
          e.insert(e.end(), y.begin(), y.end());
          expected.insert(e);
        }
      EXPECT_EQ(expected, std::set<Exponents>(basis.begin(), basis.end()));
      for (std::size_t k = 0; k < basis.size(); ++k)
        EXPECT_EQ(k, monomialIndex(s, basis[k]));
    }
  EXPECT_TRUE(monomialBasis(s, Multidegree{-1, 2}).empty());
}

TEST(Polynomial, ArithmeticAndRendering) {
  ProductSpace s({1, 2});
  auto x0 = SPolynomial::variable(s, 0);
  auto y1 = SPolynomial::variable(s, 3);
  auto p = multiply(x0, y1, s);
  EXPECT_EQ((Multidegree{1, 1}), p.degree());
  EXPECT_EQ("x_(0,0)*x_(1,1)", p.toString(s));
  SPolynomial q = p;
  q.addScaled(p, 100, s);
  EXPECT_TRUE(q.isZero());
  SPolynomial r(Multidegree{1, 1});
  EXPECT_THROW(r.addTerm({2, 0, 0, 0, 0}, 1, s), std::invalid_argument);
}

TEST(Exterior, WedgeSigns) {
  ProductSpace s({1, 2});
  PrimeField f = s.field();
  auto v0 = ExteriorElement::variable(s, 0);
  auto v3 = ExteriorElement::variable(s, 3);
  auto a = extMultiply(v0, v3, f);
  auto b = extMultiply(v3, v0, f);
  EXPECT_EQ(a, b.scaled(f.neg(1), f));
  EXPECT_TRUE(extMultiply(v0, v0, f).isZero());
  EXPECT_EQ(1, wedgeSign(0b01, 0b10));
  EXPECT_EQ(-1, wedgeSign(0b10, 0b01));
  EXPECT_EQ(a, ExteriorElement::wedgeOf(s, {0, 3}));
  EXPECT_EQ(b, ExteriorElement::wedgeOf(s, {3, 0}));
}

TEST(Exterior, AssociativeAndGradedCommutative) {
  ProductSpace s({1, 2});
  PrimeField f = s.field();
  std::mt19937 rng(3);
  auto randomElement = [&](const Multidegree& a) {
    ExteriorElement e(a);
    for (ExtMask m : s.exteriorBasis(a))
      e.addTerm(m, rng() % 101, f);
    return e;
  };
  std::vector<Multidegree> degs = {{-1, 0}, {0, -1}, {-1, -1}, {0, -2}};
  for (const auto& a : degs)
    for (const auto& b : degs)
      for (const auto& c : degs) {
        auto x = randomElement(a), y = randomElement(b), z = randomElement(c);
        EXPECT_EQ(extMultiply(extMultiply(x, y, f), z, f), extMultiply(x, extMultiply(y, z, f), f));
        int sign = ((-a.total()) * (-b.total())) % 2 ? -1 : 1;
        auto yx = extMultiply(y, x, f);
        EXPECT_EQ(extMultiply(x, y, f), sign < 0 ? yx.scaled(f.neg(1), f) : yx);
      }
}

TEST(Exterior, MultiplicationMatrix) {
  ProductSpace s({1, 2});
  auto g = ExteriorElement::variable(s, 2);
  auto m = multiplicationMatrixE(g, Multidegree{0, -1}, s);
  EXPECT_EQ(3u, m.cols());
  EXPECT_EQ(3u, m.rows());
  // v_2 ^ v_2 = 0, the other two columns hit distinct basis vectors
  EXPECT_EQ(2u, m.nonzeros());
}
