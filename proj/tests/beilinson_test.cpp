#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tate;

namespace {

ProductSpace p1p2() { return ProductSpace({1, 2}); }

// dim of Omega^p(p) on P^n in degree d, as the image of the Koszul map
// Lambda^{p+1} (x) S(-1) -> Lambda^p (x) S: alternating sum over the tail of
// the Koszul complex, which is exact away from degree 0.
std::int64_t omegaDim(int n, int p, int d) {
  if (p == 0)
    return testsupport::dimS({n}, {d});
  std::int64_t r = 0;
  for (int j = 0; p + 1 + j <= n + 1; ++j) {
    std::int64_t term = testsupport::binomial(n + 1, p + 1 + j) * testsupport::dimS({n}, {d - 1 - j});
    r += (j % 2 ? -term : term);
  }
  return r;
}

ExteriorElement randomElement(const ProductSpace& s, const Multidegree& a, std::mt19937& rng) {
  ExteriorElement e(a);
  for (ExtMask m : s.exteriorBasis(a))
    e.addTerm(m, rng() % 101, s.field());
  return e;
}

PresentedModule koszulTwisted() { return twist(koszulKernelModule(p1p2()), Multidegree{1, 1}); }

} // namespace

TEST(PolynomialMatrix, AddAndBlock) {
  auto s = p1p2();
  PolynomialMatrix m(2, 2);
  auto x = SPolynomial::variable(s, 0);
  m.add(0, 1, x, s);
  m.add(0, 1, x, s);
  ASSERT_NE(nullptr, m.find(0, 1));
  EXPECT_EQ(2u, m.find(0, 1)->coefficient({1, 0, 0, 0, 0}));
  PolynomialMatrix big(3, 3);
  big.addBlock(1, 1, m, s);
  EXPECT_NE(nullptr, big.find(1, 2));
  EXPECT_EQ(nullptr, big.find(0, 1));
}

TEST(BeilinsonBundle, ExteriorTopIsATwist) {
  auto u = beilinsonBundlePresentation(p1p2(), Multidegree{0, 2});
  EXPECT_EQ(1u, u.presentation.numGenerators());
  EXPECT_EQ((Multidegree{0, 1}), u.presentation.generatorDegrees()[0]);
  EXPECT_EQ(0u, u.presentation.numRelations());
}

TEST(BeilinsonBundle, HilbertFunctionsMatchKoszulOracle) {
  auto s = p1p2();
  for (const auto& p : testsupport::box(Multidegree{0, 0}, Multidegree{1, 2})) {
    auto u = beilinsonBundlePresentation(s, p);
    for (const auto& d : testsupport::box(Multidegree{0, 0}, Multidegree{3, 3}))
      EXPECT_EQ(omegaDim(1, p[0], d[0]) * omegaDim(2, p[1], d[1]),
                static_cast<std::int64_t>(u.presentation.dim(d)))
          << "p=" << p.toString() << " d=" << d.toString();
  }
  EXPECT_THROW(beilinsonBundlePresentation(s, Multidegree{2, 0}), std::invalid_argument);
}

TEST(BeilinsonMap, Functorial) {
  auto s = p1p2();
  std::mt19937 rng(5);
  const auto& f = s.field();
  std::vector<std::pair<Multidegree, Multidegree>> steps = {
      {{-1, 0}, {0, -1}}, {{0, -1}, {0, -1}}, {{0, -1}, {-1, 0}}, {{-1, -1}, {0, -1}}};
  for (const auto& [g1, g2] : steps) {
    Multidegree p{1, 2};
    Multidegree p1 = p + g1;
    Multidegree p2 = p1 + g2;
    auto phi = randomElement(s, g1, rng);
    auto psi = randomElement(s, g2, rng);
    auto up = beilinsonBundlePresentation(s, p).presentation;
    auto up1 = beilinsonBundlePresentation(s, p1).presentation;
    auto up2 = beilinsonBundlePresentation(s, p2).presentation;
    auto uPhi = beilinsonMapEntry(s, phi, p, p1);
    auto uPsi = beilinsonMapEntry(s, psi, p1, p2);
    auto uBoth = beilinsonMapEntry(s, extMultiply(psi, phi, f), p, p2);
    for (const auto& d : testsupport::box(Multidegree{1, 1}, Multidegree{2, 3})) {
      auto lhs = multiply(homomorphismMatrix(up1, up2, uPsi, d), homomorphismMatrix(up, up1, uPhi, d), f);
      EXPECT_EQ(homomorphismMatrix(up, up2, uBoth, d), lhs)
          << g1.toString() << " then " << g2.toString() << " at " << d.toString();
    }
  }
}

TEST(BeilinsonMonad, KoszulKernelShape) {
  auto m = koszulTwisted();
  auto b = beilinsonMonad(m);
  ASSERT_EQ(2u, b.terms().size());
  const auto* t0 = b.term(0);
  const auto* t1 = b.term(-1);
  ASSERT_NE(nullptr, t0);
  ASSERT_NE(nullptr, t1);
  EXPECT_EQ(6u, t0->numGenerators());
  EXPECT_EQ(0u, t0->numRelations());
  EXPECT_EQ(3u, t1->numGenerators());
  ASSERT_EQ(1u, t1->numRelations());
  // the relation is linear in the generators
  EXPECT_EQ((t1->generatorDegrees()[0] + Multidegree{0, 1}), t1->relationDegrees()[0]);
  auto degrees = testsupport::box(Multidegree{0, 0}, Multidegree{3, 3});
  EXPECT_TRUE(squareZeroFailures(b, degrees).empty());

  auto report = verifyMonad(b, m, Multidegree{0, 0}, Multidegree{3, 3});
  EXPECT_TRUE(report.pass());
  EXPECT_GT(report.checked, 0u);
}

TEST(BeilinsonMonad, LineBundles) {
  auto s = p1p2();
  for (Multidegree a : {Multidegree{0, 0}, Multidegree{1, 1}, Multidegree{-1, 2}, Multidegree{2, -1},
                        Multidegree{-2, -3}}) {
    auto m = PresentedModule::free(s, {-a});
    auto b = beilinsonMonad(m);
    Multidegree low = defaultVerificationLow(b);
    auto report = verifyMonad(b, m, low, low + Multidegree{2, 2});
    EXPECT_TRUE(report.pass()) << a.toString();
    EXPECT_TRUE(squareZeroFailures(b, testsupport::box(low, low + Multidegree{2, 2})).empty());
  }
  auto o = beilinsonMonad(PresentedModule::free(s, {s.zero()}));
  ASSERT_EQ(1u, o.terms().size());
  EXPECT_EQ(1u, o.term(0)->numGenerators());
}

TEST(BeilinsonMonad, WrongModuleIsDetected) {
  auto b = beilinsonMonad(koszulTwisted());
  auto other = PresentedModule::free(p1p2(), {Multidegree{0, 0}});
  EXPECT_FALSE(verifyMonad(b, other, Multidegree{1, 1}, Multidegree{2, 2}).pass());
}

TEST(BeilinsonMonad, ThreadsDoNotChangeTheResult) {
  auto m = koszulTwisted();
  TateOptions many = boxMode();
  many.threads = 6;
  EXPECT_EQ(beilinsonMonad(m), beilinsonMonad(m, many));
}

TEST(DirectImage, ProjectionOfLineBundles) {
  auto s = p1p2();
  // O(-3,0) pushed to P^2: H^1(P^1, O(-3)) (x) O = O^2 in cohomological degree 1
  auto c = directImageComplex(PresentedModule::free(s, {Multidegree{3, 0}}), {1});
  EXPECT_EQ(1u, c.space().factors());
  ASSERT_NE(nullptr, c.term(1));
  EXPECT_EQ(2u, c.term(1)->numGenerators());
  EXPECT_EQ(0u, c.term(1)->numRelations());
  EXPECT_EQ(nullptr, c.term(0));

  // O pushed to P^1 is O
  auto d = directImageComplex(PresentedModule::free(s, {s.zero()}), {0});
  ASSERT_NE(nullptr, d.term(0));
  EXPECT_EQ(1u, d.term(0)->numGenerators());
  EXPECT_EQ((Multidegree{0}), d.term(0)->generatorDegrees()[0]);
}

TEST(DirectImage, KoszulKernelHomologyMatchesCohomology) {
  auto m = koszulTwisted();
  auto c = directImageComplex(m, {1});
  // R^q pi_* F(0, j) has global sections H^q(F(0, j)) for j large
  auto table = eulerPolynomialTable(m, Multidegree{0, 2}, Multidegree{0, 4});
  for (int j = 2; j <= 4; ++j) {
    const auto& e = table.at(Multidegree{0, j});
    for (int q = 0; q <= 1; ++q)
      EXPECT_EQ(e.coefficient(q), homologyDim(c, q, Multidegree{j})) << "q=" << q << " j=" << j;
  }
}

TEST(BeilinsonMonad, Rendering) {
  auto text = renderSModuleComplex(beilinsonMonad(koszulTwisted()));
  EXPECT_NE(std::string::npos, text.find("index 0: free, 6 generators"));
  EXPECT_NE(std::string::npos, text.find("index -1: cokernel, 3 generators"));
}
