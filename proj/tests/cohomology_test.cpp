#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tate;

namespace {

ProductSpace p1p2() { return ProductSpace({1, 2}); }

PresentedModule lineBundle(const Multidegree& a) {
  // O(a) is S(a), with its generator in degree -a
  return PresentedModule::free(p1p2(), {-a});
}

} // namespace

TEST(EulerPolynomial, Rendering) {
  EXPECT_EQ("0", EulerPolynomial().toString());
  EXPECT_EQ("3", EulerPolynomial({3}).toString());
  EXPECT_EQ("h", EulerPolynomial({0, 1}).toString());
  EXPECT_EQ("3h2", EulerPolynomial({0, 0, 3}).toString());
  EXPECT_EQ("2+h3", EulerPolynomial({2, 0, 0, 1}).toString());
  EXPECT_EQ(EulerPolynomial({1}), EulerPolynomial({1, 0, 0}));
  EXPECT_EQ(2u, EulerPolynomial({2, 0, 0, 1}).termCount());
  EXPECT_EQ(EulerPolynomial({0, 2, 0, 3}), EulerPolynomial({0, 1}) * EulerPolynomial({2, 0, 3}));
}

TEST(Cohomology, KunnethClosedForm) {
  std::vector<int> dims = {1, 2};
  for (int i = -4; i <= 3; ++i)
    for (int j = -4; j <= 3; ++j) {
      auto expected = testsupport::kunnethOracle(dims, {i, j});
      EXPECT_EQ(EulerPolynomial(expected), kunnethLineBundle(dims, Multidegree{i, j}))
          << i << "," << j;
    }
  EXPECT_EQ("3h2", kunnethLineBundle(dims, Multidegree{2, -3}).toString());
}

TEST(Cohomology, StructureSheafMatrix) {
  std::string expected = "| 20h 10h 0 10 20  30  40  |\n"
                         "| 12h 6h  0 6  12  18  24  |\n"
                         "| 6h  3h  0 3  6   9   12  |\n"
                         "| 2h  h   0 1  2   3   4   |\n"
                         "| 0   0   0 0  0   0   0   |\n"
                         "| 0   0   0 0  0   0   0   |\n"
                         "| 2h3 h3  0 h2 2h2 3h2 4h2 |\n";
  auto o = lineBundle(Multidegree{0, 0});
  EXPECT_EQ(expected, cohomologyMatrix(o, Multidegree{-3, -3}, Multidegree{3, 3}));
}

TEST(Cohomology, PointQuery) {
  auto table = eulerPolynomialTable(lineBundle(Multidegree{0, 0}), Multidegree{-3, -3},
                                    Multidegree{3, 3});
  EXPECT_EQ("3h2", table.at(Multidegree{2, -3}).toString());
  EXPECT_EQ(49u, table.entries.size());
  EXPECT_THROW(table.at(Multidegree{4, 0}), std::out_of_range);
}

TEST(Cohomology, LineBundlesAgreeWithKunneth) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> shift(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    Multidegree a{shift(rng), shift(rng)};
    auto table = eulerPolynomialTable(lineBundle(a), Multidegree{-2, -2}, Multidegree{2, 2});
    for (const auto& [d, e] : table.entries)
      EXPECT_EQ(EulerPolynomial(testsupport::kunnethOracle({1, 2}, {a[0] + d[0], a[1] + d[1]})), e)
          << "a=" << a.toString() << " d=" << d.toString();
  }
}

TEST(Cohomology, TwistShiftsTable) {
  auto m = twist(koszulKernelModule(p1p2()), Multidegree{1, 1});
  Multidegree a{1, -1};
  auto base = eulerPolynomialTable(m, Multidegree{-2, -2}, Multidegree{2, 2});
  auto shifted = eulerPolynomialTable(twist(m, a), Multidegree{-3, -1}, Multidegree{1, 3});
  for (const auto& [d, e] : shifted.entries)
    EXPECT_EQ(base.at(d + a), e) << d.toString();
}

TEST(Cohomology, WindowStability) {
  auto m = twist(koszulKernelModule(p1p2()), Multidegree{1, 1});
  auto small = eulerPolynomialTable(m, Multidegree{-1, -1}, Multidegree{1, 1});
  auto large = eulerPolynomialTable(m, Multidegree{-2, -3}, Multidegree{2, 2});
  for (const auto& [d, e] : small.entries)
    EXPECT_EQ(large.at(d), e) << d.toString();
}

TEST(Cohomology, GlobalSectionsMatchHilbertFunction) {
  auto m = twist(koszulKernelModule(p1p2()), Multidegree{1, 1});
  Multidegree low = coarseRegularity(m) + Multidegree{1, 1};
  auto table = eulerPolynomialTable(m, low, low + Multidegree{2, 2});
  for (const auto& [d, e] : table.entries) {
    EXPECT_EQ(1u, e.coefficients().size()) << d.toString();
    EXPECT_EQ(m.dim(d), e.coefficient(0)) << d.toString();
  }
}

TEST(Cohomology, MatrixNeedsTwoFactors) {
  CohomologyTable t{Multidegree{0}, Multidegree{1}, {}};
  EXPECT_THROW(cohomologyMatrix(t), std::invalid_argument);
}
