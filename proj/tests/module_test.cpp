#include <gtest/gtest.h>

#include "support.hpp"

using namespace tate;

namespace {

ProductSpace p1p2() { return ProductSpace({1, 2}); }

} // namespace

TEST(PresentedModule, FreeModuleDims) {
  auto s = p1p2();
  auto m = PresentedModule::free(s, {Multidegree{0, 0}, Multidegree{1, 0}});
  for (const auto& d : testsupport::box(Multidegree{-1, -1}, Multidegree{3, 3}))
    EXPECT_EQ(testsupport::dimS({1, 2}, {d[0], d[1]}) + testsupport::dimS({1, 2}, {d[0] - 1, d[1]}),
              static_cast<std::int64_t>(m.dim(d)));
}

TEST(PresentedModule, ResidueField) {
  auto k = residueFieldModule(p1p2());
  for (const auto& d : testsupport::box(Multidegree{-1, -1}, Multidegree{2, 2}))
    EXPECT_EQ(d.isZero() ? 1u : 0u, k.dim(d)) << d.toString();
}

TEST(PresentedModule, KoszulKernel) {
  auto s = p1p2();
  auto k = koszulKernelModule(s);
  EXPECT_EQ(10u, k.numGenerators());
  EXPECT_EQ(10u, k.numRelations());
  // kernel of S(-e_0)^2 + S(-e_1)^3 -> S, onto the irrelevant ideal
  for (const auto& d : testsupport::box(Multidegree{0, 0}, Multidegree{3, 3})) {
    std::int64_t expected = 2 * testsupport::dimS({1, 2}, {d[0] - 1, d[1]}) +
                            3 * testsupport::dimS({1, 2}, {d[0], d[1] - 1});
    if (!d.isZero())
      expected -= testsupport::dimS({1, 2}, {d[0], d[1]});
    EXPECT_EQ(expected, static_cast<std::int64_t>(k.dim(d))) << d.toString();
  }
}

TEST(PresentedModule, TwistShiftsHilbertFunction) {
  auto s = p1p2();
  auto k = koszulKernelModule(s);
  Multidegree a{1, 1};
  auto t = twist(k, a);
  for (const auto& d : testsupport::box(Multidegree{-1, -1}, Multidegree{2, 2}))
    EXPECT_EQ(k.dim(d + a), t.dim(d));
}

TEST(PresentedModule, DirectSum) {
  auto s = p1p2();
  auto a = koszulKernelModule(s);
  auto b = residueFieldModule(s);
  auto c = directSum(a, b);
  EXPECT_EQ(a.numGenerators() + b.numGenerators(), c.numGenerators());
  for (const auto& d : testsupport::box(Multidegree{0, 0}, Multidegree{2, 2}))
    EXPECT_EQ(a.dim(d) + b.dim(d), c.dim(d));
}

TEST(PresentedModule, HilbertFunctionBox) {
  auto s = p1p2();
  auto m = PresentedModule::free(s, {Multidegree{0, 0}});
  auto h = hilbertFunctionBox(m, Multidegree{0, 0}, Multidegree{2, 1});
  EXPECT_EQ(6u, h.size());
  EXPECT_EQ(9u, h.at(Multidegree{2, 1}));
}

TEST(PresentedModule, VariableActionCommutes) {
  auto s = p1p2();
  auto m = koszulKernelModule(s);
  Multidegree d{1, 1};
  const auto& f = s.field();
  // x_(0,0) x_(1,2) = x_(1,2) x_(0,0) from M_d to M_{d+(1,1)}
  auto ab = multiply(m.variableAction(d + Multidegree{1, 0}, 4), m.variableAction(d, 0), f);
  auto ba = multiply(m.variableAction(d + Multidegree{0, 1}, 0), m.variableAction(d, 4), f);
  EXPECT_EQ(ab, ba);
}

TEST(PresentedModule, RejectsBadRelations) {
  auto s = p1p2();
  // entry of degree (1,0) where the column wants (1,1)
  std::vector<RelationEntry> rels = {{0, 0, SPolynomial::variable(s, 0)}};
  EXPECT_THROW(PresentedModule(s, {Multidegree{0, 0}}, {Multidegree{1, 1}}, rels),
               std::invalid_argument);
  std::vector<RelationEntry> badRow = {{3, 0, SPolynomial::variable(s, 0)}};
  EXPECT_THROW(PresentedModule(s, {Multidegree{0, 0}}, {Multidegree{1, 0}}, badRow),
               std::invalid_argument);
}
