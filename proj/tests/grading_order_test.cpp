#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace satgb {
namespace {

using testing::vec;
using Q = RationalField;

const IntMatrix kTwoRowW = {{1, 1, 1}, {1, 0, 1}};

// sigma on x1..x3 whose extension by kTwoRowW is Ord of the 5x5 matrix in the
// two-row example: rows (1 1 1), (0 0 1), (0 1 0) act on the x-slots.
OrderSpec twoRowSigma() { return OrderSpec::matrix({{1, 1, 1}, {0, 0, 1}, {0, 1, 0}}); }

TEST(DegW, MatrixTimesExponents) {
  RingContext two(testing::names(3), Grading(kTwoRowW));
  EXPECT_EQ(degW(ModuleTerm{PowerProduct{0, 2, 0}, 0}, two), (Degree{2, 0}));
  RingContext std4(testing::names(4), Grading::standard(4));
  EXPECT_EQ(degW(ModuleTerm{PowerProduct{1, 3, 0, 0}, 0}, std4), (Degree{4}));
  // y2 x2^2 in the homogenized ring K[y1, y2, x1, x2, x3].
  EXPECT_EQ(degW(ModuleTerm{PowerProduct{0, 1, 0, 2, 0}, 0}, two.homogenizedContext()), (Degree{2, 1}));
}

TEST(DegW, ShiftsAndDimensionChecks) {
  RingContext ctx({"x"}, Grading({{1}}, {{0}, {3}}));
  EXPECT_EQ(degW(ModuleTerm{PowerProduct{2}, 1}, ctx), (Degree{5}));
  EXPECT_THROW(degW(ModuleTerm{PowerProduct{2, 1}, 0}, ctx), StructuralError);
  EXPECT_THROW(degW(ModuleTerm{PowerProduct{2}, 2}, ctx), StructuralError);
}

TEST(Top, ComponentwiseMaximum) {
  std::vector<Degree> a{{4, 1}, {3, 1}};
  EXPECT_EQ(topTuple(a), (Degree{4, 1}));
  std::vector<Degree> b{{4, 1}, {3, 2}};
  EXPECT_EQ(topTuple(b), (Degree{4, 2}));
  std::vector<Degree> c{{7}};
  EXPECT_EQ(topTuple(c), (Degree{7}));
  EXPECT_THROW(topTuple(std::span<const Degree>{}), StructuralError);
}

TEST(TopDeg, Examples) {
  auto sp = makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), OrderSpec::lex());
  EXPECT_EQ(topDeg(vec(sp.plain, "x - z^3")), (Degree{3}));
  EXPECT_EQ(topDeg(vec(sp.plain, "y^2")), degW(ModuleTerm{PowerProduct{0, 2, 0}, 0}, sp.plain->context()));
  EXPECT_THROW(topDeg(ModuleVector<Q>(sp.plain)), DomainError);
  auto two = makeSpaces(Q{}, RingContext(testing::names(3), Grading(kTwoRowW)), twoRowSigma());
  EXPECT_EQ(topDeg(vec(two.plain, "x2^2 - x1")), (Degree{2, 1}));
}

TEST(Compare, ExtensionExamples) {
  auto lex = makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), OrderSpec::lex());
  const auto& order = lex.homogenized->order();
  auto t = [&](const std::string& s) { return vec(lex.homogenized, s).leadingTerm(); };
  EXPECT_EQ(order.compare(t("x*h^2"), t("z^3")), std::strong_ordering::greater);
  EXPECT_EQ(order.compare(t("z^3"), t("z^3")), std::strong_ordering::equal);

  auto drl = makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), OrderSpec::degRevLex());
  auto u = [&](const std::string& s) { return vec(drl.homogenized, s).leadingTerm(); };
  EXPECT_EQ(drl.homogenized->order().compare(u("x^2"), u("y*h")), std::strong_ordering::greater);
}

TEST(LeadingParts, Examples) {
  auto lex = makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), OrderSpec::lex());
  auto F1 = vec(lex.homogenized, "x*h^2 - z^3");
  EXPECT_EQ(leadingParts(F1).second, vec(lex.homogenized, "x*h^2").leadingTerm());
  auto drl = makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), OrderSpec::degRevLex());
  auto F3 = vec(drl.homogenized, "y^2*h - x*z*h");
  auto [c, t] = leadingParts(F3);
  EXPECT_EQ(t, vec(drl.homogenized, "y^2*h").leadingTerm());
  EXPECT_EQ(c, 1);
  auto mono = vec(drl.homogenized, "-3*x*y*z");
  EXPECT_EQ(leadingParts(mono).second, mono.leadingTerm());
  EXPECT_THROW(leadingParts(ModuleVector<Q>(drl.homogenized)), DomainError);
}

TEST(LeadingParts, UnderAnotherOrdering) {
  auto drl = makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), OrderSpec::degRevLex());
  auto v = vec(drl.plain, "x + y^2");
  TermOrder lexOrder(OrderSpec::lex(), drl.plain->context());
  EXPECT_EQ(leadingParts(v).second, vec(drl.plain, "y^2").leadingTerm());
  EXPECT_EQ(leadingParts(v, lexOrder).second, vec(drl.plain, "x").leadingTerm());
}

/// Compares the extension on K[h, x1..xn] (h in slot 0) with a named order on
/// K[x1..xn, h] (h last).
void expectExtensionMatches(const OrderSpec& sigma, const OrderSpec& expected, int samples) {
  const std::size_t n = 3;
  RingContext ctx(testing::names(n), Grading::standard(n));
  ExtendedOrder ext = extendOrder(sigma, ctx);
  RingContext flat(testing::names(n + 1), Grading::standard(n + 1));
  TermOrder target(expected, flat);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  for (int i = 0; i < samples; ++i) {
    std::vector<Exponent> a(n + 1), b(n + 1);
    for (auto& x : a) x = e(rng);
    for (auto& x : b) x = e(rng);
    auto moveHLast = [&](const std::vector<Exponent>& v) {
      std::vector<Exponent> out(v.begin() + 1, v.end());
      out.push_back(v[0]);
      return PowerProduct(out);
    };
    auto got = ext.compare(ModuleTerm{PowerProduct(a), 0}, ModuleTerm{PowerProduct(b), 0});
    auto want = target.compare(ModuleTerm{moveHLast(a), 0}, ModuleTerm{moveHLast(b), 0});
    ASSERT_EQ(got, want);
  }
}

TEST(ExtendOrder, LexBecomesDegLex) { expectExtensionMatches(OrderSpec::lex(), OrderSpec::degLex(), 5000); }

TEST(ExtendOrder, DegRevLexStaysDegRevLex) {
  expectExtensionMatches(OrderSpec::degRevLex(), OrderSpec::degRevLex(), 5000);
}

TEST(ExtendOrder, YFreeTermsOfEqualDegreeFollowSigma) {
  RingContext ctx(testing::names(3), Grading(kTwoRowW));
  ExtendedOrder ext = extendOrder(twoRowSigma(), ctx);
  TermOrder sigma(twoRowSigma(), RingContext(testing::names(3), Grading::standard(3)));
  // x1^2 and x1*x3 both have W-degree (2, 2).
  ModuleTerm p{PowerProduct{0, 0, 2, 0, 0}, 0}, q{PowerProduct{0, 0, 1, 0, 1}, 0};
  ModuleTerm p0{PowerProduct{2, 0, 0}, 0}, q0{PowerProduct{1, 0, 1}, 0};
  ASSERT_EQ(degW(p, ctx.homogenizedContext()), degW(q, ctx.homogenizedContext()));
  EXPECT_EQ(ext.compare(p, q), sigma.compare(p0, q0));
  EXPECT_EQ(ext.compare(q, p), sigma.compare(q0, p0));
}

TEST(GradingChecks, Examples) {
  EXPECT_TRUE(gradingChecks(Grading(kTwoRowW), twoRowSigma()).positive);
  EXPECT_FALSE(gradingChecks(Grading({{0, 1}, {-1, 0}}), OrderSpec::lex()).positive);
  auto r = gradingChecks(Grading::standard(4), OrderSpec::degRevLex());
  EXPECT_TRUE(r.positive);
  EXPECT_TRUE(r.degCompatible);
  EXPECT_FALSE(gradingChecks(Grading::standard(3), OrderSpec::lex()).degCompatible);
}

TEST(Grading, ConstructionChecks) {
  EXPECT_THROW(Grading({{1, 1}, {2, 2}}), DomainError);
  EXPECT_THROW(Grading({{1, 1}, {2}}), StructuralError);
  EXPECT_THROW(Grading({{1}}, {{1, 2}}), StructuralError);
  EXPECT_THROW(OrderSpec::matrix({{1, 1}, {1, 1}}), DomainError);
}

TEST(TwoRowExample, HeadOfHomogenizationIsNotTheHead) {
  auto sp = makeSpaces(Q{}, RingContext(testing::names(3), Grading(kTwoRowW)), twoRowSigma());
  auto v = vec(sp.plain, "x2^2 - x1");
  auto vh = homogenize(v, sp.homogenized);
  EXPECT_EQ(vh, vec(sp.homogenized, "y2*x2^2 - y1*x1"));
  ModuleTerm ltBar = leadingParts(vh).second;
  ModuleTerm lt = leadingParts(v).second;
  EXPECT_EQ(lt.pp, (PowerProduct{0, 2, 0}));
  EXPECT_EQ(ltBar.pp, (PowerProduct{0, 1, 0, 2, 0}));
  // Identifying y-free terms, LT(v^hom) would have to be y-free; it is not.
  EXPECT_NE(ltBar.pp[1], 0);
}

TEST(TwoRowExample, ExpandedMatrixStacksWBarOverSigma) {
  RingContext ctx(testing::names(3), Grading(kTwoRowW));
  ExtendedOrder ext = extendOrder(twoRowSigma(), ctx);
  IntMatrix expected = {{1, 0, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
  EXPECT_EQ(ext.rows(), expected);
}

}  // namespace
}  // namespace satgb
