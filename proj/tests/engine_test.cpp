#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"

namespace satgb {
namespace {

using testing::vec;
using testing::vecs;
using Q = RationalField;
using V = ModuleVector<Q>;

SpacePair<Q> spaces(OrderSpec sigma) {
  return makeSpaces(Q{}, RingContext({"x", "y", "z"}, Grading::standard(3)), std::move(sigma));
}

std::vector<V> reducedBasis(const std::vector<V>& G) { return interreduce<Q>(G); }

TEST(SVector, Examples) {
  auto lex = spaces(OrderSpec::lex());
  auto F1 = vec(lex.homogenized, "x*h^2 - z^3");
  auto F3 = vec(lex.homogenized, "y^3*h^3 - z^6");
  EXPECT_EQ(sVector(F1, F3), vec(lex.homogenized, "x*z^6 - y^3*z^3*h"));
  EXPECT_TRUE(sVector(F1, F1).isZero());

  auto drl = spaces(OrderSpec::degRevLex());
  auto S = sVector(vec(drl.homogenized, "x^2 - y*h"), vec(drl.homogenized, "x*y - z*h"));
  EXPECT_EQ(S, vec(drl.homogenized, "x*z*h - y^2*h"));
  EXPECT_TRUE(isHomogeneous(S));
  EXPECT_EQ(degreeOf(S), (Degree{3}));
}

TEST(SVector, ComponentMismatchAndZero) {
  auto sp = makeSpaces(Q{}, RingContext({"x"}, Grading::standard(1, 2)), OrderSpec::degRevLex());
  EXPECT_THROW(sVector(vec(sp.plain, "[x, 0]"), vec(sp.plain, "[0, x]")), DomainError);
  EXPECT_THROW(sVector(V(sp.plain), vec(sp.plain, "[x, 0]")), DomainError);
}

TEST(Remainder, Examples) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto G = vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h"});
  auto v = vec(drl.homogenized, "x*z*h - y^2*h");
  EXPECT_EQ(remainder<Q>(v, G), v);
  EXPECT_TRUE(remainder<Q>(v, std::vector<V>{v}).isZero());
  EXPECT_TRUE(remainder<Q>(V(drl.homogenized), G).isZero());
}

TEST(Remainder, FullDepthLeavesNoDivisibleTerm) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto G = vecs(drl.plain, {"x^2 - y", "y*z - 1"});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto v = testing::randomVector(drl.plain, rng, 6, 5);
    auto r = remainder<Q>(v, G);
    for (std::size_t k = 0; k < r.size(); ++k)
      for (const auto& g : G) ASSERT_FALSE(ppQuotient(r.term(k).pp, g.leadingTerm().pp).has_value());
    auto head = remainder<Q>(v, G, ReductionDepth::kHeadOnly);
    if (!head.isZero())
      for (const auto& g : G) ASSERT_FALSE(ppQuotient(head.leadingTerm().pp, g.leadingTerm().pp).has_value());
  }
}

TEST(WeakSatRemainder, YMultiplyTraceEndsInZero) {
  auto lex = spaces(OrderSpec::lex());
  auto F1 = vec(lex.homogenized, "x*h^2 - z^3");
  auto F3 = vec(lex.homogenized, "y^3*h^3 - z^6");
  auto W = vec(lex.homogenized, "x*z^6 - y^3*z^3*h");
  std::vector<V> G{F1, F3};
  Transcript tr;
  EXPECT_TRUE(weakSatRemainder<Q>(W, G, WeakSatPolicy::kYMultiplyToReduce, {}, &tr).isZero());
  EXPECT_EQ(tr.lines(), (std::vector<std::string>{"YMUL [2]", "REDSTEP 0 [0 0 0 6]", "REDSTEP 1 [0 0 0 3]"}))
      << tr.str();
  // Without substitutions the head x z^6 is irreducible.
  EXPECT_EQ(weakSatRemainder<Q>(W, G, WeakSatPolicy::kNever), remainder<Q>(W, G));
  EXPECT_FALSE(remainder<Q>(W, G).isZero());
}

TEST(WeakSatRemainder, SaturateFinalGivesTheSaturatedSyzygy) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto G = vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h"});
  auto S = sVector(G[0], G[1]);
  auto r = weakSatRemainder<Q>(S, G, WeakSatPolicy::kSaturateFinal);
  EXPECT_EQ(testing::monic(r), vec(drl.homogenized, "y^2 - x*z"));
  EXPECT_EQ(testing::monic(satRemainder<Q>(S, G)), vec(drl.homogenized, "y^2 - x*z"));
  EXPECT_TRUE(satRemainder<Q>(V(drl.homogenized), G).isZero());
  EXPECT_EQ(satRemainder<Q>(S, std::vector<V>{}), saturateVector(S));
}

TEST(WeakSatRemainder, RejectsNonHomogeneous) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto G = vecs(drl.homogenized, {"x^2 - y*h"});
  EXPECT_THROW(weakSatRemainder<Q>(vec(drl.homogenized, "x^2 - y"), G, WeakSatPolicy::kNever), DomainError);
  auto bad = vecs(drl.homogenized, {"x^2 - y"});
  EXPECT_THROW(weakSatRemainder<Q>(vec(drl.homogenized, "x^2"), bad, WeakSatPolicy::kNever), DomainError);
  EXPECT_THROW(weakSatRemainder<Q>(vec(drl.plain, "x^2"), std::vector<V>{}, WeakSatPolicy::kNever), DomainError);
}

TEST(Buchberger, SelfSatVersusPlainOnTheHomogeneousExample) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto gens = vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h"});
  auto sat = buchberger<Q>(gens, StrategyConfig::selfSat());
  EXPECT_EQ(sat.reduced, reducedBasis(vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h", "y^2 - x*z"})));
  StrategyConfig plain = StrategyConfig::homogeneous();
  plain.remainderMode = RemainderMode::kPlain;
  auto pl = buchberger<Q>(gens, plain);
  EXPECT_EQ(pl.reduced, reducedBasis(vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h", "y^2*h - x*z*h"})));
  EXPECT_TRUE(isGroebnerBasis<Q>(pl.reduced));
  EXPECT_TRUE(isGroebnerBasis<Q>(sat.reduced));
}

TEST(Buchberger, SingleGeneratorComesBackMonic) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto g = vec(drl.homogenized, "3*x^2 - y*h");
  for (auto cfg : {StrategyConfig::selfSat(), StrategyConfig::homogeneous(),
                   StrategyConfig::weakSat(WeakSatPolicy::kYMultiplyToReduce)}) {
    auto r = buchberger<Q>(std::vector<V>{g}, cfg);
    EXPECT_EQ(r.reduced, std::vector<V>{testing::monic(g)});
    EXPECT_EQ(r.stats.polyRed, 0u);
  }
}

TEST(Buchberger, ZeroAndDuplicateGeneratorsAreDropped) {
  auto drl = spaces(OrderSpec::degRevLex());
  std::vector<V> gens{vec(drl.homogenized, "x^2 - y*h"), V(drl.homogenized), vec(drl.homogenized, "2*x^2 - 2*y*h")};
  StrategyConfig cfg = StrategyConfig::selfSat();
  cfg.recordTranscript = true;
  auto r = buchberger<Q>(gens, cfg);
  EXPECT_EQ(r.basis.size(), 1u);
  EXPECT_EQ(std::count(r.transcript.lines().begin(), r.transcript.lines().end(), "GEN 0"), 1);
}

TEST(IsGroebnerBasis, Examples) {
  auto drl = spaces(OrderSpec::degRevLex());
  EXPECT_TRUE(isGroebnerBasis<Q>(vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h", "y^2*h - x*z*h"})));
  EXPECT_FALSE(isGroebnerBasis<Q>(vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h"})));
  auto lex = spaces(OrderSpec::lex());
  EXPECT_FALSE(isGroebnerBasis<Q>(vecs(lex.homogenized, {"x*h^2 - z^3", "y^3*h^3 - z^6"})));
  EXPECT_TRUE(isGroebnerBasis<Q>(vecs(lex.plain, {"x - z^3", "y^3 - z^6"})));
  EXPECT_TRUE(isGroebnerBasis<Q>(vecs(lex.plain, {"x*y - 1"})));
}

TEST(Interreduce, Examples) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto r = interreduce<Q>(vecs(drl.plain, {"x", "x + y"}));
  EXPECT_EQ(r, vecs(drl.plain, {"y", "x"}));
  EXPECT_EQ(interreduce<Q>(vecs(drl.plain, {"x^2 - y", "x^2 + x", "x*y"})), vecs(drl.plain, {"y", "x"}));
  auto G = vecs(drl.homogenized, {"2*x^2 - 2*y*h", "x*y - z*h + x^2", "y^2*h - x*z*h"});
  auto once = interreduce<Q>(G);
  EXPECT_EQ(interreduce<Q>(once), once);
  for (const auto& g : once) EXPECT_EQ(g.leadingCoefficient(), 1);
  EXPECT_TRUE(interreduce<Q>(std::vector<V>{V(drl.plain)}).empty());
}

TEST(ComputeInhomGB, ViceversaFirstPart) {
  auto lex = spaces(OrderSpec::lex());
  auto gens = vecs(lex.plain, {"x - z^3", "x^2 - y^3"});
  auto expected = vecs(lex.plain, {"y^3 - z^6", "x - z^3"});
  // Membership: y^3 - z^6 = (x + z^3)(x - z^3) - (x^2 - y^3).
  PowerProduct one(3), x{1, 0, 0}, z3{0, 0, 3};
  EXPECT_EQ(gens[0].multiplied(x) + gens[0].multiplied(z3) - gens[1], expected[0]);
  for (auto cfg : {StrategyConfig::selfSat(), StrategyConfig::homogeneous(),
                   StrategyConfig::weakSat(WeakSatPolicy::kYMultiplyToReduce),
                   StrategyConfig::weakSat(WeakSatPolicy::kSaturateFinal), StrategyConfig::fuzzed(3)}) {
    auto r = computeInhomGB<Q>(gens, cfg);
    EXPECT_EQ(r.basis, expected);
  }
  EXPECT_EQ(computePlainGB<Q>(gens, StrategyConfig::sugar()).basis, expected);
}

TEST(ComputeInhomGB, HomogeneousInputMatchesPlainBuchberger) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto gens = vecs(drl.plain, {"x^2 - y*z", "x*y - z^2"});
  StrategyConfig plain = StrategyConfig::sugar();
  auto ref = buchberger<Q>(gens, plain).reduced;
  for (auto cfg : {StrategyConfig::selfSat(), StrategyConfig::homogeneous()})
    EXPECT_EQ(computeInhomGB<Q>(gens, cfg).basis, ref);
}

TEST(Refusals, NonPositiveGradingAndOrdering) {
  auto bad = FreeModule<Q>::create(Q{}, RingContext({"x", "y"}, Grading({{1, -1}})), OrderSpec::lex());
  EXPECT_THROW(buchberger<Q>(bad, vecs(bad, {"x - y"}), StrategyConfig::sugar()), RefusedError);
  auto neg = FreeModule<Q>::create(Q{}, RingContext({"x", "y"}, Grading::standard(2)),
                                   OrderSpec::matrix({{-1, 0}, {0, 1}}));
  EXPECT_THROW(buchberger<Q>(neg, vecs(neg, {"x - y"}), StrategyConfig::sugar()), RefusedError);
  auto drl = spaces(OrderSpec::degRevLex());
  EXPECT_THROW(buchberger<Q>(vecs(drl.plain, {"x - y"}), StrategyConfig::selfSat()), DomainError);
  EXPECT_THROW(buchberger<Q>(vecs(drl.homogenized, {"x^2 - y"}), StrategyConfig::selfSat()), DomainError);
}

TEST(Refusals, DeadlineIsATimeout) {
  StrategyConfig cfg = StrategyConfig::selfSat();
  cfg.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  auto spec = generateCyclic(5);
  auto sp = makeSpaces(Q{}, spec.context(), spec.ordering);
  EXPECT_THROW(computeInhomGB<Q>(toVectors(spec, sp.plain), cfg), TimeoutError);
}

TEST(Determinism, IdenticalTranscriptsAndCounters) {
  auto spec = generateCyclic(4);
  auto sp = makeSpaces(Q{}, spec.context(), spec.ordering);
  auto gens = toVectors(spec, sp.plain);
  for (auto cfg : {StrategyConfig::selfSat(), StrategyConfig::homogeneous(), StrategyConfig::fuzzed(17)}) {
    cfg.recordTranscript = true;
    auto a = computeInhomGB<Q>(gens, cfg);
    auto b = computeInhomGB<Q>(gens, cfg);
    EXPECT_EQ(a.run.transcript.str(), b.run.transcript.str());
    EXPECT_TRUE(a.run.stats.sameCounters(b.run.stats));
    EXPECT_FALSE(a.run.transcript.empty());
  }
}

TEST(Counters, GeneratorsAreNotPairs) {
  auto drl = spaces(OrderSpec::degRevLex());
  auto gens = vecs(drl.homogenized, {"x^2 - y*h", "x*y - z*h"});
  StrategyConfig cfg = StrategyConfig::selfSat();
  cfg.coprime = cfg.chain = false;
  auto r = buchberger<Q>(gens, cfg);
  // Pairs (0,1), then (0,2) and (1,2) once y^2 - xz arrives; the basis has 3 elements.
  EXPECT_EQ(r.stats.polyRed, 3u);
  EXPECT_EQ(r.stats.pairsIns, 3u);
  EXPECT_EQ(r.stats.gbLen, 3u);
}

std::vector<V> randomIdeal(const ModulePtr<Q>& plain, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<V> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    auto v = testing::randomVector(plain, rng, 4, 3, 2);
    if (!v.isZero()) gens.push_back(std::move(v));
  }
  return gens;
}

TEST(StrategyIndependence, RandomSmallIdeals) {
  std::mt19937_64 rng(4242);
  for (auto sigma : {OrderSpec::degRevLex(), OrderSpec::lex()}) {
    auto sp = makeSpaces(Q{}, RingContext(testing::names(3), Grading::standard(3)), sigma);
    for (int i = 0; i < 25; ++i) {
      auto gens = randomIdeal(sp.plain, rng);
      SCOPED_TRACE(testing::strings(gens).front());
      auto ref = computePlainGB<Q>(gens, StrategyConfig::sugar()).basis;
      ASSERT_TRUE(isGroebnerBasis<Q>(ref));
      for (const auto& g : gens) ASSERT_TRUE(remainder<Q>(g, ref).isZero());
      for (auto cfg : {StrategyConfig::selfSat(), StrategyConfig::homogeneous(),
                       StrategyConfig::weakSat(WeakSatPolicy::kYMultiplyToReduce), StrategyConfig::fuzzed(i)}) {
        auto r = computeInhomGB<Q>(gens, cfg);
        ASSERT_EQ(r.basis, ref);
      }
    }
  }
}

TEST(SelfSat, OutputsAreSaturatedAndAGroebnerBasis) {
  std::mt19937_64 rng(77);
  auto sp = makeSpaces(Q{}, RingContext(testing::names(3), Grading::standard(3)), OrderSpec::degRevLex());
  for (int i = 0; i < 25; ++i) {
    auto gens = randomIdeal(sp.plain, rng);
    auto r = computeInhomGB<Q>(gens, StrategyConfig::selfSat());
    for (const auto& b : r.run.basis) ASSERT_EQ(saturateVector(b.vector), b.vector);
    std::vector<V> vs;
    for (const auto& b : r.run.basis) vs.push_back(b.vector);
    ASSERT_TRUE(isGroebnerBasis<Q>(vs));
  }
}

TEST(WeakSat, FuzzedPoliciesStillGiveDehomBases) {
  std::mt19937_64 rng(5);
  auto sp = makeSpaces(Q{}, RingContext(testing::names(3), Grading::standard(3)), OrderSpec::degRevLex());
  for (int i = 0; i < 20; ++i) {
    auto gens = randomIdeal(sp.plain, rng);
    auto r = computeInhomGB<Q>(gens, StrategyConfig::fuzzed(1000 + i));
    std::vector<V> deh;
    for (const auto& b : r.run.basis) deh.push_back(dehomogenize(b.vector, sp.plain));
    ASSERT_TRUE(isGroebnerBasis<Q>(deh));
  }
}

TEST(PrimeField, MatchesRationalsOnSmallInput) {
  auto spec = generateCyclic(5);
  auto q = makeSpaces(Q{}, spec.context(), spec.ordering);
  auto p = makeSpaces(PrimeField{}, spec.context(), spec.ordering);
  auto rq = computeInhomGB<Q>(toVectors(spec, q.plain), StrategyConfig::selfSat());
  auto rp = computeInhomGB<PrimeField>(toVectors(spec, p.plain), StrategyConfig::selfSat());
  ASSERT_EQ(rq.basis.size(), rp.basis.size());
  for (std::size_t i = 0; i < rq.basis.size(); ++i) EXPECT_EQ(rq.basis[i].leadingTerm(), rp.basis[i].leadingTerm());
}

}  // namespace
}  // namespace satgb
