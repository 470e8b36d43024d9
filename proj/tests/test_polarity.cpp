#include <gtest/gtest.h>

#include <set>

#include "mvg/polarity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mvg;

namespace {

TruthValue v(std::size_t i) { return TruthValue(i); }

struct Instance {
  AlgebraPtr A;
  DomainPtr objs, attrs;
  APolarity P;
};

Instance random_polarity(gen::Rng& r) {
  auto A = gen::algebra(r, 5);
  auto O = gen::domain("a", 1 + r.below(4)), X = gen::domain("x", 1 + r.below(4));
  return {A, O, X, APolarity(gen::relation(r, A, O, X))};
}

// Crisp context a1-x1, a2-x2, a3-x1, a3-x2; {a1, a2} is not a stable extent.
APolarity crisp_three() {
  auto A = make_lukasiewicz_chain(2);
  auto O = Domain::make({"a1", "a2", "a3"}), X = Domain::make({"x1", "x2", "x3"});
  return APolarity(ARelation(A, O, X, {v(1), v(0), v(0), v(0), v(1), v(0), v(1), v(1), v(0)}));
}

// Concepts found by enumerating extents instead of intents.
std::vector<oracle::Vec> concepts_from_objects(const APolarity& P) {
  const TruthAlgebra& A = *P.algebra();
  oracle::Alg O{A};
  oracle::Mat I = oracle::raw(P.incidence());
  std::set<oracle::Vec> found;
  std::vector<std::size_t> digits(P.objects()->size(), 0);
  while (true) {
    oracle::Vec f(digits.begin(), digits.end());
    if (oracle::down(O, I, oracle::up(O, I, f)) == f) found.insert(oracle::up(O, I, f));
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < A.size()) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace

TEST(Galois, EmptyExtentMapsToFullIntent) {
  gen::Rng r(1);
  for (int t = 0; t < 50; ++t) {
    auto in = random_polarity(r);
    EXPECT_EQ(up(in.P, AValuedSet::constant(in.A, in.objs, in.A->bottom())),
              AValuedSet::constant(in.A, in.attrs, in.A->top()));
  }
}

TEST(Galois, MapsMatchOracle) {
  gen::Rng r(2);
  for (int t = 0; t < 200; ++t) {
    auto in = random_polarity(r);
    oracle::Alg O{*in.A};
    auto I = oracle::raw(in.P.incidence());
    auto f = gen::set(r, in.A, in.objs);
    auto u = gen::set(r, in.A, in.attrs);
    EXPECT_EQ(oracle::raw(up(in.P, f)), oracle::up(O, I, oracle::raw(f)));
    EXPECT_EQ(oracle::raw(down(in.P, u)), oracle::down(O, I, oracle::raw(u)));
  }
}

TEST(Galois, IdentityAndTripleMapsOnRandomInstances) {
  gen::Rng r(3);
  for (int t = 0; t < 600; ++t) {
    auto in = random_polarity(r);
    auto f = gen::set(r, in.A, in.objs);
    auto u = gen::set(r, in.A, in.attrs);
    EXPECT_EQ(subsethood(f, down(in.P, u)), subsethood(u, up(in.P, f)));
    EXPECT_EQ(up(in.P, down(in.P, up(in.P, f))), up(in.P, f));
    EXPECT_EQ(down(in.P, up(in.P, down(in.P, u))), down(in.P, u));
  }
}

TEST(Galois, TripleMapsExhaustiveOnLukasiewiczThree) {
  auto A = make_lukasiewicz_chain(3);
  auto Z = gen::domain("z", 2);
  gen::for_each_relation(A, Z, [&](const ARelation& I) {
    APolarity P(I);
    for_each_subset(A, Z, [&](const AValuedSet& f) {
      ASSERT_EQ(up(P, down(P, up(P, f))), up(P, f));
    });
    for_each_subset(A, Z, [&](const AValuedSet& u) {
      ASSERT_EQ(down(P, up(P, down(P, u))), down(P, u));
    });
  });
}

TEST(Closure, OperatorLaws) {
  gen::Rng r(4);
  for (int t = 0; t < 600; ++t) {
    auto in = random_polarity(r);
    auto u = gen::set(r, in.A, in.attrs), w = gen::set(r, in.A, in.attrs);
    auto f = gen::set(r, in.A, in.objs);
    auto cu = close_intent(in.P, u);
    EXPECT_TRUE(subseteq(u, cu));
    EXPECT_EQ(close_intent(in.P, cu), cu);
    EXPECT_TRUE(subseteq(cu, close_intent(in.P, pointwise_join(u, w))));
    auto cf = close_extent(in.P, f);
    EXPECT_TRUE(subseteq(f, cf));
    EXPECT_EQ(close_extent(in.P, cf), cf);
    EXPECT_TRUE(is_stable_intent(in.P, cu));
    EXPECT_TRUE(is_stable_extent(in.P, cf));
    EXPECT_TRUE(is_stable_intent(in.P, AValuedSet::constant(in.A, in.attrs, in.A->top())));
  }
}

TEST(Concepts, FactoriesAndUnits) {
  gen::Rng r(5);
  for (int t = 0; t < 200; ++t) {
    auto in = random_polarity(r);
    const Concept top = top_concept(in.P), bot = bottom_concept(in.P);
    EXPECT_EQ(top.extent(), AValuedSet::constant(in.A, in.objs, in.A->top()));
    EXPECT_EQ(bot.intent(), AValuedSet::constant(in.A, in.attrs, in.A->top()));
    EXPECT_EQ(concept_of_intent(in.P, AValuedSet::constant(in.A, in.attrs, in.A->top())), bot);
    auto c = concept_of_intent(in.P, gen::set(r, in.A, in.attrs));
    EXPECT_EQ(concept_of_intent(in.P, c.intent()), c);
    EXPECT_EQ(concept_of_extent(in.P, c.extent()), c);
    EXPECT_NO_THROW(Concept::checked(in.P, c.extent(), c.intent()));
    EXPECT_EQ(concept_meet(in.P, c, c), c);
    EXPECT_EQ(concept_join(in.P, c, c), c);
    EXPECT_EQ(concept_meet(in.P, c, top), c);
    EXPECT_EQ(concept_join(in.P, c, bot), c);
    EXPECT_TRUE(concept_leq(bot, c));
    EXPECT_TRUE(concept_leq(c, top));
  }
}

TEST(Concepts, CheckedRejectsUnstablePair) {
  APolarity P = crisp_three();
  auto A = P.algebra();
  AValuedSet f(A, P.objects(), {v(1), v(1), v(0)});  // {a1, a2}
  try {
    Concept::checked(P, f, up(P, f));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unstable);
  }
}

TEST(Concepts, PolarityMismatchRejected) {
  gen::Rng r(6);
  auto a = random_polarity(r);
  auto P2 = APolarity(gen::relation(r, a.A, gen::domain("q", 5), a.attrs));
  auto c = top_concept(a.P);
  EXPECT_THROW(concept_meet(P2, c, c), Error);
}

TEST(Concepts, MeetJoinAreGlbLubOverEnumeration) {
  gen::Rng r(7);
  for (int t = 0; t < 500; ++t) {
    auto in = random_polarity(r);
    auto cs = enumerate_concepts(in.P);
    const Concept& c = cs[r.below(cs.size())];
    const Concept& d = cs[r.below(cs.size())];
    const Concept m = concept_meet(in.P, c, d), j = concept_join(in.P, c, d);
    EXPECT_NE(std::find(cs.begin(), cs.end(), m), cs.end());
    EXPECT_NE(std::find(cs.begin(), cs.end(), j), cs.end());
    for (const Concept& e : cs) {
      bool lower = concept_leq(e, c) && concept_leq(e, d);
      EXPECT_EQ(lower, concept_leq(e, m));
      bool upper = concept_leq(c, e) && concept_leq(d, e);
      EXPECT_EQ(upper, concept_leq(j, e));
    }
  }
}

TEST(Enumeration, AgreesWithObjectSideBruteForce) {
  gen::Rng r(8);
  for (int t = 0; t < 150; ++t) {
    auto in = random_polarity(r);
    auto cs = enumerate_concepts(in.P);
    std::set<oracle::Vec> intents;
    for (const auto& c : cs) intents.insert(oracle::raw(c.intent()));
    EXPECT_EQ(intents.size(), cs.size()) << "duplicates";
    auto expected = concepts_from_objects(in.P);
    EXPECT_EQ(std::vector<oracle::Vec>(intents.begin(), intents.end()), expected);
  }
}

TEST(Enumeration, BooleanIdentityContext) {
  auto A = make_lukasiewicz_chain(2);
  auto O = Domain::make({"a1", "a2"}), X = Domain::make({"x1", "x2"});
  APolarity P(ARelation(A, O, X, {v(1), v(0), v(0), v(1)}));
  auto cs = enumerate_concepts(P);
  EXPECT_EQ(cs.size(), concepts_from_objects(P).size());
  EXPECT_EQ(cs.size(), 4u);
  EXPECT_EQ(cs.front(), bottom_concept(P));
  EXPECT_EQ(cs.back(), top_concept(P));
}

TEST(Enumeration, ClosedUnderMeetAndJoinAndContainsUnits) {
  gen::Rng r(9);
  for (int t = 0; t < 100; ++t) {
    auto in = random_polarity(r);
    auto cs = enumerate_concepts(in.P);
    EXPECT_NE(std::find(cs.begin(), cs.end(), top_concept(in.P)), cs.end());
    EXPECT_NE(std::find(cs.begin(), cs.end(), bottom_concept(in.P)), cs.end());
    for (const auto& c : cs)
      for (const auto& d : cs) {
        ASSERT_NE(std::find(cs.begin(), cs.end(), concept_meet(in.P, c, d)), cs.end());
        ASSERT_NE(std::find(cs.begin(), cs.end(), concept_join(in.P, c, d)), cs.end());
      }
    // Ordering is a linear extension of the concept order.
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t k = i + 1; k < cs.size(); ++k) EXPECT_FALSE(concept_leq(cs[k], cs[i]) && !(cs[k] == cs[i]));
  }
}

TEST(Enumeration, BudgetGuardrail) {
  auto A = make_lukasiewicz_chain(11);
  auto O = gen::domain("a", 2), X = gen::domain("x", 7);
  APolarity P(ARelation::generate(A, O, X, [&](auto, auto) { return A->top(); }));
  try {
    enumerate_concepts(P, 1000);
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.required(), 19487171u);  // 11^7
    EXPECT_EQ(e.budget(), 1000u);
    EXPECT_NE(std::string(e.what()).find("19487171"), std::string::npos);
  }
}

TEST(ICompatibility, IncidenceAndConverseAreCompatible) {
  gen::Rng r(10);
  for (int t = 0; t < 200; ++t) {
    auto in = random_polarity(r);
    const ARelation& I = in.P.incidence();
    auto rep = check_I_compatibility(in.P, I, I.converse());
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.instances, 2 * in.A->size() * (in.objs->size() + in.attrs->size()));
  }
}

TEST(ICompatibility, FrozenCrispCounterexample) {
  APolarity P = crisp_three();
  auto A = P.algebra();
  // Rbox relates only a3 to x3: its lifted singleton {1/a3} is the intent {x3},
  // whose closure is the full attribute set.
  ARelation rbox(A, P.objects(), P.attributes(), {v(0), v(0), v(0), v(0), v(0), v(0), v(0), v(0), v(1)});
  auto rep = check_I_compatibility(P, rbox, P.incidence().converse());
  ASSERT_EQ(rep.failures.size(), 1u);
  EXPECT_EQ(rep.failures[0].family, "Rbox(1)[{a/o}]");
  EXPECT_EQ(rep.failures[0].values, std::vector<TruthValue>{A->top()});
  EXPECT_EQ(rep.failures[0].element, "a3");
  EXPECT_EQ(rep.failures[0].point, "x1");
  try {
    EnrichedAPolarity(P, rbox, P.incidence().converse());
    FAIL();
  } catch (const CompatibilityError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Incompatible);
    EXPECT_EQ(e.report().failures.size(), 1u);
  }
  EXPECT_NO_THROW(EnrichedAPolarity(P, rbox, P.incidence().converse(), Checking::Skip));
}

TEST(ICompatibility, EmptyAttributeSetIsVacuous) {
  auto A = make_lukasiewicz_chain(3);
  auto O = gen::domain("a", 2), X = Domain::make({});
  APolarity P(ARelation(A, O, X, {}));
  ARelation rbox(A, O, X, {}), rdia(A, X, O, {});
  auto rep = check_I_compatibility(P, rbox, rdia);
  EXPECT_TRUE(rep.failures.empty());
}

TEST(ComplexAlgebra, BoxOverIncidenceIsIdentity) {
  gen::Rng r(12);
  for (int t = 0; t < 100; ++t) {
    auto in = random_polarity(r);
    const ARelation& I = in.P.incidence();
    EnrichedAPolarity EP(in.P, I, I.converse());
    EXPECT_EQ(box_op(EP, top_concept(in.P)), top_concept(in.P));
    auto c = concept_of_intent(in.P, gen::set(r, in.A, in.attrs));
    EXPECT_EQ(box_op(EP, c), c);
    EXPECT_EQ(dia_op(EP, c), c);
  }
}

TEST(ComplexAlgebra, OperatorsPreserveMeetsAndJoinsOnCompatibleRandomContexts) {
  gen::Rng r(14);
  int lattices = 0;
  for (int t = 0; t < 3000 && lattices < 60; ++t) {
    auto in = random_polarity(r);
    ARelation rbox = gen::relation(r, in.A, in.objs, in.attrs);
    ARelation rdia = gen::relation(r, in.A, in.attrs, in.objs);
    if (!check_I_compatibility(in.P, rbox, rdia).ok()) continue;
    ++lattices;
    EnrichedAPolarity EP(in.P, rbox, rdia);
    auto cs = enumerate_concepts(in.P);
    for (const auto& c : cs) ASSERT_NE(std::find(cs.begin(), cs.end(), box_op(EP, c)), cs.end());
    EXPECT_EQ(box_op(EP, top_concept(in.P)), top_concept(in.P));
    EXPECT_EQ(dia_op(EP, bottom_concept(in.P)), bottom_concept(in.P));
    for (const auto& c : cs)
      for (const auto& d : cs) {
        ASSERT_EQ(box_op(EP, concept_meet(in.P, c, d)), concept_meet(in.P, box_op(EP, c), box_op(EP, d)));
        ASSERT_EQ(dia_op(EP, concept_join(in.P, c, d)), concept_join(in.P, dia_op(EP, c), dia_op(EP, d)));
      }
  }
  EXPECT_GE(lattices, 20);
}
