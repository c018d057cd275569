// Copyright 2026 The ogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace ogame {
namespace {

using test::at;

const Carrier kCoin = test::discrete("Coin", {"H", "T"});
const Carrier kSetPay = Carrier::payoff(Mode::set, {Rational(0), Rational(1)});
const Carrier kSetOne = Carrier::unit(Mode::set);
const Carrier kAB = test::flat("D", {"a", "b"});
const Carrier kFlatPay = Carrier::payoff(Mode::dcpo, {Rational(0), Rational(1)});
const Carrier kFlatOne = Carrier::unit(Mode::dcpo);

// Profiles of g in equilibrium against k, as a sorted list.
template <class Cat>
std::vector<ProfileVec> eqs(const OpenGame<Cat>& g, const typename Cat::Context& k) {
  auto out = og_equilibria(g, k);
  std::sort(out.begin(), out.end());
  return out;
}

// Same strategies, and the same verdict for every profile and context.
template <class Cat>
void expect_same_relation(const OpenGame<Cat>& lhs, const OpenGame<Cat>& rhs) {
  ASSERT_EQ(lhs.src(), rhs.src());
  ASSERT_EQ(lhs.dst(), rhs.dst());
  ASSERT_EQ(lhs.strategy_count(), rhs.strategy_count());
  for (const auto& k : enumerate_contexts<Cat>(lhs.src(), lhs.dst())) EXPECT_EQ(eqs(lhs, k), eqs(rhs, k)) << k.show();
}

TEST(Pure, SingleProfileAlwaysWins) {
  const Interface a{kCoin, kCoin};
  Rng rng(1);
  auto g = og_pure<LensCat>(random_lens(rng, a, a));
  EXPECT_EQ(g.strategy_count(), 1u);
  for (const auto& k : enumerate_contexts<LensCat>(a, a)) EXPECT_TRUE(g.equilibrium({}, k));
  EXPECT_EQ(og_winning(g).size(), 1u);
  const Interface b{kAB, kFlatOne};
  auto h = og_pure<IntCat>(random_int(rng, b, b));
  EXPECT_EQ(og_winning(h).size(), 1u);
}

TEST(Pure, CompositionIsFaithful) {
  Rng rng(2);
  const Interface a{kCoin, kCoin}, b{kCoin, kSetOne}, c{kSetOne, kCoin};
  for (int i = 0; i < 10; ++i) {
    auto m1 = random_lens(rng, a, b), m2 = random_lens(rng, b, c);
    auto seq = og_seq(og_pure<LensCat>(m1), og_pure<LensCat>(m2));
    expect_same_relation(seq, og_pure<LensCat>(lens_compose(m2, m1)));
    EXPECT_EQ(seq.label({}), lens_compose(m2, m1));
  }
}

TEST(Decision, StrictArgmax) {
  auto d = og_decision<LensCat>(kSetOne, kCoin, kSetPay);
  const Interface src{kSetOne, kSetOne}, dst{kCoin, kSetPay};
  auto k = LensContext(src, dst, 0, test::table(kCoin, kSetPay, {payoff_elem(kSetPay, Rational(1)), payoff_elem(kSetPay, Rational(0))}));
  auto e = og_equilibria(d, k);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(d.show_profile(e[0]), std::vector<std::string>{"H"});
}

TEST(Decision, StrategyCounts) {
  auto three = test::discrete("Three", {"x", "y", "z"});
  EXPECT_EQ(og_decision<LensCat>(three, kCoin, kSetPay).strategy_count(), 8u);
  EXPECT_EQ(og_decision<LensCat>(kCoin, three, kSetPay).strategy_count(), 9u);
  EXPECT_EQ(og_decision<IntCat>(kAB, kAB, kFlatPay).strategy_count(), 11u);
}

TEST(Decision, EmptyCarrierRejected) {
  EXPECT_THROW(og_decision<LensCat>(Carrier(), kCoin, kSetPay), ValidationError);
}

TEST(Decision, IntMoveIsLeastFixpoint) {
  // History echoes the move and an undefined move earns an undefined payoff,
  // so a strategy wins iff its play converges.
  auto d = og_decision<IntCat>(kAB, kAB, kFlatPay);
  const Interface src{kAB, kFlatOne}, dst{kAB, kFlatPay};
  const Carrier out = product(src.fwd, dst.bwd);
  auto rev = IntMorphism::build(dst, src, [&](Elem y, Elem) { return out.pair(y, y == 0 ? Elem{0} : payoff_elem(kFlatPay, Rational(0))); });
  TracedContext k{rev};
  auto maps = enumerate_maps(kAB, kAB);
  for (std::uint32_t i = 0; i < maps.size(); ++i) {
    Trace trace;
    ProfileVec p{i};
    EXPECT_TRUE(d.equilibrium(p, k, &trace) == (kleene_fix(maps[i]).value != 0)) << maps[i].show();
    ASSERT_EQ(trace.size(), 1u);
    EXPECT_EQ(trace[0].y, kAB.show(kleene_fix(maps[i]).value));
  }
}

TEST(Seq, IdentityOnTheRight) {
  auto d = og_decision<LensCat>(kCoin, kCoin, kSetPay);
  expect_same_relation(og_seq(d, og_identity<LensCat>(d.dst())), d);
  expect_same_relation(og_seq(og_identity<LensCat>(d.src()), d), d);
}

TEST(Seq, PayoffPushedThroughContinuation) {
  auto three = test::discrete("Three", {"x", "y", "z"});
  auto d = og_decision<LensCat>(kCoin, three, kSetPay);
  const Rational f[] = {Rational(0), Rational(1), Rational(1)};
  auto score = Lens::build({three, kSetPay}, unit_interface(Mode::set), [](Elem) { return 0; },
                           [&](Elem y, Elem) { return payoff_elem(kSetPay, f[y]); });
  auto g = og_seq(d, og_pure<LensCat>(score));
  const auto maps = enumerate_maps(kCoin, three);
  for (const auto& k : enumerate_contexts<LensCat>(g.src(), g.dst())) {
    for (std::uint32_t i = 0; i < maps.size(); ++i) {
      ProfileVec p{i};
      EXPECT_EQ(g.equilibrium(p, k), f[maps[i](k.history)] == Rational(1));
    }
  }
}

TEST(Seq, MismatchNamesBothSides) {
  auto d = og_decision<LensCat>(kSetOne, kCoin, kSetPay);
  try {
    og_seq_auto(d, d);
    FAIL() << "expected a mismatch";
  } catch (const InterfaceMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("Coin"), std::string::npos);
  }
  EXPECT_THROW(og_seq(d, d), InterfaceMismatch);
}

TEST(Tensor, UnitFactorIsNeutral) {
  auto d = og_decision<LensCat>(kCoin, kCoin, kSetPay);
  const auto unit = unit_interface(Mode::set);
  auto t = og_tensor(d, og_identity<LensCat>(unit));
  auto wrapped = og_seq(og_seq(og_canonical<LensCat>(d.src(), t.src()), t), og_canonical<LensCat>(t.dst(), d.dst()));
  expect_same_relation(wrapped, d);
}

TEST(Tensor, SeparablePayoffsGiveProductOfEquilibria) {
  auto three = test::discrete("Three", {"x", "y", "z"});
  auto d1 = og_decision<LensCat>(kSetOne, kCoin, kSetPay);
  auto d2 = og_decision<LensCat>(kSetOne, three, kSetPay);
  auto g = og_tensor(d1, d2);
  ASSERT_EQ(g.leaves().size(), 2u);
  const Interface one = unit_interface(Mode::set);
  for (std::uint32_t m1 = 0; m1 < 4; ++m1) {
    for (std::uint32_t m2 = 0; m2 < 8; ++m2) {
      auto f1 = [&](Elem y) { return (m1 >> y) & 1u; };
      auto f2 = [&](Elem y) { return (m2 >> y) & 1u; };
      const auto& yy = g.dst().fwd;
      const auto& rr = g.dst().bwd;  // R2 × R1
      auto cont = FnTable::tabulate(yy, rr, [&](Elem y) {
        return rr.pair(payoff_elem(kSetPay, Rational(f2(yy.second(y)))), payoff_elem(kSetPay, Rational(f1(yy.first(y)))));
      });
      LensContext k(g.src(), g.dst(), 0, cont);
      std::vector<ProfileVec> oracle;
      auto best = [](auto f, Elem n, Elem y) {
        for (Elem z = 0; z < n; ++z) if (f(z) > f(y)) return false;
        return true;
      };
      for (std::uint32_t a = 0; a < 2; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
          if (best(f1, 2, a) && best(f2, 3, b)) oracle.push_back({a, b});
      EXPECT_EQ(eqs(g, k), oracle);
    }
  }
}

TEST(Transpose, LiftsSwapVariance) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto x = random_carrier(rng, Mode::dcpo, 3), y = random_carrier(rng, Mode::dcpo, 3);
    auto f = random_table(rng, x, y);
    auto t = og_transpose(og_pure<IntCat>(lens_to_int(lift(f, Variance::cov))));
    auto c = og_pure<IntCat>(lens_to_int(lift(f, Variance::contra)));
    EXPECT_EQ(t.label({}), c.label({}));
    expect_same_relation(t, c);
  }
}

TEST(Transpose, InvolutionAndCupCap) {
  auto d = og_decision<IntCat>(kAB, kAB, kFlatPay);
  expect_same_relation(og_transpose(og_transpose(d)), d);
  auto direct = og_transpose(d);
  auto wired = og_transpose_cupcap(d);
  expect_same_relation(direct, wired);
  for (std::uint32_t i = 0; i < d.strategy_count(); ++i) {
    ProfileVec p{i};
    EXPECT_EQ(direct.label(p), wired.label(p));
  }
}

TEST(Feedback, OverUnitIsIdentity) {
  auto d = og_decision<IntCat>(kAB, kAB, kFlatPay);
  const auto unit = unit_interface(Mode::dcpo);
  auto padded = og_seq(og_seq(og_canonical<IntCat>(tensor(d.src(), unit), d.src()), d),
                       og_canonical<IntCat>(d.dst(), tensor(d.dst(), unit)));
  expect_same_relation(og_feedback(padded), d);
}

TEST(Feedback, SwapTracesToIdentity) {
  const Interface u{kAB, kFlatOne};
  auto g = og_feedback(og_pure<IntCat>(int_symmetry(u, u)));
  EXPECT_EQ(g.label({}), int_trace(int_symmetry(u, u)));
  EXPECT_EQ(g.label({}), int_id(u));
  expect_same_relation(g, og_pure<IntCat>(int_id(u)));
}

TEST(Winning, TwoMovesNeverWin) {
  EXPECT_TRUE(og_winning(og_decision<LensCat>(kSetOne, kCoin, kSetPay)).empty());
  EXPECT_TRUE(og_winning(og_decision<LensCat>(kCoin, kCoin, kSetPay)).empty());
}

TEST(Winning, SingleMoveWins) {
  auto only = test::discrete("Only", {"o"});
  EXPECT_EQ(og_winning(og_decision<LensCat>(kCoin, only, kSetPay)).size(), 1u);
}

TEST(Equilibria, BudgetEnforced) {
  auto g = og_tensor(og_decision<LensCat>(kCoin, kCoin, kSetPay), og_decision<LensCat>(kCoin, kCoin, kSetPay));
  auto k = enumerate_contexts<LensCat>(g.src(), g.dst()).front();
  EXPECT_THROW(og_equilibria(g, k, 10), BudgetExceeded);
  EXPECT_NO_THROW(og_equilibria(g, k, 16));
}

TEST(Equilibria, TrivialContextNeedsScalarGame) {
  EXPECT_THROW(trivial_context<LensCat>({kCoin, kSetOne}, unit_interface(Mode::set)), InterfaceMismatch);
}

TEST(Profiles, LexicographicOrder) {
  auto g = og_tensor(og_decision<LensCat>(kSetOne, kCoin, kSetPay), og_decision<LensCat>(kSetOne, kCoin, kSetPay));
  std::vector<ProfileVec> seen;
  for_each_profile(g, [&](Profile p) { seen.emplace_back(p.begin(), p.end()); });
  EXPECT_EQ(seen, (std::vector<ProfileVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_THROW(g.label(ProfileVec{0}), ValidationError);
  EXPECT_THROW(g.label(ProfileVec{0, 2}), ValidationError);
}

}  // namespace
}  // namespace ogame
