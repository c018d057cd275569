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

#include "support.hpp"

namespace ogame {
namespace {

using test::at;

const Carrier kCoin = test::discrete("Coin", {"H", "T"});
const Carrier kPay = Carrier::payoff(Mode::set, {Rational(0), Rational(1)});

Interface small(Rng& rng, Mode m) { return random_interface(rng, m, 2); }

TEST(LensContext, IdentityActionIsTrivial) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    auto a = small(rng, Mode::set), b = small(rng, Mode::set);
    auto k = LensCat::random_context(rng, a, b);
    EXPECT_EQ(LensCat::ctx_map(lens_id(a), lens_id(b), k), k);
  }
}

TEST(LensContext, ContinuationPulledThroughLens) {
  const Interface cp{kCoin, kPay};
  const Interface one = unit_interface(Mode::set);
  const Elem h = at(kCoin, "H"), t = at(kCoin, "T");
  auto k = LensContext(one, cp, 0, test::table(kCoin, kPay, {payoff_elem(kPay, Rational(1)), payoff_elem(kPay, Rational(0))}));
  auto flip = Lens::build(cp, cp, [&](Elem y) { return y == h ? t : h; }, [](Elem, Elem r) { return r; });
  auto k2 = LensCat::ctx_map(lens_id(one), flip, k);
  for (Elem y : {h, t}) EXPECT_EQ(k2.continuation(y), flip.update(y, k.continuation(flip.view()(y))));
  EXPECT_EQ(k2.continuation(t), payoff_elem(kPay, Rational(1)));
}

TEST(LensContext, HistoryPushedForward) {
  const Interface a{kCoin, Carrier::unit(Mode::set)};
  auto flip = lift(test::table(kCoin, kCoin, {1, 0}), Variance::cov);
  auto k = LensContext(a, a, at(kCoin, "H"), constant_table(kCoin, Carrier::unit(Mode::set), 0));
  EXPECT_EQ(LensCat::ctx_map(flip, lens_id(a), k).history, at(kCoin, "T"));
}

TEST(LensContext, ProjectionOverUnitFactor) {
  Rng rng(2);
  const auto unit = unit_interface(Mode::set);
  for (int i = 0; i < 20; ++i) {
    auto x = small(rng, Mode::set), y = small(rng, Mode::set);
    auto k = LensCat::random_context(rng, x, y);
    auto padded = LensCat::ctx_map(lens_canonical(x, tensor(x, unit)), lens_canonical(tensor(y, unit), y), k);
    EXPECT_EQ(LensCat::proj_left(lens_id(unit), padded), k);
    auto padded_left = LensCat::ctx_map(lens_canonical(x, tensor(unit, x)), lens_canonical(tensor(unit, y), y), k);
    EXPECT_EQ(ctx_proj_right<LensCat>(lens_id(unit), padded_left), k);
  }
}

TEST(LensContext, RightProjectionMatchesDirectFormula) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    auto x1 = small(rng, Mode::set), x2 = small(rng, Mode::set), y1 = small(rng, Mode::set), y2 = small(rng, Mode::set);
    auto m1 = random_lens(rng, x1, y1);
    auto k = LensCat::random_context(rng, tensor(x1, x2), tensor(y1, y2));
    const Elem played = m1.view()(k.src.fwd.first(k.history));
    auto cont = FnTable::tabulate(y2.fwd, y2.bwd, [&](Elem v) { return k.dst.bwd.first(k.continuation(k.dst.fwd.pair(played, v))); });
    EXPECT_EQ(ctx_proj_right<LensCat>(m1, k), LensContext(x2, y2, k.src.fwd.second(k.history), cont));
  }
}

template <class Cat>
void check_functor(std::uint64_t seed) {
  constexpr Mode m = std::is_same_v<Cat, LensCat> ? Mode::set : Mode::dcpo;
  Rng rng(seed);
  auto rm = [&](const Interface& s, const Interface& d) {
    if constexpr (std::is_same_v<Cat, LensCat>) return random_lens(rng, s, d);
    else return random_int(rng, s, d);
  };
  auto a = small(rng, m), x = small(rng, m), x2 = small(rng, m), b = small(rng, m), y = small(rng, m), y2 = small(rng, m);
  auto k = Cat::random_context(rng, a, b);
  auto l1 = rm(a, x), l2 = rm(x, x2), m1 = rm(y, b), m2 = rm(y2, y);
  EXPECT_EQ(Cat::ctx_map(Cat::compose(l2, l1), Cat::compose(m1, m2), k), Cat::ctx_map(l2, m2, Cat::ctx_map(l1, m1, k)));
}

TEST(Context, LensActionIsFunctorial) {
  for (std::uint64_t s = 1; s <= 40; ++s) check_functor<LensCat>(s);
}

TEST(Context, TracedActionIsFunctorial) {
  for (std::uint64_t s = 1; s <= 40; ++s) check_functor<IntCat>(s);
}

TEST(TracedContext, IdentityActionIsTrivial) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto a = small(rng, Mode::dcpo), b = small(rng, Mode::dcpo);
    auto k = IntCat::random_context(rng, a, b);
    EXPECT_EQ(IntCat::ctx_map(int_id(a), int_id(b), k), k);
  }
}

// Hand-rolled loop: feed y2+ and x2- around through κ and f until stable.
TEST(TracedContext, ProjectionMatchesLoopOracle) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    auto x1 = small(rng, Mode::dcpo), x2 = small(rng, Mode::dcpo), y1 = small(rng, Mode::dcpo), y2 = small(rng, Mode::dcpo);
    auto f = random_int(rng, x2, y2);
    auto k = IntCat::random_context(rng, tensor(x1, x2), tensor(y1, y2));
    const auto& kr = k.reverse;  // Y1⊗Y2 -> X1⊗X2
    auto got = IntCat::proj_left(f, k).reverse;
    for (Elem y1p = 0; y1p < y1.fwd.size(); ++y1p) {
      for (Elem x1m = 0; x1m < x1.bwd.size(); ++x1m) {
        Elem y2p = 0, x2m = 0;
        Elem x1p = 0, y1m = 0;
        for (;;) {
          auto [xo, yi] = kr(kr.src().fwd.pair(y1p, y2p), kr.dst().bwd.pair(x2m, x1m));
          x1p = kr.dst().fwd.first(xo);
          y1m = kr.src().bwd.second(yi);
          auto [ny2p, nx2m] = f(kr.dst().fwd.second(xo), kr.src().bwd.first(yi));
          if (ny2p == y2p && nx2m == x2m) break;
          y2p = ny2p;
          x2m = nx2m;
        }
        auto [gx, gy] = got(y1p, x1m);
        EXPECT_EQ(gx, x1p);
        EXPECT_EQ(gy, y1m);
      }
    }
  }
}

TEST(TracedContext, RightProjectionThroughSymmetry) {
  Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    auto x1 = small(rng, Mode::dcpo), x2 = small(rng, Mode::dcpo), y1 = small(rng, Mode::dcpo), y2 = small(rng, Mode::dcpo);
    auto f = random_int(rng, x1, y1);
    auto k = IntCat::random_context(rng, tensor(x1, x2), tensor(y1, y2));
    // Direct: trace the first factor after moving it to the back.
    auto swapped = int_compose(int_symmetry(x1, x2), int_compose(k.reverse, int_symmetry(y2, y1)));
    auto direct = int_trace(int_compose(int_tensor(int_id(x2), f), swapped));
    EXPECT_EQ(ctx_proj_right<IntCat>(f, k).reverse, direct);
  }
}

TEST(ContextEmbedding, ConstantHistoryIgnoresPayoff) {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    auto x = small(rng, Mode::dcpo), y = small(rng, Mode::dcpo);
    auto k = LensCat::random_context(rng, x, y);
    auto t = lensctx_to_intctx(k).reverse;
    for (Elem yf = 0; yf < y.fwd.size(); ++yf) {
      for (Elem s = 0; s < x.bwd.size(); ++s) {
        auto [h, r] = t(yf, s);
        EXPECT_EQ(h, k.history);
        EXPECT_EQ(r, k.continuation(yf));
      }
    }
  }
}

TEST(ContextEmbedding, UnitContextIsUnique) {
  const auto unit = unit_interface(Mode::dcpo);
  auto k = trivial_context<LensCat>(unit, unit);
  EXPECT_EQ(lensctx_to_intctx(k), trivial_context<IntCat>(unit, unit));
}

TEST(ContextEmbedding, CommutesWithActionAndProjection) {
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    auto a = small(rng, Mode::dcpo), b = small(rng, Mode::dcpo), x = small(rng, Mode::dcpo), y = small(rng, Mode::dcpo);
    auto l = random_lens(rng, a, x), mu = random_lens(rng, y, b);
    auto k = LensCat::random_context(rng, a, b);
    EXPECT_EQ(lensctx_to_intctx(LensCat::ctx_map(l, mu, k)),
              IntCat::ctx_map(lens_to_int(l), lens_to_int(mu), lensctx_to_intctx(k)));
    auto x2 = small(rng, Mode::dcpo), y2 = small(rng, Mode::dcpo);
    auto m2 = random_lens(rng, x2, y2);
    auto kt = LensCat::random_context(rng, tensor(a, x2), tensor(b, y2));
    EXPECT_EQ(lensctx_to_intctx(LensCat::proj_left(m2, kt)), IntCat::proj_left(lens_to_int(m2), lensctx_to_intctx(kt)));
  }
}

TEST(Context, EnumerationCountsLensContexts) {
  const Interface src{kCoin, Carrier::unit(Mode::set)};
  const Interface dst{kCoin, kPay};
  // |X| histories times |R|^|Y| continuations.
  EXPECT_EQ(enumerate_contexts<LensCat>(src, dst).size(), 2u * 4u);
  EXPECT_THROW(enumerate_contexts<LensCat>(src, dst, 3), BudgetExceeded);
}

}  // namespace
}  // namespace ogame
