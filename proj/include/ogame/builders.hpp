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

#pragma once

// Classical games assembled from decisions and zero-player wiring. Every
// builder goes through og_seq / og_tensor so that the equilibria it reports
// are those of the string diagram, not of a closed-form formula.

#include <optional>
#include <utility>

#include "ogame/base.hpp"
#include "ogame/context.hpp"
#include "ogame/intcat.hpp"
#include "ogame/lens.hpp"
#include "ogame/opengame.hpp"

namespace ogame {

// The element of payoff carrier p with value v; nullopt selects ⊥.
inline Elem payoff_elem(const Carrier& p, const std::optional<Rational>& v) {
  if (!p.is_payoff() && !(p.is_dcpo() && p.atoms().empty())) throw ValidationError(p.type_name() + " is not a payoff domain");
  if (!v) {
    if (!p.is_dcpo()) throw ModeError("⊥ payoff in set mode");
    return 0;
  }
  auto e = p.find_atom(format_rational(*v));
  if (!e) throw ValidationError("payoff " + format_rational(*v) + " not in " + p.type_name());
  return *e;
}

using PayoffPair = std::pair<std::optional<Rational>, std::optional<Rational>>;

// Two-player payoff table X × Y -> P × P from f(x, y).
template <class F>
FnTable payoff_table(const Carrier& x, const Carrier& y, const Carrier& p, F&& f) {
  const Carrier in = product(x, y);
  const Carrier out = product(p, p);
  return FnTable::tabulate(in, out, [&](Elem e) {
    PayoffPair u = f(in.first(e), in.second(e));
    return out.pair(payoff_elem(p, u.first), payoff_elem(p, u.second));
  });
}

namespace detail {

inline void require_two_player_payoff(const FnTable& u) {
  if (!u.src().is_product() || !u.dst().is_product() || !(u.dst().left() == u.dst().right())) {
    throw InterfaceMismatch("payoff table must have shape X * Y -> P * P, got " + u.src().type_name() + " -> " +
                            u.dst().type_name());
  }
}

}  // namespace detail

// Simultaneous two-player game I -> I: decisions side by side, the moves
// scored by U, each payoff returned to its player by a counit.
inline LensGame og_bimatrix(const FnTable& u, std::size_t budget = kDefaultBudget) {
  detail::require_two_player_payoff(u);
  const Mode m = u.src().mode();
  const Carrier one = Carrier::unit(m);
  const Carrier x = u.src().left(), y = u.src().right(), p = u.dst().left();
  const Interface unit = unit_interface(m);
  auto pure = [](const Lens& l) { return og_pure<LensCat>(l); };

  auto players = og_tensor(og_decision<LensCat>(one, x, p, budget), og_decision<LensCat>(one, y, p, budget));
  auto score = pure(lens_tensor(lift(u, Variance::cov), lens_id({one, product(p, p)})));
  auto pay = pure(lens_tensor(lens_counit(p), lens_counit(p)));
  auto g = og_seq_auto(og_seq_auto(og_seq_auto(og_canonical<LensCat>(unit, players.src()), players), score), pay);
  return og_seq_auto(g, og_canonical<LensCat>(g.dst(), unit));
}

// Player 1 moves in X; player 2 observes f(x) in X' and moves in Y; U scores
// the pair (x, y). Equilibria are Nash equilibria of the extensive form.
inline LensGame og_sequential(const FnTable& f, const FnTable& u, std::size_t budget = kDefaultBudget) {
  detail::require_two_player_payoff(u);
  const Mode m = u.src().mode();
  const Carrier one = Carrier::unit(m);
  const Carrier x = u.src().left(), y = u.src().right(), p = u.dst().left();
  if (!(f.src() == x)) throw InterfaceMismatch("observation map starts at " + f.src().type_name() + ", expected " + x.type_name());
  const Interface unit = unit_interface(m);
  const Lens carry = lens_id({one, p});  // player 1's payoff wire
  auto pure = [](const Lens& l) { return og_pure<LensCat>(l); };
  auto beside = [&](const LensGame& g) { return og_tensor(pure(carry), g); };

  auto first = og_decision<LensCat>(one, x, p, budget);
  auto copy = beside(pure(lens_copy(x)));
  auto observe = beside(pure(lens_tensor(lens_id({x, one}), lift(f, Variance::cov))));
  auto second = beside(og_tensor(pure(lens_id({x, one})), og_decision<LensCat>(f.dst(), y, p, budget)));
  auto score = pure(lens_tensor(lift(u, Variance::cov), lens_id({one, product(p, p)})));
  auto pay = pure(lens_tensor(lens_counit(p), lens_counit(p)));

  LensGame g = og_seq_auto(og_canonical<LensCat>(unit, first.src()), first);
  for (const auto& stage : {copy, observe, second, score, pay}) g = og_seq_auto(g, stage);
  return og_seq_auto(g, og_canonical<LensCat>(g.dst(), unit));
}

// Two players who each observe the other's move, closed into a loop:
// player 1 plays σ : Y -> X, player 2 plays τ : X -> Y, and the moves are the
// least solution of x = σ(y), y = τ(x). Built in Int from decisions, copies,
// swaps, the lifted payoff and counits, with the Y × X wire fed back.
inline IntGame og_fixpoint_pair(const FnTable& u, std::size_t budget = kDefaultBudget) {
  detail::require_two_player_payoff(u);
  if (u.src().mode() != Mode::dcpo) throw ModeError("the feedback game needs dcpo carriers");
  const Carrier one = Carrier::unit(Mode::dcpo);
  const Carrier x = u.src().left(), y = u.src().right(), p = u.dst().left();
  const Carrier xy = product(x, y), yx = product(y, x);
  const Interface unit = unit_interface(Mode::dcpo);
  auto wire = [&](const Lens& l) { return og_pure<IntCat>(lens_to_int(l)); };
  auto t = [](const Lens& a, const Lens& b) { return lens_tensor(a, b); };
  const Lens payoffs = lens_id({one, product(p, p)});
  const FnTable swap = FnTable::tabulate(xy, yx, [&](Elem e) { return yx.pair(xy.second(e), xy.first(e)); });
  const Lens swap_l = lift(swap, Variance::cov);

  auto players = og_tensor(og_decision<IntCat>(y, x, p, budget), og_decision<IntCat>(x, y, p, budget));
  // (x, y) -> (x, x, y, y) -> (x, y, x, y) -> (x, y, y, x) -> (u1, u2, y, x)
  auto r1 = wire(t(t(lens_copy(x), lens_copy(y)), payoffs));
  auto r2 = wire(t(t(t(lens_id({x, one}), swap_l), lens_id({y, one})), payoffs));
  auto r3 = wire(t(t(lens_id({xy, one}), swap_l), payoffs));
  auto r4 = wire(t(t(lift(u, Variance::cov), lens_id({yx, one})), payoffs));
  auto r5 = wire(t(t(lens_counit(p), lens_counit(p)), lens_id({yx, one})));

  const Interface loop{yx, one};
  IntGame g = og_seq_auto(og_canonical<IntCat>(tensor(unit, loop), players.src()), players);
  for (const auto& stage : {r1, r2, r3, r4, r5}) g = og_seq_auto(g, stage);
  g = og_seq_auto(g, og_canonical<IntCat>(g.dst(), tensor(unit, loop)));
  return og_feedback(g);
}

// Flat X = Y = {a, b}; player 1 wins (1, 0) on a match, player 2 wins (0, 1)
// on a mismatch, and any undefined move leaves both payoffs undefined.
inline FnTable fixpoint_pennies_payoff() {
  const Carrier x = Carrier::atomic(Mode::dcpo, "X", {"a", "b"});
  const Carrier y = Carrier::atomic(Mode::dcpo, "Y", {"a", "b"});
  const Carrier p = Carrier::payoff(Mode::dcpo, {Rational(0), Rational(1)});
  return payoff_table(x, y, p, [](Elem a, Elem b) -> PayoffPair {
    if (a == 0 || b == 0) return {std::nullopt, std::nullopt};
    if (a == b) return {Rational(1), Rational(0)};
    return {Rational(0), Rational(1)};
  });
}

inline IntGame og_fixpoint_pennies(std::size_t budget = kDefaultBudget) {
  return og_fixpoint_pair(fixpoint_pennies_payoff(), budget);
}

}  // namespace ogame
