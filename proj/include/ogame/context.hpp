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

// Context structures. A context for a hom X -> Y is the environment's data
// for a game on that hom. Two instances share one interface, so open games
// are written once against it:
//
//   LensCat  contexts are (history h : X, continuation k : Y -> R)
//   IntCat   contexts are reverse Int morphisms Y -> X
//
// Each structure provides the category operations, the functorial action
// ctx_map and the projection `/` (proj_left). The mirror projection `\` is
// derived from `/` through the symmetry.

#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "ogame/base.hpp"
#include "ogame/intcat.hpp"
#include "ogame/lens.hpp"
#include "ogame/random.hpp"

namespace ogame {

// Context for a lens hom (X, S) -> (Y, R).
struct LensContext {
  Interface src;
  Interface dst;
  Elem history = 0;
  FnTable continuation;  // Y -> R

  LensContext(Interface s, Interface d, Elem h, FnTable k)
      : src(std::move(s)), dst(std::move(d)), history(h), continuation(std::move(k)) {
    if (history >= src.fwd.size()) throw ValidationError("history outside " + src.fwd.type_name());
    if (!(continuation.src() == dst.fwd) || !(continuation.dst() == dst.bwd)) {
      throw InterfaceMismatch("continuation does not match " + dst.show());
    }
  }

  friend bool operator==(const LensContext& a, const LensContext& b) {
    return a.src == b.src && a.dst == b.dst && a.history == b.history && a.continuation == b.continuation;
  }

  std::string show() const { return "history " + src.fwd.show(history) + ", continuation " + continuation.show(); }
};

// Context for an Int hom X -> Y: a morphism Y -> X.
struct TracedContext {
  IntMorphism reverse;

  const Interface& src() const { return reverse.dst(); }
  const Interface& dst() const { return reverse.src(); }

  friend bool operator==(const TracedContext& a, const TracedContext& b) { return a.reverse == b.reverse; }

  std::string show() const { return reverse.table().show(); }
};

struct LensCat {
  using Morphism = Lens;
  using Context = LensContext;
  static constexpr const char* name = "lens";

  static const Interface& src(const Lens& m) { return m.src(); }
  static const Interface& dst(const Lens& m) { return m.dst(); }
  static const Interface& src(const LensContext& k) { return k.src; }
  static const Interface& dst(const LensContext& k) { return k.dst; }

  static Lens identity(const Interface& i) { return lens_id(i); }
  static Lens compose(const Lens& mu, const Lens& lambda) { return lens_compose(mu, lambda); }
  static Lens tensor(const Lens& a, const Lens& b) { return lens_tensor(a, b); }
  static Lens symmetry(const Interface& a, const Interface& b) { return lens_symmetry(a, b); }
  static Lens canonical(const Interface& a, const Interface& b) { return lens_canonical(a, b); }

  // (h, k) |-> (v_lambda(h), y |-> u_mu(y, k(v_mu(y)))) for
  // lambda : X1 -> X2, mu : Y2 -> Y1 and a context on X1 -> Y1.
  static LensContext ctx_map(const Lens& lambda, const Lens& mu, const LensContext& k) {
    require_interface(k.src, lambda.src(), "context map (history side)");
    require_interface(k.dst, mu.dst(), "context map (continuation side)");
    const auto& kk = k.continuation;
    auto cont = FnTable::tabulate(mu.src().fwd, mu.src().bwd, [&](Elem y) { return mu.update(y, kk(mu.view()(y))); });
    return LensContext(lambda.dst(), mu.src(), lambda.view()(k.history), std::move(cont));
  }

  // m2 / ((h1, h2), k) = (h1, y1 |-> k(y1, v_m2(h2))_2).
  static LensContext proj_left(const Lens& m2, const LensContext& k) {
    auto [x1, x2] = split_tensor(k.src);
    auto [y1, y2] = split_tensor(k.dst);
    require_interface(x2, m2.src(), "projection (source factor)");
    require_interface(y2, m2.dst(), "projection (target factor)");
    const Elem h1 = k.src.fwd.first(k.history);
    const Elem y2_played = m2.view()(k.src.fwd.second(k.history));
    const auto& kk = k.continuation;
    const Carrier& r = k.dst.bwd;  // R2 × R1
    auto cont = FnTable::tabulate(y1.fwd, y1.bwd, [&](Elem v) { return r.second(kk(k.dst.fwd.pair(v, y2_played))); });
    return LensContext(x1, y1, h1, std::move(cont));
  }

  template <class Visit>
  static void for_each_context(const Interface& src, const Interface& dst, std::size_t budget, Visit&& visit) {
    std::size_t count = 0;
    std::vector<FnTable> conts;
    for_each_map(dst.fwd, dst.bwd, [&](FnTable t) {
      if (conts.size() * std::max<std::size_t>(src.fwd.size(), 1) >= budget) {
        throw BudgetExceeded("context space exceeds budget of " + std::to_string(budget));
      }
      conts.push_back(std::move(t));
    });
    for (Elem h = 0; h < src.fwd.size(); ++h) {
      for (const auto& c : conts) {
        if (++count > budget) throw BudgetExceeded("context space exceeds budget of " + std::to_string(budget));
        visit(LensContext(src, dst, h, c));
      }
    }
  }

  static LensContext random_context(Rng& rng, const Interface& src, const Interface& dst) {
    return LensContext(src, dst, random_element(rng, src.fwd), random_table(rng, dst.fwd, dst.bwd));
  }
};

struct IntCat {
  using Morphism = IntMorphism;
  using Context = TracedContext;
  static constexpr const char* name = "int";

  static const Interface& src(const IntMorphism& m) { return m.src(); }
  static const Interface& dst(const IntMorphism& m) { return m.dst(); }
  static const Interface& src(const TracedContext& k) { return k.src(); }
  static const Interface& dst(const TracedContext& k) { return k.dst(); }

  static IntMorphism identity(const Interface& i) { return int_id(i); }
  static IntMorphism compose(const IntMorphism& mu, const IntMorphism& lambda) { return int_compose(mu, lambda); }
  static IntMorphism tensor(const IntMorphism& a, const IntMorphism& b) { return int_tensor(a, b); }
  static IntMorphism symmetry(const Interface& a, const Interface& b) { return int_symmetry(a, b); }
  static IntMorphism canonical(const Interface& a, const Interface& b) { return int_canonical(a, b); }

  // lambda ∘ κ ∘ mu.
  static TracedContext ctx_map(const IntMorphism& lambda, const IntMorphism& mu, const TracedContext& k) {
    return {int_compose(lambda, int_compose(k.reverse, mu))};
  }

  // Tr over Y2 of (id_X1 ⊗ f) ∘ κ, for κ : Y1 ⊗ Y2 -> X1 ⊗ X2.
  static TracedContext proj_left(const IntMorphism& f, const TracedContext& k) {
    auto [x1, x2] = split_tensor(k.src());
    auto [y1, y2] = split_tensor(k.dst());
    require_interface(x2, f.src(), "projection (source factor)");
    require_interface(y2, f.dst(), "projection (target factor)");
    return {int_trace(int_compose(int_tensor(int_id(x1), f), k.reverse))};
  }

  template <class Visit>
  static void for_each_context(const Interface& src, const Interface& dst, std::size_t budget, Visit&& visit) {
    std::size_t count = 0;
    for_each_map(product(dst.fwd, src.bwd), product(src.fwd, dst.bwd), [&](FnTable t) {
      if (++count > budget) throw BudgetExceeded("context space exceeds budget of " + std::to_string(budget));
      visit(TracedContext{IntMorphism(dst, src, std::move(t))});
    });
  }

  static TracedContext random_context(Rng& rng, const Interface& src, const Interface& dst) {
    return {random_int(rng, dst, src)};
  }
};

template <class Cat>
concept ContextStructure = requires(const typename Cat::Morphism& m, const typename Cat::Context& k,
                                    const Interface& i) {
  { Cat::compose(m, m) } -> std::same_as<typename Cat::Morphism>;
  { Cat::tensor(m, m) } -> std::same_as<typename Cat::Morphism>;
  { Cat::identity(i) } -> std::same_as<typename Cat::Morphism>;
  { Cat::ctx_map(m, m, k) } -> std::same_as<typename Cat::Context>;
  { Cat::proj_left(m, k) } -> std::same_as<typename Cat::Context>;
};

template <ContextStructure Cat>
typename Cat::Context ctx_map(const typename Cat::Morphism& lambda, const typename Cat::Morphism& mu,
                              const typename Cat::Context& k) {
  return Cat::ctx_map(lambda, mu, k);
}

template <ContextStructure Cat>
typename Cat::Context ctx_proj_left(const typename Cat::Morphism& m2, const typename Cat::Context& k) {
  return Cat::proj_left(m2, k);
}

// `\` from `/`: swap both tensors of the context, then project on the left.
template <ContextStructure Cat>
typename Cat::Context ctx_proj_right(const typename Cat::Morphism& m1, const typename Cat::Context& k) {
  auto [x1, x2] = split_tensor(Cat::src(k));
  auto [y1, y2] = split_tensor(Cat::dst(k));
  auto swapped = Cat::ctx_map(Cat::symmetry(x1, x2), Cat::symmetry(y2, y1), k);
  return Cat::proj_left(m1, swapped);
}

// The context half of the strict morphism of contexts Lens -> Int:
// (h, k) |-> ((y, s) |-> (h, k(y))).
inline TracedContext lensctx_to_intctx(const LensContext& k) {
  if (k.src.mode() != Mode::dcpo) throw ModeError("only dcpo contexts embed into Int");
  const Carrier out = product(k.src.fwd, k.dst.bwd);
  return {IntMorphism::build(k.dst, k.src, [&](Elem y, Elem) { return out.pair(k.history, k.continuation(y)); })};
}

}  // namespace ogame
