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

// Randomized law suites. Every law is an exact equality between two
// independently built values over random carriers with at most max_atoms
// atoms. Each law draws from its own generator, seeded from (seed, law name),
// so the suites are reproducible one by one.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ogame/base.hpp"
#include "ogame/context.hpp"
#include "ogame/intcat.hpp"
#include "ogame/lens.hpp"
#include "ogame/opengame.hpp"
#include "ogame/random.hpp"

namespace ogame {

struct LawOptions {
  std::uint64_t seed = 0;
  std::size_t instances = 500;
  std::size_t max_atoms = 3;
  // Negative control: lens composition returns a wrong view.
  bool corrupt_compose = false;
};

struct LawResult {
  std::string name;
  std::size_t instances = 0;
  bool passed = true;
  std::string counterexample;
};

// nullopt on success, otherwise a description of the failing instance.
using LawCheck = std::function<std::optional<std::string>(Rng&, const LawOptions&)>;

struct Law {
  std::string name;
  LawCheck check;
};

namespace laws_detail {

using Failure = std::optional<std::string>;

template <class Cat>
constexpr Mode mode_of() {
  return std::is_same_v<Cat, LensCat> ? Mode::set : Mode::dcpo;
}

inline Interface iface(Rng& rng, Mode mode, const LawOptions& opt) { return random_interface(rng, mode, opt.max_atoms); }

template <class Cat>
typename Cat::Morphism random_morphism(Rng& rng, const Interface& src, const Interface& dst) {
  if constexpr (std::is_same_v<Cat, LensCat>) {
    return random_lens(rng, src, dst);
  } else {
    return random_int(rng, src, dst);
  }
}

inline std::string show(const Lens& l) { return l.show(); }
inline std::string show(const IntMorphism& m) { return m.show(); }
inline std::string show(const LensContext& k) { return k.show(); }
inline std::string show(const TracedContext& k) { return "context " + k.show(); }

template <class... T>
std::string describe(const T&... parts) {
  std::string out;
  ((out += (out.empty() ? "" : "\n") + show(parts)), ...);
  return out;
}

template <class T>
Failure expect_equal(const T& lhs, const T& rhs, const std::string& inputs) {
  if (lhs == rhs) return std::nullopt;
  return inputs + "\nlhs: " + show(lhs) + "\nrhs: " + show(rhs);
}

// Changes the view at the last input; set mode only, so validity is kept.
inline Lens corrupt_view(const Lens& l) {
  const Carrier& y = l.dst().fwd;
  if (y.size() < 2 || l.src().fwd.size() == 0 || y.is_dcpo()) return l;
  auto image = l.view().image();
  image.back() = (image.back() + 1) % y.size();
  return Lens(l.src(), l.dst(), FnTable(l.src().fwd, y, std::move(image)), l.update());
}

inline Lens compose(const Lens& mu, const Lens& lambda, const LawOptions& opt) {
  auto c = lens_compose(mu, lambda);
  return opt.corrupt_compose ? corrupt_view(c) : c;
}

// --- lens laws (set mode) ---------------------------------------------------

inline Failure lens_identity(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::set, opt), b = iface(rng, Mode::set, opt);
  auto f = random_lens(rng, a, b);
  if (auto e = expect_equal(compose(lens_id(b), f, opt), f, describe(f))) return e;
  return expect_equal(compose(f, lens_id(a), opt), f, describe(f));
}

inline Failure lens_associativity(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::set, opt), b = iface(rng, Mode::set, opt);
  auto c = iface(rng, Mode::set, opt), d = iface(rng, Mode::set, opt);
  auto f = random_lens(rng, a, b), g = random_lens(rng, b, c), h = random_lens(rng, c, d);
  return expect_equal(compose(h, compose(g, f, opt), opt), compose(compose(h, g, opt), f, opt), describe(f, g, h));
}

inline Failure lens_interchange(Rng& rng, const LawOptions& opt) {
  auto a1 = iface(rng, Mode::set, opt), b1 = iface(rng, Mode::set, opt), c1 = iface(rng, Mode::set, opt);
  auto a2 = iface(rng, Mode::set, opt), b2 = iface(rng, Mode::set, opt), c2 = iface(rng, Mode::set, opt);
  auto f1 = random_lens(rng, a1, b1), g1 = random_lens(rng, b1, c1);
  auto f2 = random_lens(rng, a2, b2), g2 = random_lens(rng, b2, c2);
  return expect_equal(compose(lens_tensor(g1, g2), lens_tensor(f1, f2), opt),
                      lens_tensor(compose(g1, f1, opt), compose(g2, f2, opt)), describe(f1, g1, f2, g2));
}

inline Failure lens_tensor_unit(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::set, opt), b = iface(rng, Mode::set, opt);
  auto f = random_lens(rng, a, b);
  auto unit = unit_interface(Mode::set);
  auto padded = compose(lens_canonical(tensor(b, unit), b),
                        compose(lens_tensor(f, lens_id(unit)), lens_canonical(a, tensor(a, unit)), opt), opt);
  return expect_equal(padded, f, describe(f));
}

inline Failure lens_symmetry_law(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::set, opt), b = iface(rng, Mode::set, opt);
  auto c = iface(rng, Mode::set, opt), d = iface(rng, Mode::set, opt);
  auto f = random_lens(rng, a, c), g = random_lens(rng, b, d);
  if (auto e = expect_equal(compose(lens_symmetry(b, a), lens_symmetry(a, b), opt), lens_id(tensor(a, b)), describe(f))) {
    return e;
  }
  return expect_equal(compose(lens_symmetry(c, d), lens_tensor(f, g), opt),
                      compose(lens_tensor(g, f), lens_symmetry(a, b), opt), describe(f, g));
}

// ε_Y ∘ (lift(f) ⊗ id_(1,Y)) = ε_X ∘ (id_(X,1) ⊗ liftop(f)).
inline Failure lens_counit_dinaturality(Rng& rng, const LawOptions& opt) {
  auto x = random_carrier(rng, Mode::set, opt.max_atoms);
  auto y = random_carrier(rng, Mode::set, opt.max_atoms);
  auto f = random_table(rng, x, y);
  auto one = Carrier::unit(Mode::set);
  auto cov = lens_tensor(lift(f, Variance::cov), lens_id({one, y}));
  auto contra = lens_tensor(lens_id({x, one}), lift(f, Variance::contra));
  auto lhs = compose(lens_counit(y), compose(lens_canonical(cov.dst(), {y, y}), cov, opt), opt);
  auto rhs = compose(lens_counit(x), compose(lens_canonical(contra.dst(), {x, x}), contra, opt), opt);
  return expect_equal(lhs, rhs, "f = " + f.show());
}

// --- Int laws -----------------------------------------------------------------

inline Failure int_identity(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  auto f = random_int(rng, a, b);
  if (auto e = expect_equal(int_compose(int_id(b), f), f, describe(f))) return e;
  return expect_equal(int_compose(f, int_id(a)), f, describe(f));
}

inline Failure int_associativity(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  auto c = iface(rng, Mode::dcpo, opt), d = iface(rng, Mode::dcpo, opt);
  auto f = random_int(rng, a, b), g = random_int(rng, b, c), h = random_int(rng, c, d);
  return expect_equal(int_compose(h, int_compose(g, f)), int_compose(int_compose(h, g), f), describe(f, g, h));
}

inline Failure int_interchange(Rng& rng, const LawOptions& opt) {
  auto a1 = iface(rng, Mode::dcpo, opt), b1 = iface(rng, Mode::dcpo, opt), c1 = iface(rng, Mode::dcpo, opt);
  auto a2 = iface(rng, Mode::dcpo, opt), b2 = iface(rng, Mode::dcpo, opt), c2 = iface(rng, Mode::dcpo, opt);
  auto f1 = random_int(rng, a1, b1), g1 = random_int(rng, b1, c1);
  auto f2 = random_int(rng, a2, b2), g2 = random_int(rng, b2, c2);
  return expect_equal(int_compose(int_tensor(g1, g2), int_tensor(f1, f2)),
                      int_tensor(int_compose(g1, f1), int_compose(g2, f2)), describe(f1, g1, f2, g2));
}

// Both snake equations for a random interface A.
inline Failure int_yanking(Rng& rng, const LawOptions& opt) {
  const auto a = iface(rng, Mode::dcpo, opt);
  const auto as = dual(a);
  const auto unit = unit_interface(Mode::dcpo);
  auto chain = [](std::initializer_list<IntMorphism> ms) {
    auto it = ms.begin();
    IntMorphism acc = *it++;
    for (; it != ms.end(); ++it) acc = int_compose(*it, acc);
    return acc;
  };
  // A ≅ A⊗I -> A⊗(A*⊗A) ≅ (A⊗A*)⊗A -> I⊗A ≅ A
  auto snake1 = chain({int_canonical(a, tensor(a, unit)), int_tensor(int_id(a), int_eta(as)),
                       int_canonical(tensor(a, tensor(as, a)), tensor(tensor(a, as), a)),
                       int_tensor(int_eps(a), int_id(a)), int_canonical(tensor(unit, a), a)});
  if (auto e = expect_equal(snake1, int_id(a), "A = " + a.show())) return e;
  // A* ≅ I⊗A* -> (A*⊗A)⊗A* ≅ A*⊗(A⊗A*) -> A*⊗I ≅ A*
  auto snake2 = chain({int_canonical(as, tensor(unit, as)), int_tensor(int_eta(as), int_id(as)),
                       int_canonical(tensor(tensor(as, a), as), tensor(as, tensor(a, as))),
                       int_tensor(int_id(as), int_eps(a)), int_canonical(tensor(as, unit), as)});
  return expect_equal(snake2, int_id(as), "A = " + a.show());
}

// Tr(σ_{U,U}) = id_U.
inline Failure int_trace_yanking(Rng& rng, const LawOptions& opt) {
  auto u = iface(rng, Mode::dcpo, opt);
  return expect_equal(int_trace(int_symmetry(u, u)), int_id(u), "U = " + u.show());
}

// --- the embedding of lenses into Int -------------------------------------------

inline Failure embed_identity(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt);
  return expect_equal(lens_to_int(lens_id(a)), int_id(a), "A = " + a.show());
}

inline Failure embed_compose(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt), c = iface(rng, Mode::dcpo, opt);
  auto f = random_lens(rng, a, b), g = random_lens(rng, b, c);
  return expect_equal(lens_to_int(lens_compose(g, f)), int_compose(lens_to_int(g), lens_to_int(f)), describe(f, g));
}

inline Failure embed_tensor(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  auto c = iface(rng, Mode::dcpo, opt), d = iface(rng, Mode::dcpo, opt);
  auto f = random_lens(rng, a, b), g = random_lens(rng, c, d);
  return expect_equal(lens_to_int(lens_tensor(f, g)), int_tensor(lens_to_int(f), lens_to_int(g)), describe(f, g));
}

inline Failure embed_symmetry(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  return expect_equal(lens_to_int(lens_symmetry(a, b)), int_symmetry(a, b), "A = " + a.show() + ", B = " + b.show());
}

// counit(X) is sent to the cap of (X, 1), up to re-bracketing.
inline Failure embed_counit(Rng& rng, const LawOptions& opt) {
  auto x = random_carrier(rng, Mode::dcpo, opt.max_atoms);
  const Interface xi{x, Carrier::unit(Mode::dcpo)};
  const Interface xx{x, x};
  auto cap = int_compose(int_eps(xi), int_canonical(xx, tensor(xi, dual(xi))));
  return expect_equal(lens_to_int(lens_counit(x)), cap, "X = " + x.type_name());
}

// --- contexts -------------------------------------------------------------------

template <class Cat>
Failure context_functor(Rng& rng, const LawOptions& opt) {
  constexpr Mode m = mode_of<Cat>();
  auto a = iface(rng, m, opt), x = iface(rng, m, opt), x2 = iface(rng, m, opt);
  auto b = iface(rng, m, opt), y = iface(rng, m, opt), y2 = iface(rng, m, opt);
  auto k = Cat::random_context(rng, a, b);
  if (auto e = expect_equal(Cat::ctx_map(Cat::identity(a), Cat::identity(b), k), k, describe(k))) return e;
  auto l1 = random_morphism<Cat>(rng, a, x), l2 = random_morphism<Cat>(rng, x, x2);
  auto m1 = random_morphism<Cat>(rng, y, b), m2 = random_morphism<Cat>(rng, y2, y);
  return expect_equal(Cat::ctx_map(Cat::compose(l2, l1), Cat::compose(m1, m2), k),
                      Cat::ctx_map(l2, m2, Cat::ctx_map(l1, m1, k)), describe(k, l1, l2, m1, m2));
}

// ctx_map(λ1, ν1, (ν2 μ2 λ2) / κ) = μ2 / ctx_map(λ1 ⊗ λ2, ν1 ⊗ ν2, κ).
template <class Cat>
Failure context_naturality(Rng& rng, const LawOptions& opt) {
  constexpr Mode m = mode_of<Cat>();
  auto a1 = iface(rng, m, opt), a2 = iface(rng, m, opt), x1 = iface(rng, m, opt), x2 = iface(rng, m, opt);
  auto y1 = iface(rng, m, opt), y2 = iface(rng, m, opt), b1 = iface(rng, m, opt), b2 = iface(rng, m, opt);
  auto l1 = random_morphism<Cat>(rng, a1, x1), l2 = random_morphism<Cat>(rng, a2, x2);
  auto mu2 = random_morphism<Cat>(rng, x2, y2);
  auto n1 = random_morphism<Cat>(rng, y1, b1), n2 = random_morphism<Cat>(rng, y2, b2);
  auto k = Cat::random_context(rng, tensor(a1, a2), tensor(b1, b2));
  auto upper = Cat::ctx_map(l1, n1, Cat::proj_left(Cat::compose(n2, Cat::compose(mu2, l2)), k));
  auto lower = Cat::proj_left(mu2, Cat::ctx_map(Cat::tensor(l1, l2), Cat::tensor(n1, n2), k));
  return expect_equal(upper, lower, describe(k, l1, l2, mu2, n1, n2));
}

// `\` through the symmetry equals k2(y2) = k(v_m1(h1), y2)_1.
inline Failure context_lens_proj_right(Rng& rng, const LawOptions& opt) {
  auto x1 = iface(rng, Mode::set, opt), x2 = iface(rng, Mode::set, opt);
  auto y1 = iface(rng, Mode::set, opt), y2 = iface(rng, Mode::set, opt);
  auto m1 = random_lens(rng, x1, y1);
  auto k = LensCat::random_context(rng, tensor(x1, x2), tensor(y1, y2));
  const Elem h1 = k.src.fwd.first(k.history), h2 = k.src.fwd.second(k.history);
  const Elem played = m1.view()(h1);
  auto cont = FnTable::tabulate(y2.fwd, y2.bwd, [&](Elem v) {
    return k.dst.bwd.first(k.continuation(k.dst.fwd.pair(played, v)));
  });
  return expect_equal(ctx_proj_right<LensCat>(m1, k), LensContext(x2, y2, h2, cont), describe(k, m1));
}

// Contexts of dcpo lenses embed into traced contexts compatibly with
// ctx_map and with `/`.
inline Failure context_embed_square(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  auto x = iface(rng, Mode::dcpo, opt), y = iface(rng, Mode::dcpo, opt);
  auto l = random_lens(rng, a, x), mu = random_lens(rng, y, b);
  auto k = LensCat::random_context(rng, a, b);
  auto mapped = lensctx_to_intctx(LensCat::ctx_map(l, mu, k));
  auto chased = IntCat::ctx_map(lens_to_int(l), lens_to_int(mu), lensctx_to_intctx(k));
  if (auto e = expect_equal(mapped, chased, describe(k, l, mu))) return e;

  auto x1 = iface(rng, Mode::dcpo, opt), x2 = iface(rng, Mode::dcpo, opt);
  auto y1 = iface(rng, Mode::dcpo, opt), y2 = iface(rng, Mode::dcpo, opt);
  auto m2 = random_lens(rng, x2, y2);
  auto kt = LensCat::random_context(rng, tensor(x1, x2), tensor(y1, y2));
  return expect_equal(lensctx_to_intctx(LensCat::proj_left(m2, kt)), IntCat::proj_left(lens_to_int(m2), lensctx_to_intctx(kt)),
                      describe(kt, m2));
}

// --- open games -------------------------------------------------------------------

// Either a zero-player game or one decision between random wiring.
template <class Cat>
OpenGame<Cat> random_game(Rng& rng, const Interface& src, const Interface& dst, const LawOptions& opt) {
  constexpr Mode m = mode_of<Cat>();
  if (rng.below(3) == 0) return og_pure<Cat>(random_morphism<Cat>(rng, src, dst));
  auto x = random_carrier(rng, m, opt.max_atoms);
  auto y = random_carrier(rng, m, opt.max_atoms);
  auto p = Carrier::payoff(m, {Rational(0), Rational(1)});
  auto one = Carrier::unit(m);
  auto pre = og_pure<Cat>(random_morphism<Cat>(rng, src, {x, one}));
  auto post = og_pure<Cat>(random_morphism<Cat>(rng, {y, p}, dst));
  return og_seq(og_seq(pre, og_decision<Cat>(x, y, p)), post);
}

inline ProfileVec random_profile(Rng& rng, const std::vector<StrategyLeaf>& leaves) {
  ProfileVec p;
  for (const auto& l : leaves) p.push_back(static_cast<std::uint32_t>(rng.below(l.size())));
  return p;
}

inline std::string show_profile(Profile p) {
  std::string out = "profile [";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

using Reindex = std::function<ProfileVec(Profile)>;

// Same interfaces, same labels and the same equilibrium verdicts on sampled
// (profile, context) pairs, after reindexing lhs profiles into rhs profiles.
template <class Cat>
Failure same_game(Rng& rng, const OpenGame<Cat>& lhs, const OpenGame<Cat>& rhs, const Reindex& reindex = {}) {
  if (!(lhs.src() == rhs.src()) || !(lhs.dst() == rhs.dst())) {
    return "interfaces differ: " + lhs.src().show() + " -> " + lhs.dst().show() + " vs " + rhs.src().show() + " -> " +
           rhs.dst().show();
  }
  if (lhs.strategy_count() != rhs.strategy_count()) return std::string("strategy spaces differ in size");
  for (int s = 0; s < 4; ++s) {
    auto p = random_profile(rng, lhs.leaves());
    auto q = reindex ? reindex(p) : p;
    if (auto e = expect_equal(lhs.label(p), rhs.label(q), show_profile(p))) return e;
    for (int c = 0; c < 2; ++c) {
      auto k = Cat::random_context(rng, lhs.src(), lhs.dst());
      if (lhs.equilibrium(p, k) != rhs.equilibrium(q, k)) {
        return show_profile(p) + "\n" + describe(lhs.label(p), k) + "\nequilibrium verdicts differ";
      }
    }
  }
  return std::nullopt;
}

template <class Cat>
Failure og_identity_law(Rng& rng, const LawOptions& opt) {
  constexpr Mode m = mode_of<Cat>();
  auto a = iface(rng, m, opt), b = iface(rng, m, opt);
  auto g = random_game<Cat>(rng, a, b, opt);
  if (auto e = same_game(rng, og_seq(og_identity<Cat>(a), g), g)) return e;
  return same_game(rng, og_seq(g, og_identity<Cat>(b)), g);
}

template <class Cat>
Failure og_associativity_law(Rng& rng, const LawOptions& opt) {
  constexpr Mode m = mode_of<Cat>();
  auto a = iface(rng, m, opt), b = iface(rng, m, opt), c = iface(rng, m, opt), d = iface(rng, m, opt);
  auto f = random_game<Cat>(rng, a, b, opt), g = random_game<Cat>(rng, b, c, opt), h = random_game<Cat>(rng, c, d, opt);
  return same_game(rng, og_seq(og_seq(f, g), h), og_seq(f, og_seq(g, h)));
}

// (G1 ⊗ G2) ; (H1 ⊗ H2) versus (G1 ; H1) ⊗ (G2 ; H2); profiles are reordered
// from (g1, g2, h1, h2) to (g1, h1, g2, h2).
template <class Cat>
Failure og_interchange_law(Rng& rng, const LawOptions& opt) {
  constexpr Mode m = mode_of<Cat>();
  auto a1 = iface(rng, m, opt), b1 = iface(rng, m, opt), c1 = iface(rng, m, opt);
  auto a2 = iface(rng, m, opt), b2 = iface(rng, m, opt), c2 = iface(rng, m, opt);
  auto g1 = random_game<Cat>(rng, a1, b1, opt), h1 = random_game<Cat>(rng, b1, c1, opt);
  auto g2 = random_game<Cat>(rng, a2, b2, opt), h2 = random_game<Cat>(rng, b2, c2, opt);
  const std::size_t n1 = g1.leaves().size(), n2 = g2.leaves().size(), n3 = h1.leaves().size();
  Reindex reindex = [=](Profile p) {
    ProfileVec q;
    auto put = [&](std::size_t from, std::size_t count) { q.insert(q.end(), p.begin() + from, p.begin() + from + count); };
    put(0, n1);
    put(n1 + n2, n3);
    put(n1, n2);
    put(n1 + n2 + n3, p.size() - n1 - n2 - n3);
    return q;
  };
  return same_game(rng, og_seq(og_tensor(g1, g2), og_tensor(h1, h2)), og_tensor(og_seq(g1, h1), og_seq(g2, h2)), reindex);
}

inline Failure og_transpose_cupcap_law(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  auto g = random_game<IntCat>(rng, a, b, opt);
  return same_game(rng, og_transpose(g), og_transpose_cupcap(g));
}

inline Failure og_transpose_involution_law(Rng& rng, const LawOptions& opt) {
  auto a = iface(rng, Mode::dcpo, opt), b = iface(rng, Mode::dcpo, opt);
  auto g = random_game<IntCat>(rng, a, b, opt);
  return same_game(rng, og_transpose(og_transpose(g)), g);
}

}  // namespace laws_detail

inline std::vector<Law> all_laws() {
  using namespace laws_detail;
  return {
      {"lens.identity", lens_identity},
      {"lens.associativity", lens_associativity},
      {"lens.interchange", lens_interchange},
      {"lens.tensor_unit", lens_tensor_unit},
      {"lens.symmetry", lens_symmetry_law},
      {"lens.counit_dinaturality", lens_counit_dinaturality},
      {"int.identity", int_identity},
      {"int.associativity", int_associativity},
      {"int.interchange", int_interchange},
      {"int.yanking", int_yanking},
      {"int.trace_yanking", int_trace_yanking},
      {"embed.identity", embed_identity},
      {"embed.compose", embed_compose},
      {"embed.tensor", embed_tensor},
      {"embed.symmetry", embed_symmetry},
      {"embed.counit", embed_counit},
      {"context.lens.functor", context_functor<LensCat>},
      {"context.lens.naturality", context_naturality<LensCat>},
      {"context.lens.proj_right", context_lens_proj_right},
      {"context.int.functor", context_functor<IntCat>},
      {"context.int.naturality", context_naturality<IntCat>},
      {"context.embed_square", context_embed_square},
      {"og.lens.identity", og_identity_law<LensCat>},
      {"og.lens.associativity", og_associativity_law<LensCat>},
      {"og.lens.interchange", og_interchange_law<LensCat>},
      {"og.int.identity", og_identity_law<IntCat>},
      {"og.int.associativity", og_associativity_law<IntCat>},
      {"og.int.interchange", og_interchange_law<IntCat>},
      {"og.transpose_cupcap", og_transpose_cupcap_law},
      {"og.transpose_involution", og_transpose_involution_law},
  };
}

inline Rng law_rng(const LawOptions& opt, const std::string& name, std::size_t atoms) {
  return Rng(opt.seed ^ fnv1a64(name) ^ (static_cast<std::uint64_t>(atoms) << 56));
}

// Runs one law. On failure, smaller atom bounds are searched first so the
// reported counterexample uses the smallest carriers that still fail.
inline LawResult run_law(const Law& law, const LawOptions& opt) {
  LawResult result{law.name, 0, true, {}};
  Rng rng = law_rng(opt, law.name, opt.max_atoms);
  for (std::size_t i = 0; i < opt.instances; ++i) {
    ++result.instances;
    auto failure = law.check(rng, opt);
    if (!failure) continue;
    result.passed = false;
    result.counterexample = *failure;
    for (std::size_t atoms = 1; atoms < opt.max_atoms; ++atoms) {
      LawOptions small = opt;
      small.max_atoms = atoms;
      Rng r = law_rng(opt, law.name, atoms);
      for (std::size_t j = 0; j < opt.instances; ++j) {
        if (auto f = law.check(r, small)) {
          result.counterexample = *f;
          return result;
        }
      }
    }
    return result;
  }
  return result;
}

inline std::vector<LawResult> run_laws(const LawOptions& opt) {
  std::vector<LawResult> out;
  for (const auto& law : all_laws()) out.push_back(run_law(law, opt));
  return out;
}

}  // namespace ogame
