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

// Open games over a context structure (LensCat or IntCat).
//
// A game has a strategy space, a labelling of profiles by morphisms and an
// equilibrium predicate on (profile, context). Strategy spaces are kept
// flattened: a profile is one index per decision, in left-to-right order of
// the composition tree. Sequential and parallel composition concatenate the
// index vectors, which makes the canonical re-bracketing of profiles the
// identity.

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ogame/base.hpp"
#include "ogame/context.hpp"
#include "ogame/intcat.hpp"
#include "ogame/lens.hpp"

namespace ogame {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// The stabilised play seen by one decision while its equilibrium condition
// was evaluated.
struct PlayRecord {
  std::string path;
  std::string x, y, r, s;
};

using Trace = std::vector<PlayRecord>;

struct StrategyLeaf {
  std::string path;
  std::string kind;  // e.g. "decision(Y, X)"
  std::shared_ptr<const std::vector<FnTable>> strategies;

  std::size_t size() const { return strategies->size(); }

  // Decisions without an observation show only the chosen move.
  std::string show(std::size_t i) const {
    const auto& t = (*strategies)[i];
    if (t.src().size() == 1) return t.dst().show(t(0));
    return t.show();
  }
};

using Profile = std::span<const std::uint32_t>;
using ProfileVec = std::vector<std::uint32_t>;

template <ContextStructure Cat>
class OpenGame {
 public:
  using Morphism = typename Cat::Morphism;
  using Context = typename Cat::Context;
  using Label = std::function<Morphism(Profile)>;
  using Predicate = std::function<bool(Profile, const Context&, Trace*)>;

  OpenGame(Interface src, Interface dst, std::vector<StrategyLeaf> leaves, Label label, Predicate equilibrium)
      : node_(std::make_shared<const Node>(Node{std::move(src), std::move(dst), std::move(leaves), std::move(label),
                                                std::move(equilibrium)})) {}

  const Interface& src() const { return node_->src; }
  const Interface& dst() const { return node_->dst; }
  const std::vector<StrategyLeaf>& leaves() const { return node_->leaves; }

  // Saturates at uint64 max.
  std::uint64_t strategy_count() const {
    std::uint64_t n = 1;
    for (const auto& l : leaves()) {
      if (l.size() == 0) return 0;
      if (n > std::numeric_limits<std::uint64_t>::max() / l.size()) return std::numeric_limits<std::uint64_t>::max();
      n *= l.size();
    }
    return n;
  }

  Morphism label(Profile p) const {
    check_profile(p);
    return node_->label(p);
  }

  bool equilibrium(Profile p, const Context& k, Trace* trace = nullptr) const {
    check_profile(p);
    require_interface(src(), Cat::src(k), "context source");
    require_interface(dst(), Cat::dst(k), "context target");
    return node_->equilibrium(p, k, trace);
  }

  std::vector<std::string> show_profile(Profile p) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(leaves()[i].show(p[i]));
    return out;
  }

  // Unchecked entry points for composite closures.
  Morphism label_unchecked(Profile p) const { return node_->label(p); }
  bool equilibrium_unchecked(Profile p, const Context& k, Trace* trace) const { return node_->equilibrium(p, k, trace); }

 private:
  struct Node {
    Interface src, dst;
    std::vector<StrategyLeaf> leaves;
    Label label;
    Predicate equilibrium;
  };

  void check_profile(Profile p) const {
    if (p.size() != leaves().size()) throw ValidationError("profile has wrong number of components");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= leaves()[i].size()) throw ValidationError("profile component out of range");
    }
  }

  std::shared_ptr<const Node> node_;
};

using LensGame = OpenGame<LensCat>;
using IntGame = OpenGame<IntCat>;

namespace detail {

inline std::string join_path(const std::string& prefix, const std::string& path) {
  return path.empty() ? prefix : prefix + "." + path;
}

// Paths only grow where both sides carry decisions.
inline std::vector<StrategyLeaf> concat_leaves(const std::vector<StrategyLeaf>& a, const std::vector<StrategyLeaf>& b) {
  const bool both = !a.empty() && !b.empty();
  std::vector<StrategyLeaf> out;
  for (auto l : a) {
    if (both) l.path = join_path("0", l.path);
    out.push_back(std::move(l));
  }
  for (auto l : b) {
    if (both) l.path = join_path("1", l.path);
    out.push_back(std::move(l));
  }
  return out;
}

inline void append_trace(Trace* into, Trace&& part, const std::string& prefix, bool prefixed) {
  if (!into) return;
  for (auto& rec : part) {
    if (prefixed) rec.path = join_path(prefix, rec.path);
    into->push_back(std::move(rec));
  }
}

}  // namespace detail

// Zero-player game: Σ = {*}, always in equilibrium.
template <ContextStructure Cat>
OpenGame<Cat> og_pure(const typename Cat::Morphism& m) {
  return OpenGame<Cat>(
      Cat::src(m), Cat::dst(m), {}, [m](Profile) { return m; }, [](Profile, const typename Cat::Context&, Trace*) {
        return true;
      });
}

template <ContextStructure Cat>
OpenGame<Cat> og_canonical(const Interface& src, const Interface& dst) {
  return og_pure<Cat>(Cat::canonical(src, dst));
}

template <ContextStructure Cat>
OpenGame<Cat> og_identity(const Interface& i) {
  return og_pure<Cat>(Cat::identity(i));
}

// G then H. Winning iff G wins against the context pushed through H's play and
// H wins against the context pulled back through G's play.
template <ContextStructure Cat>
OpenGame<Cat> og_seq(const OpenGame<Cat>& g, const OpenGame<Cat>& h) {
  require_interface(g.dst(), h.src(), "sequential composition");
  const std::size_t ng = g.leaves().size();
  const bool both = ng > 0 && !h.leaves().empty();
  auto label = [g, h, ng](Profile p) { return Cat::compose(h.label_unchecked(p.subspan(ng)), g.label_unchecked(p.first(ng))); };
  auto eq = [g, h, ng, both](Profile p, const typename Cat::Context& k, Trace* trace) {
    auto pg = p.first(ng);
    auto ph = p.subspan(ng);
    Trace tg, th;
    auto kg = Cat::ctx_map(Cat::identity(g.src()), h.label_unchecked(ph), k);
    bool ok = g.equilibrium_unchecked(pg, kg, trace ? &tg : nullptr);
    if (ok || trace) {
      auto kh = Cat::ctx_map(g.label_unchecked(pg), Cat::identity(h.dst()), k);
      ok = h.equilibrium_unchecked(ph, kh, trace ? &th : nullptr) && ok;
    }
    detail::append_trace(trace, std::move(tg), "0", both);
    detail::append_trace(trace, std::move(th), "1", both);
    return ok;
  };
  return OpenGame<Cat>(g.src(), h.dst(), detail::concat_leaves(g.leaves(), h.leaves()), label, eq);
}

// Parallel play. Each side is judged against the joint context projected
// through the other side's play.
template <ContextStructure Cat>
OpenGame<Cat> og_tensor(const OpenGame<Cat>& g, const OpenGame<Cat>& h) {
  require_same_mode(g.src().fwd, h.src().fwd, "game tensor");
  const std::size_t ng = g.leaves().size();
  const bool both = ng > 0 && !h.leaves().empty();
  auto label = [g, h, ng](Profile p) { return Cat::tensor(g.label_unchecked(p.first(ng)), h.label_unchecked(p.subspan(ng))); };
  auto eq = [g, h, ng, both](Profile p, const typename Cat::Context& k, Trace* trace) {
    auto pg = p.first(ng);
    auto ph = p.subspan(ng);
    Trace tg, th;
    bool ok = g.equilibrium_unchecked(pg, Cat::proj_left(h.label_unchecked(ph), k), trace ? &tg : nullptr);
    if (ok || trace) {
      ok = h.equilibrium_unchecked(ph, ctx_proj_right<Cat>(g.label_unchecked(pg), k), trace ? &th : nullptr) && ok;
    }
    detail::append_trace(trace, std::move(tg), "0", both);
    detail::append_trace(trace, std::move(th), "1", both);
    return ok;
  };
  return OpenGame<Cat>(tensor(g.src(), h.src()), tensor(g.dst(), h.dst()),
                       detail::concat_leaves(g.leaves(), h.leaves()), label, eq);
}

// Sequential composition that first re-brackets g's target onto h's source
// when they differ only by associativity and units.
template <ContextStructure Cat>
OpenGame<Cat> og_seq_auto(const OpenGame<Cat>& g, const OpenGame<Cat>& h) {
  if (g.dst() == h.src()) return og_seq(g, h);
  if (!leaf_equivalent(g.dst(), h.src())) {
    throw InterfaceMismatch("interface mismatch: left game ends at " + g.dst().show() + " but right game starts at " +
                            h.src().show());
  }
  return og_seq(og_seq(g, og_canonical<Cat>(g.dst(), h.src())), h);
}

// The lens labelling a decision strategy: view σ, trivial update.
inline Lens decision_lens(const FnTable& sigma, const Carrier& payoff) {
  auto one = Carrier::unit(sigma.src().mode());
  return Lens::build({sigma.src(), one}, {sigma.dst(), payoff}, [&](Elem x) { return sigma(x); },
                     [](Elem, Elem) { return 0; });
}

// One player observing X, choosing from Y, scored in the payoff carrier.
// Lens contexts: wins iff σ(h) ∈ argmax k. Int contexts: the history may
// depend on the move, so the move is the least fixpoint of y = σ(h(y)).
template <ContextStructure Cat>
OpenGame<Cat> og_decision(const Carrier& observation, const Carrier& choice, const Carrier& payoff,
                          std::size_t budget = kDefaultBudget) {
  if (observation.size() == 0 || choice.size() == 0) throw ValidationError("decision over an empty carrier");
  require_same_mode(observation, choice, "decision");
  require_same_mode(choice, payoff, "decision");
  auto strategies = std::make_shared<const std::vector<FnTable>>(enumerate_maps(observation, choice, budget));
  const auto one = Carrier::unit(observation.mode());
  Interface src{observation, one};
  Interface dst{choice, payoff};
  StrategyLeaf leaf{"", "decision(" + observation.type_name() + ", " + choice.type_name() + ")", strategies};

  if constexpr (std::is_same_v<Cat, LensCat>) {
    auto label = [strategies, payoff](Profile p) { return decision_lens((*strategies)[p[0]], payoff); };
    auto eq = [strategies](Profile p, const LensContext& k, Trace* trace) {
      const auto& sigma = (*strategies)[p[0]];
      const Elem y = sigma(k.history);
      if (trace) {
        trace->push_back({"", k.src.fwd.show(k.history), k.dst.fwd.show(y), k.dst.bwd.show(k.continuation(y)), "*"});
      }
      return in_argmax(k.continuation, y);
    };
    return OpenGame<Cat>(src, dst, {leaf}, label, eq);
  } else {
    if (observation.mode() != Mode::dcpo) throw ModeError("Int decisions need dcpo carriers");
    auto label = [strategies, payoff](Profile p) { return lens_to_int(decision_lens((*strategies)[p[0]], payoff)); };
    auto eq = [strategies](Profile p, const TracedContext& k, Trace* trace) {
      const auto& sigma = (*strategies)[p[0]];
      const auto& rev = k.reverse;  // (Y, P) -> (X, 1): Y × 1 -> X × P
      const Carrier& y_carrier = rev.src().fwd;
      const Carrier& out = rev.dst().fwd;  // X
      auto history = [&](Elem y) { return rev(y, 0).first; };
      auto cont = FnTable::tabulate(y_carrier, rev.src().bwd, [&](Elem y) { return rev(y, 0).second; });
      const Elem y = kleene_fix_with(y_carrier, [&](Elem v) { return sigma(history(v)); }).value;
      if (trace) {
        trace->push_back({"", out.show(history(y)), y_carrier.show(y), cont.dst().show(cont(y)), "*"});
      }
      return in_argmax(cont, y);
    };
    return OpenGame<Cat>(src, dst, {leaf}, label, eq);
  }
}

// G* : Y* -> X*. Same strategies; labels transpose; a context for G* is
// transposed into a context for G.
inline IntGame og_transpose(const IntGame& g) {
  auto label = [g](Profile p) { return int_transpose(g.label_unchecked(p)); };
  auto eq = [g](Profile p, const TracedContext& k, Trace* trace) {
    return g.equilibrium_unchecked(p, TracedContext{int_transpose(k.reverse)}, trace);
  };
  return IntGame(dual(g.dst()), dual(g.src()), g.leaves(), label, eq);
}

// G* built from zero-player cups and caps:
// Y* ≅ Y*⊗I -> Y*⊗(X⊗X*) -> Y*⊗(Y⊗X*) ≅ (Y*⊗Y)⊗X* -> I⊗X* ≅ X*.
inline IntGame og_transpose_cupcap(const IntGame& g) {
  const Interface x = g.src(), y = g.dst();
  const Interface xs = dual(x), ys = dual(y);
  const Interface unit = unit_interface(Mode::dcpo);
  auto pure = [](const IntMorphism& m) { return og_pure<IntCat>(m); };
  auto s1 = og_canonical<IntCat>(ys, tensor(ys, unit));
  auto s2 = og_tensor(pure(int_id(ys)), pure(int_eta(x)));
  auto s3 = og_tensor(pure(int_id(ys)), og_tensor(g, pure(int_id(xs))));
  auto s4 = og_canonical<IntCat>(tensor(ys, tensor(y, xs)), tensor(tensor(ys, y), xs));
  auto s5 = og_tensor(pure(int_eps(ys)), pure(int_id(xs)));
  auto s6 = og_canonical<IntCat>(tensor(unit, xs), xs);
  return og_seq(og_seq(og_seq(og_seq(og_seq(s1, s2), s3), s4), s5), s6);
}

// Feedback of the trailing factor T of G : A ⊗ T -> B ⊗ T, wired with a cup
// and a cap:
// A ≅ A⊗I -> A⊗(T⊗T*) ≅ (A⊗T)⊗T* -> (B⊗T)⊗T* ≅ B⊗(T⊗T*) -> B⊗I ≅ B.
inline IntGame og_feedback(const IntGame& g) {
  auto [a, t] = split_tensor(g.src());
  auto [b, t_out] = split_tensor(g.dst());
  require_interface(t, t_out, "feedback loop");
  const Interface ts = dual(t);
  const Interface unit = unit_interface(Mode::dcpo);
  auto pure = [](const IntMorphism& m) { return og_pure<IntCat>(m); };
  auto s1 = og_canonical<IntCat>(a, tensor(a, unit));
  auto s2 = og_tensor(pure(int_id(a)), pure(int_eta(t)));
  auto s3 = og_canonical<IntCat>(tensor(a, tensor(t, ts)), tensor(tensor(a, t), ts));
  auto s4 = og_tensor(g, pure(int_id(ts)));
  auto s5 = og_canonical<IntCat>(tensor(tensor(b, t), ts), tensor(b, tensor(t, ts)));
  auto s6 = og_tensor(pure(int_id(b)), pure(int_eps(t)));
  auto s7 = og_canonical<IntCat>(tensor(b, unit), b);
  return og_seq(og_seq(og_seq(og_seq(og_seq(og_seq(s1, s2), s3), s4), s5), s6), s7);
}

// Visits every profile in lexicographic order (first decision most
// significant).
template <ContextStructure Cat, class Visit>
void for_each_profile(const OpenGame<Cat>& g, Visit&& visit) {
  const auto& leaves = g.leaves();
  for (const auto& l : leaves) {
    if (l.size() == 0) return;
  }
  ProfileVec p(leaves.size(), 0);
  while (true) {
    visit(Profile(p));
    std::size_t i = p.size();
    while (i > 0) {
      --i;
      if (++p[i] < leaves[i].size()) break;
      p[i] = 0;
      if (i == 0) return;
    }
    if (p.empty()) return;
  }
}

template <ContextStructure Cat>
void check_strategy_budget(const OpenGame<Cat>& g, std::size_t budget) {
  if (g.strategy_count() > budget) {
    throw BudgetExceeded("strategy space of size " + std::to_string(g.strategy_count()) + " exceeds budget of " +
                         std::to_string(budget));
  }
}

template <ContextStructure Cat>
std::vector<ProfileVec> og_equilibria(const OpenGame<Cat>& g, const typename Cat::Context& k,
                                      std::size_t budget = kDefaultBudget) {
  require_interface(g.src(), Cat::src(k), "context source");
  require_interface(g.dst(), Cat::dst(k), "context target");
  check_strategy_budget(g, budget);
  std::vector<ProfileVec> out;
  for_each_profile(g, [&](Profile p) {
    if (g.equilibrium_unchecked(p, k, nullptr)) out.emplace_back(p.begin(), p.end());
  });
  return out;
}

template <ContextStructure Cat>
std::vector<typename Cat::Context> enumerate_contexts(const Interface& src, const Interface& dst,
                                                      std::size_t budget = kDefaultBudget) {
  std::vector<typename Cat::Context> out;
  Cat::for_each_context(src, dst, budget, [&](typename Cat::Context k) { out.push_back(std::move(k)); });
  return out;
}

// The unique context of a game whose boundary carries no information.
template <ContextStructure Cat>
typename Cat::Context trivial_context(const Interface& src, const Interface& dst) {
  if (!src.is_trivial() || !dst.is_trivial()) {
    throw InterfaceMismatch("game " + src.show() + " -> " + dst.show() + " is not scalar");
  }
  return enumerate_contexts<Cat>(src, dst, 1).front();
}

// Profiles in equilibrium against every context.
template <ContextStructure Cat>
std::vector<ProfileVec> og_winning(const OpenGame<Cat>& g, std::size_t budget = kDefaultBudget) {
  check_strategy_budget(g, budget);
  auto contexts = enumerate_contexts<Cat>(g.src(), g.dst(), budget);
  std::vector<ProfileVec> out;
  for_each_profile(g, [&](Profile p) {
    for (const auto& k : contexts) {
      if (!g.equilibrium_unchecked(p, k, nullptr)) return;
    }
    out.emplace_back(p.begin(), p.end());
  });
  return out;
}

}  // namespace ogame
