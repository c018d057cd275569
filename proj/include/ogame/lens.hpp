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

// The symmetric monoidal category of lenses over a finite cartesian base.

#include <string>
#include <utility>

#include "ogame/base.hpp"

namespace ogame {

// A pair (X, S): forward carrier X, backward carrier S.
struct Interface {
  Carrier fwd;
  Carrier bwd;

  Mode mode() const { return fwd.mode(); }

  friend bool operator==(const Interface& a, const Interface& b) { return a.fwd == b.fwd && a.bwd == b.bwd; }

  std::string show() const { return "(" + fwd.type_name() + ", " + bwd.type_name() + ")"; }

  // Both carriers consist of unit leaves only.
  bool is_trivial() const { return fwd.factor_count() == 0 && bwd.factor_count() == 0; }
};

inline Interface make_interface(Carrier fwd, Carrier bwd) {
  require_same_mode(fwd, bwd, "interface");
  return {std::move(fwd), std::move(bwd)};
}

inline Interface unit_interface(Mode mode) { return {Carrier::unit(mode), Carrier::unit(mode)}; }

// (X1, S1) ⊗ (X2, S2) = (X1 × X2, S2 × S1): the backward factors swap.
inline Interface tensor(const Interface& a, const Interface& b) {
  require_same_mode(a.fwd, b.fwd, "interface tensor");
  return {product(a.fwd, b.fwd), product(b.bwd, a.bwd)};
}

// Inverse of tensor on the nose.
inline std::pair<Interface, Interface> split_tensor(const Interface& t) {
  if (!t.fwd.is_product() || !t.bwd.is_product()) {
    throw InterfaceMismatch("interface " + t.show() + " is not a tensor");
  }
  return {{t.fwd.left(), t.bwd.right()}, {t.fwd.right(), t.bwd.left()}};
}

inline Interface dual(const Interface& i) { return {i.bwd, i.fwd}; }

inline bool leaf_equivalent(const Interface& a, const Interface& b) {
  return Carrier::leaf_equivalent(a.fwd, b.fwd) && Carrier::leaf_equivalent(a.bwd, b.bwd);
}

inline void require_interface(const Interface& expected, const Interface& actual, std::string_view what) {
  if (!(expected == actual)) {
    throw InterfaceMismatch(std::string(what) + ": expected " + expected.show() + ", got " + actual.show());
  }
}

// view : X -> Y, update : X × R -> S.
class Lens {
 public:
  Lens(Interface src, Interface dst, FnTable view, FnTable update)
      : src_(std::move(src)), dst_(std::move(dst)), view_(std::move(view)), update_(std::move(update)) {
    if (!(view_.src() == src_.fwd) || !(view_.dst() == dst_.fwd)) {
      throw InterfaceMismatch("lens view does not match " + src_.show() + " -> " + dst_.show());
    }
    if (!(update_.src() == product(src_.fwd, dst_.bwd)) || !(update_.dst() == src_.bwd)) {
      throw InterfaceMismatch("lens update does not match " + src_.show() + " -> " + dst_.show());
    }
  }

  // Builds both tables from callables; update receives (x, r).
  template <class V, class U>
  static Lens build(const Interface& src, const Interface& dst, V&& view, U&& update) {
    auto xr = product(src.fwd, dst.bwd);
    return Lens(src, dst, FnTable::tabulate(src.fwd, dst.fwd, view),
                FnTable::tabulate(xr, src.bwd, [&](Elem e) { return update(xr.first(e), xr.second(e)); }));
  }

  const Interface& src() const { return src_; }
  const Interface& dst() const { return dst_; }
  const FnTable& view() const { return view_; }
  const FnTable& update() const { return update_; }

  Elem update(Elem x, Elem r) const { return update_(update_.src().pair(x, r)); }

  friend bool operator==(const Lens& a, const Lens& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.view_ == b.view_ && a.update_ == b.update_;
  }

  std::string show() const { return "lens " + src_.show() + " -> " + dst_.show() + " view " + view_.show() + " update " + update_.show(); }

 private:
  Interface src_, dst_;
  FnTable view_, update_;
};

// Copycat: identity view, update projects the backward input.
inline Lens lens_id(const Interface& i) {
  return Lens::build(i, i, [](Elem x) { return x; }, [](Elem, Elem s) { return s; });
}

// mu after lambda.
inline Lens lens_compose(const Lens& mu, const Lens& lambda) {
  require_interface(lambda.dst(), mu.src(), "lens composition");
  return Lens::build(
      lambda.src(), mu.dst(), [&](Elem x) { return mu.view()(lambda.view()(x)); },
      [&](Elem x, Elem q) { return lambda.update(x, mu.update(lambda.view()(x), q)); });
}

// update((x1, x2), (r2, r1)) = (u2(x2, r2), u1(x1, r1)).
inline Lens lens_tensor(const Lens& a, const Lens& b) {
  require_same_mode(a.src().fwd, b.src().fwd, "lens tensor");
  auto src = tensor(a.src(), b.src());
  auto dst = tensor(a.dst(), b.dst());
  return Lens::build(
      src, dst,
      [&](Elem x) { return dst.fwd.pair(a.view()(src.fwd.first(x)), b.view()(src.fwd.second(x))); },
      [&](Elem x, Elem r) {
        Elem x1 = src.fwd.first(x), x2 = src.fwd.second(x);
        Elem r2 = dst.bwd.first(r), r1 = dst.bwd.second(r);
        return src.bwd.pair(b.update(x2, r2), a.update(x1, r1));
      });
}

// a ⊗ b -> b ⊗ a.
inline Lens lens_symmetry(const Interface& a, const Interface& b) {
  auto src = tensor(a, b);
  auto dst = tensor(b, a);
  return Lens::build(
      src, dst, [&](Elem x) { return dst.fwd.pair(src.fwd.second(x), src.fwd.first(x)); },
      [&](Elem, Elem r) { return src.bwd.pair(dst.bwd.second(r), dst.bwd.first(r)); });
}

// Associators and unitors: positional re-bracketing between interfaces with
// the same non-unit leaves.
inline Lens lens_canonical(const Interface& src, const Interface& dst) {
  auto fwd = canonical_map(src.fwd, dst.fwd);
  auto bwd = canonical_map(dst.bwd, src.bwd);
  return Lens::build(src, dst, [&](Elem x) { return fwd(x); }, [&](Elem, Elem r) { return bwd(r); });
}

enum class Structural { copy, del, counit };

// copy : (X,1) -> (X×X,1); delete : (X,1) -> I; counit : (X,X) -> I.
inline Lens lens_structural(Structural kind, const Carrier& x) {
  const Mode m = x.mode();
  auto one = Carrier::unit(m);
  switch (kind) {
    case Structural::copy: {
      auto xx = product(x, x);
      return Lens::build({x, one}, {xx, one}, [&](Elem e) { return xx.pair(e, e); }, [](Elem, Elem) { return 0; });
    }
    case Structural::del:
      return Lens::build({x, one}, unit_interface(m), [](Elem) { return 0; }, [](Elem, Elem) { return 0; });
    case Structural::counit:
      return Lens::build({x, x}, unit_interface(m), [](Elem) { return 0; }, [](Elem e, Elem) { return e; });
  }
  throw std::logic_error("unknown structural lens");
}

inline Lens lens_copy(const Carrier& x) { return lens_structural(Structural::copy, x); }
inline Lens lens_delete(const Carrier& x) { return lens_structural(Structural::del, x); }
inline Lens lens_counit(const Carrier& x) { return lens_structural(Structural::counit, x); }

enum class Variance { cov, contra };

// cov : (X,1) -> (Y,1) with view f; contra : (1,Y) -> (1,X) with update f.
inline Lens lift(const FnTable& f, Variance variance) {
  auto one = Carrier::unit(f.src().mode());
  if (variance == Variance::cov) {
    return Lens::build({f.src(), one}, {f.dst(), one}, [&](Elem x) { return f(x); }, [](Elem, Elem) { return 0; });
  }
  return Lens::build({one, f.dst()}, {one, f.src()}, [](Elem) { return 0; }, [&](Elem, Elem x) { return f(x); });
}

}  // namespace ogame
