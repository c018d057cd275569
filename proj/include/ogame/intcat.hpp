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

// The Int construction over finite flat domains. A morphism (X,S) -> (Y,R)
// is a monotone table X × R -> Y × S; feedback loops are solved by Kleene
// iteration per external input. Tensor twists the backward place, matching
// the lens tensor.

#include <string>
#include <utility>

#include "ogame/base.hpp"
#include "ogame/lens.hpp"

namespace ogame {

class IntMorphism {
 public:
  IntMorphism(Interface src, Interface dst, FnTable table)
      : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
    if (src_.mode() != Mode::dcpo || dst_.mode() != Mode::dcpo) {
      throw ModeError("Int morphisms live over dcpo carriers");
    }
    if (!(table_.src() == product(src_.fwd, dst_.bwd)) || !(table_.dst() == product(dst_.fwd, src_.bwd))) {
      throw InterfaceMismatch("Int table does not match " + src_.show() + " -> " + dst_.show());
    }
  }

  // f(x, r) returns the output element of Y × S.
  template <class F>
  static IntMorphism build(const Interface& src, const Interface& dst, F&& f) {
    auto in = product(src.fwd, dst.bwd);
    return IntMorphism(src, dst,
                       FnTable::tabulate(in, product(dst.fwd, src.bwd), [&](Elem e) { return f(in.first(e), in.second(e)); }));
  }

  const Interface& src() const { return src_; }
  const Interface& dst() const { return dst_; }
  const FnTable& table() const { return table_; }

  // (y, s) for input (x, r).
  std::pair<Elem, Elem> operator()(Elem x, Elem r) const {
    Elem out = table_(table_.src().pair(x, r));
    return {table_.dst().first(out), table_.dst().second(out)};
  }

  friend bool operator==(const IntMorphism& a, const IntMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.table_ == b.table_;
  }

  std::string show() const { return "int " + src_.show() + " -> " + dst_.show() + " " + table_.show(); }

 private:
  Interface src_, dst_;
  FnTable table_;
};

inline IntMorphism int_id(const Interface& i) {
  auto out = product(i.fwd, i.bwd);
  return IntMorphism::build(i, i, [&](Elem x, Elem s) { return out.pair(x, s); });
}

// Feedback of the trailing factor U: f : A ⊗ U -> B ⊗ U gives A -> B. The
// loop values (u+, u-) are the least fixpoint for each external input.
inline IntMorphism int_trace(const IntMorphism& f) {
  auto [a, u_in] = split_tensor(f.src());
  auto [b, u_out] = split_tensor(f.dst());
  require_interface(u_in, u_out, "trace loop");
  const Carrier loop = product(u_in.fwd, u_in.bwd);
  const Carrier& in_fwd = f.src().fwd;   // A+ × U+
  const Carrier& out_bwd = f.dst().bwd;  // U- × B-
  const Carrier& out_fwd = f.dst().fwd;  // B+ × U+
  const Carrier& in_bwd = f.src().bwd;   // U- × A-
  auto step = [&](Elem a_fwd, Elem b_bwd, Elem l) {
    Elem up = loop.first(l), um = loop.second(l);
    return f(in_fwd.pair(a_fwd, up), out_bwd.pair(um, b_bwd));
  };
  const Carrier out = product(b.fwd, a.bwd);
  return IntMorphism::build(a, b, [&](Elem a_fwd, Elem b_bwd) {
    auto fix = kleene_fix_with(loop, [&](Elem l) {
      auto [y, s] = step(a_fwd, b_bwd, l);
      return loop.pair(out_fwd.second(y), in_bwd.first(s));
    });
    auto [y, s] = step(a_fwd, b_bwd, fix.value);
    return out.pair(out_fwd.first(y), in_bwd.second(s));
  });
}

// mu after lambda; the middle pair (y, r) is solved as a least fixpoint.
inline IntMorphism int_compose(const IntMorphism& mu, const IntMorphism& lambda) {
  require_interface(lambda.dst(), mu.src(), "Int composition");
  const Carrier loop = product(lambda.dst().fwd, lambda.dst().bwd);  // Y × R
  const Carrier out = product(mu.dst().fwd, lambda.src().bwd);       // Z × S
  return IntMorphism::build(lambda.src(), mu.dst(), [&](Elem x, Elem q) {
    auto fix = kleene_fix_with(loop, [&](Elem l) {
      Elem y = lambda(x, loop.second(l)).first;
      Elem r = mu(loop.first(l), q).second;
      return loop.pair(y, r);
    });
    Elem y = loop.first(fix.value), r = loop.second(fix.value);
    return out.pair(mu(y, q).first, lambda(x, r).second);
  });
}

inline IntMorphism int_tensor(const IntMorphism& a, const IntMorphism& b) {
  auto src = tensor(a.src(), b.src());
  auto dst = tensor(a.dst(), b.dst());
  auto out = product(dst.fwd, src.bwd);
  return IntMorphism::build(src, dst, [&](Elem x, Elem r) {
    auto [y1, s1] = a(src.fwd.first(x), dst.bwd.second(r));
    auto [y2, s2] = b(src.fwd.second(x), dst.bwd.first(r));
    return out.pair(dst.fwd.pair(y1, y2), src.bwd.pair(s2, s1));
  });
}

inline IntMorphism int_symmetry(const Interface& a, const Interface& b) {
  auto src = tensor(a, b);
  auto dst = tensor(b, a);
  auto out = product(dst.fwd, src.bwd);
  return IntMorphism::build(src, dst, [&](Elem x, Elem r) {
    return out.pair(dst.fwd.pair(src.fwd.second(x), src.fwd.first(x)), src.bwd.pair(dst.bwd.second(r), dst.bwd.first(r)));
  });
}

inline IntMorphism int_canonical(const Interface& src, const Interface& dst) {
  auto fwd = canonical_map(src.fwd, dst.fwd);
  auto bwd = canonical_map(dst.bwd, src.bwd);
  auto out = product(dst.fwd, src.bwd);
  return IntMorphism::build(src, dst, [&](Elem x, Elem r) { return out.pair(fwd(x), bwd(r)); });
}

// Cup I -> i ⊗ i*: both sides are X × S and the table is the identity.
inline IntMorphism int_eta(const Interface& i) {
  auto unit = unit_interface(i.mode());
  auto dst = tensor(i, dual(i));
  auto out = product(dst.fwd, unit.bwd);
  return IntMorphism::build(unit, dst, [&](Elem, Elem r) { return out.pair(r, 0); });
}

// Cap i ⊗ i* -> I.
inline IntMorphism int_eps(const Interface& i) {
  auto unit = unit_interface(i.mode());
  auto src = tensor(i, dual(i));
  auto out = product(unit.fwd, src.bwd);
  return IntMorphism::build(src, unit, [&](Elem x, Elem) { return out.pair(0, x); });
}

// (X,S) -> (Y,R) becomes (R,Y) -> (S,X) by exchanging play and coplay.
inline IntMorphism int_transpose(const IntMorphism& m) {
  auto src = dual(m.dst());
  auto dst = dual(m.src());
  auto out = product(dst.fwd, src.bwd);
  return IntMorphism::build(src, dst, [&](Elem r, Elem x) {
    auto [y, s] = m(x, r);
    return out.pair(s, y);
  });
}

// The strict monoidal embedding of lenses: (x, r) |-> (v(x), u(x, r)).
inline IntMorphism lens_to_int(const Lens& l) {
  if (l.src().mode() != Mode::dcpo) throw ModeError("only dcpo lenses embed into Int");
  auto out = product(l.dst().fwd, l.src().bwd);
  return IntMorphism::build(l.src(), l.dst(), [&](Elem x, Elem r) {
    return out.pair(l.view()(x), l.update(x, r));
  });
}

}  // namespace ogame
