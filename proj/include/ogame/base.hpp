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

// Finite carriers (plain sets and flat domains), checked function tables,
// map enumeration, Kleene least fixpoints and argmax over payoffs.
//
// Elements of a carrier are dense indices. A carrier is a binary tree of
// products over atomic leaves; an element is the mixed-radix number whose
// digits are the leaf components, left leaves most significant. In dcpo mode
// digit 0 of every leaf is bottom, so index 0 is the everywhere-bottom element
// and zeroing digits only ever moves down the order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace ogame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Set-mode vs dcpo-mode mixing, or an operation that needs a particular mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

// Non-total, duplicated or non-monotone tables; bad atoms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when Kleene iteration fails to stabilise within the height bound.
// Only reachable through a broken monotonicity invariant.
class FixpointBoundExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

enum class Mode { set, dcpo };

inline std::string_view to_string(Mode m) {
  return m == Mode::set ? "set" : "dcpo";
}

using Elem = std::uint32_t;
using Rational = boost::rational<std::int64_t>;

inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "n" and "n/d" with an optional leading '-'.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<std::int64_t> {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    if (allow_sign && s.front() == '-') {
      neg = true;
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 17) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text, true);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash), true);
  auto d = parse_int(text.substr(slash + 1), false);
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

class Carrier {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    Mode mode = Mode::set;
    bool unit = false;
    std::string name;                  // atomic: domain name used for display and typing
    std::vector<std::string> atoms;    // atomic only, declaration order
    std::vector<Rational> values;      // payoff carriers: numeric value per atom
    NodePtr left, right;               // product only
    std::size_t size = 0;
    std::vector<const Node*> leaves;   // atomic leaves, left to right
    std::vector<std::uint32_t> radix;  // per leaf
    std::vector<std::uint32_t> stride; // per leaf
  };

 public:
  // The empty set-mode carrier; mostly useful as a placeholder.
  Carrier() : Carrier(make_atomic(Mode::set, "", {}, {}, false)) {}

  static Carrier atomic(Mode mode, std::string name, std::vector<std::string> atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].empty()) throw ValidationError("empty atom name");
      for (std::size_t j = 0; j < i; ++j) {
        if (atoms[i] == atoms[j]) throw ValidationError("duplicate atom '" + atoms[i] + "'");
      }
    }
    return make_atomic(mode, std::move(name), std::move(atoms), {}, false);
  }

  static Carrier unit(Mode mode) {
    if (mode == Mode::set) return make_atomic(mode, "1", {"*"}, {}, true);
    return make_atomic(mode, "1", {}, {}, true);
  }

  // Flat carrier of exact payoffs. Values are sorted and deduplicated so two
  // payoff carriers built from the same literals compare equal.
  static Carrier payoff(Mode mode, std::vector<Rational> values, std::string name = "Real") {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::string> atoms;
    atoms.reserve(values.size());
    for (const auto& v : values) atoms.push_back(format_rational(v));
    return make_atomic(mode, std::move(name), std::move(atoms), std::move(values), false);
  }

  static Carrier product(const Carrier& a, const Carrier& b) {
    if (a.mode() != b.mode()) {
      throw ModeError("product of " + std::string(to_string(a.mode())) + " and " +
                      std::string(to_string(b.mode())) + " carriers");
    }
    if (a.size() != 0 && b.size() > std::numeric_limits<Elem>::max() / a.size()) {
      throw BudgetExceeded("carrier product too large");
    }
    auto n = std::make_shared<Node>();
    n->mode = a.mode();
    n->left = a.node_;
    n->right = b.node_;
    n->size = a.size() * b.size();
    n->leaves = a.node_->leaves;
    n->leaves.insert(n->leaves.end(), b.node_->leaves.begin(), b.node_->leaves.end());
    n->radix = a.node_->radix;
    n->radix.insert(n->radix.end(), b.node_->radix.begin(), b.node_->radix.end());
    n->stride.resize(n->radix.size());
    std::uint32_t s = 1;
    for (std::size_t k = n->radix.size(); k-- > 0;) {
      n->stride[k] = s;
      s *= std::max<std::uint32_t>(n->radix[k], 1);
    }
    return Carrier(std::move(n));
  }

  Mode mode() const { return node_->mode; }
  std::size_t size() const { return node_->size; }
  bool is_product() const { return node_->left != nullptr; }
  bool is_atomic() const { return !is_product(); }
  bool is_unit() const { return node_->unit; }
  bool is_payoff() const { return is_atomic() && !node_->values.empty(); }
  bool is_dcpo() const { return mode() == Mode::dcpo; }

  Carrier left() const { require_product(); return Carrier(node_->left); }
  Carrier right() const { require_product(); return Carrier(node_->right); }

  const std::string& name() const { return node_->name; }
  const std::vector<std::string>& atoms() const { return node_->atoms; }

  Elem pair(Elem a, Elem b) const { return a * static_cast<Elem>(node_->right->size) + b; }
  Elem first(Elem e) const { return e / static_cast<Elem>(node_->right->size); }
  Elem second(Elem e) const { return e % static_cast<Elem>(node_->right->size); }

  std::size_t leaf_count() const { return node_->leaves.size(); }
  std::uint32_t radix(std::size_t k) const { return node_->radix[k]; }
  std::uint32_t stride(std::size_t k) const { return node_->stride[k]; }
  std::uint32_t digit(Elem e, std::size_t k) const { return (e / node_->stride[k]) % node_->radix[k]; }
  Carrier leaf(std::size_t k) const;

  // Number of leaves that are not the unit.
  std::size_t factor_count() const {
    return static_cast<std::size_t>(
        std::count_if(node_->leaves.begin(), node_->leaves.end(), [](const Node* l) { return !l->unit; }));
  }

  bool is_bottom(Elem e) const { return is_dcpo() && e == 0; }

  bool leq(Elem x, Elem y) const {
    if (x == y) return true;
    if (!is_dcpo()) return false;
    for (std::size_t k = 0; k < leaf_count(); ++k) {
      auto dx = digit(x, k);
      if (dx != 0 && dx != digit(y, k)) return false;
    }
    return true;
  }

  // Componentwise meet; exists in every flat product.
  Elem meet(Elem x, Elem y) const {
    if (!is_dcpo()) return x;
    Elem out = 0;
    for (std::size_t k = 0; k < leaf_count(); ++k) {
      auto dx = digit(x, k);
      if (dx == digit(y, k)) out += dx * stride(k);
    }
    return out;
  }

  // Elements obtained by replacing exactly one bottom digit with an atom.
  template <class F>
  void for_each_upper_cover(Elem x, F&& f) const {
    if (!is_dcpo()) return;
    for (std::size_t k = 0; k < leaf_count(); ++k) {
      if (digit(x, k) != 0) continue;
      for (std::uint32_t a = 1; a < radix(k); ++a) f(x + a * stride(k));
    }
  }

  template <class F>
  void for_each_lower_cover(Elem x, F&& f) const {
    if (!is_dcpo()) return;
    for (std::size_t k = 0; k < leaf_count(); ++k) {
      auto d = digit(x, k);
      if (d != 0) f(x - d * stride(k));
    }
  }

  // Numeric value of a payoff element; nullopt for bottom.
  std::optional<Rational> value(Elem e) const {
    if (!is_payoff()) throw ValidationError("carrier '" + name() + "' is not a payoff domain");
    if (is_dcpo()) {
      if (e == 0) return std::nullopt;
      return node_->values[e - 1];
    }
    return node_->values[e];
  }

  std::optional<Elem> find_atom(std::string_view atom) const {
    if (!is_atomic()) return std::nullopt;
    const auto& as = node_->atoms;
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (as[i] == atom) return static_cast<Elem>(is_dcpo() ? i + 1 : i);
    }
    return std::nullopt;
  }

  // Canonical display: leaves flattened into a tuple.
  std::string show(Elem e) const {
    if (leaf_count() == 1) return show_leaf(node_->leaves[0], e);
    std::string out = "(";
    for (std::size_t k = 0; k < leaf_count(); ++k) {
      if (k) out += ",";
      out += show_leaf(node_->leaves[k], digit(e, k));
    }
    return out + ")";
  }

  // Type expression, e.g. "X * (Y * Real)".
  std::string type_name() const {
    if (is_atomic()) {
      if (!name().empty()) return name();
      std::string out = "{";
      for (std::size_t i = 0; i < atoms().size(); ++i) out += (i ? "," : "") + atoms()[i];
      return out + "}";
    }
    auto r = right();
    auto rs = r.type_name();
    if (r.is_product()) rs = "(" + rs + ")";
    return left().type_name() + " * " + rs;
  }

  friend bool operator==(const Carrier& a, const Carrier& b) { return same(a.node_.get(), b.node_.get()); }

  // Structural equality of the non-unit leaf sequences.
  static bool leaf_equivalent(const Carrier& a, const Carrier& b) {
    auto la = a.non_unit_leaves();
    auto lb = b.non_unit_leaves();
    if (la.size() != lb.size()) return false;
    for (std::size_t i = 0; i < la.size(); ++i) {
      if (!same(a.node_->leaves[la[i]], b.node_->leaves[lb[i]])) return false;
    }
    return true;
  }

  std::vector<std::size_t> non_unit_leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < leaf_count(); ++k) {
      if (!node_->leaves[k]->unit) out.push_back(k);
    }
    return out;
  }

 private:
  explicit Carrier(NodePtr n) : node_(std::move(n)) {}

  static Carrier make_atomic(Mode mode, std::string name, std::vector<std::string> atoms,
                             std::vector<Rational> values, bool unit) {
    auto n = std::make_shared<Node>();
    n->mode = mode;
    n->unit = unit;
    n->name = std::move(name);
    n->atoms = std::move(atoms);
    n->values = std::move(values);
    n->size = n->atoms.size() + (mode == Mode::dcpo ? 1 : 0);
    n->radix = {static_cast<std::uint32_t>(n->size)};
    n->stride = {1};
    auto* raw = n.get();
    n->leaves = {raw};
    return Carrier(std::move(n));
  }

  static bool same(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->mode != b->mode || a->unit != b->unit || a->size != b->size) return false;
    if ((a->left == nullptr) != (b->left == nullptr)) return false;
    if (a->left) return same(a->left.get(), b->left.get()) && same(a->right.get(), b->right.get());
    return a->name == b->name && a->atoms == b->atoms && a->values == b->values;
  }

  static std::string show_leaf(const Node* leaf, std::uint32_t d) {
    if (leaf->mode == Mode::dcpo) {
      if (d == 0) return "⊥";
      return leaf->atoms[d - 1];
    }
    return leaf->atoms[d];
  }

  void require_product() const {
    if (!is_product()) throw InterfaceMismatch("carrier '" + type_name() + "' is not a product");
  }

  NodePtr node_;
};

inline Carrier Carrier::leaf(std::size_t k) const {
  // Leaves are owned by the tree; rebuild a handle by walking down.
  std::function<NodePtr(const NodePtr&, std::size_t&)> walk = [&](const NodePtr& n, std::size_t& idx) -> NodePtr {
    if (!n->left) {
      if (idx == 0) return n;
      --idx;
      return nullptr;
    }
    if (auto l = walk(n->left, idx)) return l;
    return walk(n->right, idx);
  };
  std::size_t idx = k;
  return Carrier(walk(node_, idx));
}

// Atoms in declaration order; dcpo mode adds an implicit bottom.
inline Carrier make_carrier(Mode mode, std::vector<std::string> atoms, std::string name = {}) {
  if (mode == Mode::dcpo && atoms.empty()) return Carrier::unit(mode);
  return Carrier::atomic(mode, std::move(name), std::move(atoms));
}

inline Carrier product(const Carrier& a, const Carrier& b) { return Carrier::product(a, b); }

// Left-associated product of a nonempty list; the unit for an empty list.
inline Carrier product_of(std::span<const Carrier> factors, Mode mode) {
  if (factors.empty()) return Carrier::unit(mode);
  Carrier out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = product(out, factors[i]);
  return out;
}

inline void require_same_mode(const Carrier& a, const Carrier& b, std::string_view what) {
  if (a.mode() != b.mode()) {
    throw ModeError(std::string(what) + ": mode mismatch (" + std::string(to_string(a.mode())) + " vs " +
                    std::string(to_string(b.mode())) + ")");
  }
}

class FnTable {
 public:
  FnTable() = default;

  // Validates range and, in dcpo mode, monotonicity.
  FnTable(Carrier src, Carrier dst, std::vector<Elem> image)
      : src_(std::move(src)), dst_(std::move(dst)), image_(std::move(image)) {
    require_same_mode(src_, dst_, "function table");
    if (image_.size() != src_.size()) throw ValidationError("function table is not total");
    for (Elem e : image_) {
      if (e >= dst_.size()) throw ValidationError("function table image out of range");
    }
    check_monotone();
  }

  // Builds a table from explicit (input, output) pairs. Every input must appear
  // exactly once.
  static FnTable from_entries(const Carrier& src, const Carrier& dst, std::span<const std::pair<Elem, Elem>> entries) {
    require_same_mode(src, dst, "function table");
    constexpr Elem unset = std::numeric_limits<Elem>::max();
    std::vector<Elem> image(src.size(), unset);
    for (auto [x, y] : entries) {
      if (x >= src.size() || y >= dst.size()) throw ValidationError("function table entry out of range");
      if (image[x] != unset) throw ValidationError("duplicate entry for " + src.show(x));
      image[x] = y;
    }
    for (Elem x = 0; x < image.size(); ++x) {
      if (image[x] == unset) throw ValidationError("missing entry for " + src.show(x));
    }
    return FnTable(src, dst, std::move(image));
  }

  template <class F>
  static FnTable tabulate(const Carrier& src, const Carrier& dst, F&& f) {
    std::vector<Elem> image(src.size());
    for (Elem x = 0; x < image.size(); ++x) image[x] = static_cast<Elem>(f(x));
    return FnTable(src, dst, std::move(image));
  }

  const Carrier& src() const { return src_; }
  const Carrier& dst() const { return dst_; }
  Elem operator()(Elem x) const { return image_[x]; }
  const std::vector<Elem>& image() const { return image_; }

  friend bool operator==(const FnTable& a, const FnTable& b) {
    return a.image_ == b.image_ && a.src_ == b.src_ && a.dst_ == b.dst_;
  }

  std::string show() const {
    std::string out = "{";
    for (Elem x = 0; x < image_.size(); ++x) {
      if (x) out += ", ";
      out += src_.show(x) + "->" + dst_.show(image_[x]);
    }
    return out + "}";
  }

 private:
  // Flat products are generated by single-digit covers, so checking covers
  // suffices.
  void check_monotone() const {
    if (!src_.is_dcpo()) return;
    for (Elem x = 0; x < image_.size(); ++x) {
      src_.for_each_upper_cover(x, [&](Elem y) {
        if (!dst_.leq(image_[x], image_[y])) {
          throw ValidationError("monotonicity violated: " + src_.show(x) + " ≤ " + src_.show(y) + " but " +
                                dst_.show(image_[x]) + " ≰ " + dst_.show(image_[y]));
        }
      });
    }
  }

  Carrier src_, dst_;
  std::vector<Elem> image_;
};

inline FnTable fn_table(const Carrier& src, const Carrier& dst, std::span<const std::pair<Elem, Elem>> entries) {
  return FnTable::from_entries(src, dst, entries);
}

inline FnTable identity_table(const Carrier& c) {
  return FnTable::tabulate(c, c, [](Elem x) { return x; });
}

inline FnTable constant_table(const Carrier& src, const Carrier& dst, Elem value) {
  return FnTable::tabulate(src, dst, [&](Elem) { return value; });
}

// g after f.
inline FnTable compose_tables(const FnTable& g, const FnTable& f) {
  if (!(f.dst() == g.src())) throw InterfaceMismatch("table composition: " + f.dst().type_name() + " vs " + g.src().type_name());
  return FnTable::tabulate(f.src(), g.dst(), [&](Elem x) { return g(f(x)); });
}

// Positional bijection between carriers with the same non-unit leaves; this
// realises every associator and unitor.
inline FnTable canonical_map(const Carrier& from, const Carrier& to) {
  if (!Carrier::leaf_equivalent(from, to)) {
    throw InterfaceMismatch("no canonical isomorphism from " + from.type_name() + " to " + to.type_name());
  }
  auto lf = from.non_unit_leaves();
  auto lt = to.non_unit_leaves();
  return FnTable::tabulate(from, to, [&](Elem x) {
    Elem y = 0;
    for (std::size_t i = 0; i < lf.size(); ++i) y += from.digit(x, lf[i]) * to.stride(lt[i]);
    return y;
  });
}

// Lexicographic in the image vector (first input most significant), checking
// only the lower covers of each newly assigned input.
template <class Visit>
void for_each_map(const Carrier& src, const Carrier& dst, Visit&& visit) {
  require_same_mode(src, dst, "map enumeration");
  const std::size_t n = src.size();
  if (n == 0) {
    visit(FnTable(src, dst, {}));
    return;
  }
  if (dst.size() == 0) return;
  std::vector<Elem> image(n, 0);
  const bool monotone = src.is_dcpo();
  auto admissible = [&](Elem x) {
    if (!monotone) return true;
    bool ok = true;
    src.for_each_lower_cover(x, [&](Elem z) { ok = ok && dst.leq(image[z], image[x]); });
    return ok;
  };
  std::size_t pos = 0;
  image[0] = 0;
  // Iterative DFS; image[pos] is the candidate under consideration.
  while (true) {
    if (image[pos] < dst.size() && admissible(static_cast<Elem>(pos))) {
      if (pos + 1 == n) {
        visit(FnTable(src, dst, image));
        ++image[pos];
      } else {
        ++pos;
        image[pos] = 0;
      }
      continue;
    }
    if (image[pos] < dst.size()) {
      ++image[pos];
      continue;
    }
    if (pos == 0) return;
    --pos;
    ++image[pos];
  }
}

inline std::vector<FnTable> enumerate_maps(const Carrier& src, const Carrier& dst,
                                           std::size_t budget = std::numeric_limits<std::size_t>::max()) {
  std::vector<FnTable> out;
  for_each_map(src, dst, [&](FnTable t) {
    if (out.size() >= budget) {
      throw BudgetExceeded("more than " + std::to_string(budget) + " maps " + src.type_name() + " -> " +
                           dst.type_name());
    }
    out.push_back(std::move(t));
  });
  return out;
}

struct Fixpoint {
  Elem value = 0;
  std::size_t steps = 0;  // applications of the map until stable
};

// Least fixpoint by iteration from bottom. The chain height of a flat product
// is its factor count, so stability is reached within leaf_count() + 1 steps.
template <class F>
Fixpoint kleene_fix_with(const Carrier& domain, F&& f) {
  if (!domain.is_dcpo()) throw ModeError("least fixpoints need a dcpo carrier");
  const std::size_t bound = domain.leaf_count() + 1;
  Elem x = 0;
  for (std::size_t step = 1; step <= bound; ++step) {
    Elem next = static_cast<Elem>(f(x));
    if (next == x) return {x, step};
    x = next;
  }
  throw FixpointBoundExceeded("Kleene iteration on " + domain.type_name() + " did not stabilise within " +
                              std::to_string(bound) + " steps");
}

inline Fixpoint kleene_fix(const FnTable& f) {
  if (!(f.src() == f.dst())) throw InterfaceMismatch("kleene_fix needs an endomap");
  return kleene_fix_with(f.src(), [&](Elem x) { return f(x); });
}

// ⊥ sits strictly below every rational; rationals compare numerically.
inline bool payoff_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!b) return false;
  if (!a) return true;
  return *a < *b;
}

// Maximisers of k under the extended order; ties kept, ascending element order.
inline std::vector<Elem> argmax(const FnTable& k) {
  const Carrier& p = k.dst();
  if (!p.is_payoff() && !(p.is_atomic() && p.is_dcpo() && p.atoms().empty())) {
    throw ValidationError("argmax needs a payoff codomain, got " + p.type_name());
  }
  auto val = [&](Elem y) -> std::optional<Rational> {
    if (p.is_dcpo() && k(y) == 0) return std::nullopt;
    return p.value(k(y));
  };
  std::vector<Elem> best;
  std::optional<Rational> top;
  bool any = false;
  for (Elem y = 0; y < k.src().size(); ++y) {
    auto v = val(y);
    if (!any || payoff_less(top, v)) {
      best.clear();
      top = v;
      any = true;
      best.push_back(y);
    } else if (!payoff_less(v, top)) {
      best.push_back(y);
    }
  }
  return best;
}

inline bool in_argmax(const FnTable& k, Elem y) {
  auto best = argmax(k);
  return std::find(best.begin(), best.end(), y) != best.end();
}

}  // namespace ogame
