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

// Generators for randomized law checking. Only the raw engine output is used
// so that a seed reproduces the same instances on every standard library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ogame/base.hpp"
#include "ogame/intcat.hpp"
#include "ogame/lens.hpp"

namespace ogame {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  bool coin() { return below(2) == 0; }

 private:
  std::mt19937_64 engine_;
};

// Atomic carrier with between min_atoms and max_atoms atoms. Names are drawn
// from a small pool so that composable carriers coincide often enough.
inline Carrier random_carrier(Rng& rng, Mode mode, std::size_t max_atoms, std::size_t min_atoms = 1) {
  const std::size_t n = min_atoms + rng.below(max_atoms - min_atoms + 1);
  if (n == 0) return Carrier::unit(mode);
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
  return Carrier::atomic(mode, "D" + std::to_string(n), std::move(atoms));
}

// Uniform over all total maps in set mode. In dcpo mode, inputs are filled
// from the top of the order down: each input picks an element below the meet
// of the images of its upper covers, which always exists in a flat product.
inline FnTable random_table(Rng& rng, const Carrier& src, const Carrier& dst) {
  require_same_mode(src, dst, "random table");
  std::vector<Elem> image(src.size(), 0);
  if (!src.is_dcpo()) {
    for (auto& e : image) e = static_cast<Elem>(rng.below(dst.size()));
    return FnTable(src, dst, std::move(image));
  }
  std::vector<Elem> order(src.size());
  std::vector<std::size_t> height(src.size(), 0);
  for (Elem x = 0; x < src.size(); ++x) {
    order[x] = x;
    for (std::size_t k = 0; k < src.leaf_count(); ++k) height[x] += src.digit(x, k) != 0;
  }
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return height[a] > height[b]; });
  for (Elem x : order) {
    bool bounded = false;
    Elem bound = 0;
    src.for_each_upper_cover(x, [&](Elem y) {
      bound = bounded ? dst.meet(bound, image[y]) : image[y];
      bounded = true;
    });
    if (!bounded) {
      image[x] = static_cast<Elem>(rng.below(dst.size()));
      continue;
    }
    // Half the time keep the bound itself (lazy behaviour); otherwise drop a
    // random subset of its defined components.
    Elem pick = bound;
    if (rng.coin()) {
      for (std::size_t k = 0; k < dst.leaf_count(); ++k) {
        auto d = dst.digit(pick, k);
        if (d != 0 && rng.coin()) pick -= d * dst.stride(k);
      }
    }
    image[x] = pick;
  }
  return FnTable(src, dst, std::move(image));
}

inline Elem random_element(Rng& rng, const Carrier& c) { return static_cast<Elem>(rng.below(c.size())); }

inline Interface random_interface(Rng& rng, Mode mode, std::size_t max_atoms) {
  auto side = [&] { return rng.below(4) == 0 ? Carrier::unit(mode) : random_carrier(rng, mode, max_atoms); };
  auto fwd = side();
  auto bwd = side();
  return {fwd, bwd};
}

inline Lens random_lens(Rng& rng, const Interface& src, const Interface& dst) {
  return Lens(src, dst, random_table(rng, src.fwd, dst.fwd), random_table(rng, product(src.fwd, dst.bwd), src.bwd));
}

inline IntMorphism random_int(Rng& rng, const Interface& src, const Interface& dst) {
  return IntMorphism(src, dst, random_table(rng, product(src.fwd, dst.bwd), product(dst.fwd, src.bwd)));
}

}  // namespace ogame
