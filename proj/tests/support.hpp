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

#include <string>
#include <utility>
#include <vector>

#include "ogame/ogame.hpp"

namespace ogame::test {

inline Carrier flat(const std::string& name, std::vector<std::string> atoms) {
  return Carrier::atomic(Mode::dcpo, name, std::move(atoms));
}

inline Carrier discrete(const std::string& name, std::vector<std::string> atoms) {
  return Carrier::atomic(Mode::set, name, std::move(atoms));
}

// Element of an atomic carrier by atom name.
inline Elem at(const Carrier& c, const std::string& atom) { return *c.find_atom(atom); }

// Flat-order oracle, written independently of Carrier::leq.
inline bool flat_leq(const Carrier& c, Elem x, Elem y) {
  for (std::size_t k = 0; k < c.leaf_count(); ++k) {
    const auto dx = c.digit(x, k), dy = c.digit(y, k);
    if (dx != 0 && dx != dy) return false;
  }
  return true;
}

inline FnTable table(const Carrier& src, const Carrier& dst, std::vector<Elem> image) {
  return FnTable(src, dst, std::move(image));
}

}  // namespace ogame::test
