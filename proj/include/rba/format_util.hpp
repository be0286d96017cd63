// Copyright 2026 The rba Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "rba/linear.hpp"

namespace rba {

/// Renders c1*k1 + c2*k2 - ... in canonical term order. `key` returns an
/// empty string for a key that represents the scalar unit.
template <class Key, class F>
std::string format_linear(const Linear<Key>& x, F&& key) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    bool negative = c < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string ks = key(k);
    if (ks.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += ks;
    } else {
      out += to_string(mag) + "*" + ks;
    }
  }
  return out;
}

}  // namespace rba
