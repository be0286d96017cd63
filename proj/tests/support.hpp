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
#include <string_view>

#include "rba/io.hpp"
#include "rba/tensor.hpp"

namespace rba::testing {

inline BaseAlgebra comm(std::string_view decl = "a,b,c,d") { return BaseAlgebra::parse_declaration(Mode::commutative, decl); }
inline BaseAlgebra noncomm(std::string_view decl = "a,b,c,d") {
  return BaseAlgebra::parse_declaration(Mode::noncommutative, decl);
}

// Shorthand: T(A, "(a|b) - 2*(c)").
inline TensorElement T(const BaseAlgebra& A, std::string_view text) { return parse_tensor(A, text); }

inline std::string S(const BaseAlgebra& A, const TensorElement& x) { return format_tensor(A, x); }

}  // namespace rba::testing
