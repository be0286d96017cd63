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

#include <json.hpp>

#include "rba/tensor.hpp"

namespace rba {

std::string format_word(const BaseAlgebra& base, const Word& w);
std::string format_tensor(const BaseAlgebra& base, const TensorElement& x);
std::string format_two_leg(const BaseAlgebra& base, const TwoLeg& x);
std::string format_three_leg(const BaseAlgebra& base, const ThreeLeg& x);
std::string format_base_two_leg(const BaseAlgebra& base, const BaseTwoLeg& x);

/// Parses the text form of a tensor element, e.g. "3/2*(a|b*c) - (1)",
/// "1_K", "2", "0". Scalars denote multiples of 1_K.
TensorElement parse_tensor(const BaseAlgebra& base, std::string_view text);
Word parse_word(const BaseAlgebra& base, std::string_view text);

nlohmann::json to_json(const BaseAlgebra& base, const BaseElement& x);
nlohmann::json to_json(const BaseAlgebra& base, const TensorElement& x);
nlohmann::json to_json(const BaseAlgebra& base, const TwoLeg& x);
nlohmann::json scalar_json(const Scalar& s);

BaseElement base_from_json(const BaseAlgebra& base, const nlohmann::json& j);
TensorElement tensor_from_json(const BaseAlgebra& base, const nlohmann::json& j);
TwoLeg two_leg_from_json(const BaseAlgebra& base, const nlohmann::json& j);

}  // namespace rba
