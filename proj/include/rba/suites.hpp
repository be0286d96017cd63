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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rba/operators.hpp"

namespace rba {

struct SuiteConfig {
  /// When set, the operator suites check P_A against this product instead
  /// of the reference claims.
  std::optional<ProductKind> product;
  Scalar theta = 1;  // weight for the rota_baxter checker when product is set
  Mode mode = Mode::commutative;
  unsigned max_len = 3;     // exhaustive word length bound
  unsigned random_len = 4;  // randomized word length bound
  std::size_t cases = 200;  // randomized cases per check
  std::uint64_t seed = 42;
  unsigned spitzer_order = 4;
  unsigned primitive_bound = 3;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckReport> reports;
  bool ok() const;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

nlohmann::json report_json(const CheckReport& r);
std::string report_line(const CheckReport& r);

}  // namespace rba
