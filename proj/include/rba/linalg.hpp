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

#include <map>
#include <vector>

#include "rba/scalar.hpp"

namespace rba {

using SparseVector = std::map<std::size_t, Scalar>;

/// Basis of {x : Σ_j x_j columns[j] = 0}, computed by fraction-free
/// elimination over the integers. The basis is returned in reduced row
/// echelon form with respect to column order, so it is canonical.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns);

/// Rank of the span of the given vectors.
std::size_t rank_of(const std::vector<SparseVector>& vectors);

}  // namespace rba
