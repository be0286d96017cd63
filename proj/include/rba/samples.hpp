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
#include <random>
#include <vector>

#include "rba/tensor.hpp"

namespace rba {

/// All monomials of degree ≤ d, unit included, in canonical order.
std::vector<Monomial> monomials_up_to(const BaseAlgebra& base, unsigned d);
/// All words with letters from `letters` and length in [min_len, max_len].
std::vector<Word> words_over(const std::vector<Monomial>& letters, unsigned min_len, unsigned max_len);
std::vector<TensorElement> as_elements(Mode mode, const std::vector<Word>& words);

/// Seeded draws with a fixed reduction so streams are identical everywhere.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  /// Nonzero rational with numerator in [-3,3] and denominator in [1,3].
  Scalar small_rational();

 private:
  std::mt19937_64 gen_;
};

/// A random combination of 1..max_terms words over `letters`.
TensorElement random_element(SampleRng& rng, Mode mode, const std::vector<Monomial>& letters, unsigned min_len,
                             unsigned max_len, unsigned max_terms = 2);
std::vector<TensorElement> random_pool(SampleRng& rng, Mode mode, const std::vector<Monomial>& letters, unsigned min_len,
                                       unsigned max_len, std::size_t count, unsigned max_terms = 2);

}  // namespace rba
