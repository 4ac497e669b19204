// Copyright 2026 The ncseries Authors
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

#ifndef NCSERIES_COMPOSITIONS_HPP
#define NCSERIES_COMPOSITIONS_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "ncseries/rational.hpp"

namespace ncs {

using Composition = std::vector<unsigned>;

// Compositions of n with risings <= 1 and every part >= min_part, ordered by
// number of parts, then lexicographically.
std::vector<Composition> rise_one_compositions(unsigned n, unsigned min_part = 1);

// counts[n][k] = number of compositions of n into k parts with risings <= 1
// and parts >= min_part, for 0 <= n <= max_n. Dynamic programming over the
// last part; no compositions are materialized.
std::vector<std::vector<Integer>> rise_one_counts(unsigned max_n, unsigned min_part = 1);

// Strictly decreasing compositions of n whose parts all lie in the residue
// classes {1, 4} mod 5 (unshifted) or {2, 3} mod 5 (shifted).
std::vector<Composition> hat_excluded(unsigned n, bool shifted);

/// Signed composition counts with the hatted exclusions removed.
///
/// per_k[k - 1] = (-1)^k |C^[n, k]| for k = 1 .. floor(n / min_part), where
/// C^ drops the hat_excluded compositions from the rise-one compositions of n
/// (parts >= 2 when shifted).
struct SignedSumReport {
  unsigned n = 0;
  bool shifted = false;
  std::vector<std::int64_t> per_k;
  std::int64_t total = 0;
  std::vector<Composition> excluded;
};

SignedSumReport hatted_signed_sum(unsigned n, bool shifted);

// {"n": n, "per_k": [...], "total": t, "excluded": [[...], ...]}
nlohmann::json to_json(const SignedSumReport& report);

// "532" when every part is a single digit, "10,1" otherwise.
std::string composition_label(const Composition& c);

}  // namespace ncs

#endif  // NCSERIES_COMPOSITIONS_HPP
