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

#ifndef NCSERIES_IDENTITIES_HPP
#define NCSERIES_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncseries/qseries.hpp"
#include "ncseries/series.hpp"

namespace ncs {

/// Truncation orders shared by every checker.
struct Bounds {
  std::size_t max_len = 6;
  std::uint64_t max_weight = 15;
  std::size_t max_q = 30;
  std::size_t max_z = 8;
  std::uint64_t seed = 1;

  TruncationContext context() const { return {max_len, max_weight}; }
};

struct Discrepancy {
  std::string check;     // which sub-equality failed
  std::string location;  // word, q-power or (z, q) index
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  bool passed = true;
  // Truncation orders the checker actually used, e.g. {"max_q": 30}.
  std::map<std::string, std::uint64_t> orders;
  std::size_t checks = 0;  // number of sub-equalities evaluated
  std::optional<Discrepancy> discrepancy;
};

struct IdentityInfo {
  std::string_view id;
  std::string_view summary;
};

// Every registered checker, in a fixed order.
std::span<const IdentityInfo> identity_registry();

// Throws UnknownIdentity.
IdentityReport check_identity(std::string_view id, const Bounds& bounds);

nlohmann::json to_json(const IdentityReport& report);
// One line: "PASS quotient (max_len=6, max_weight=15)", with the first
// discrepancy appended on failure.
std::string to_text(const IdentityReport& report);

// Building blocks shared with the tests.

// sum_{n} q^n sum_{k} (-1)^k |C1[n, k]|, parts >= min_part, through q^max_q.
QSeries signed_composition_series(std::size_t max_q, unsigned min_part);
// sum over rise-one compositions kappa of q^|kappa| prod_i (1 - q^{kappa_i + 1}).
QSeries closing_composition_side(std::size_t max_q);
// sum over 2-distinct partitions lambda of q^|lambda| prod_i (q^{lambda_i + 1} - 1).
QSeries closing_partition_side(std::size_t max_q);
// prod_{n=1}^{max_q} (1 - q^n).
QSeries euler_product(std::size_t max_q);

// Left sides of the q-identities obtained from the branchless-tree family.
// sum_n q^{C(n,2)} z^n / prod_{k=1}^n (1 + z q^k).
QPoly branchless_sum(std::size_t max_z, std::size_t max_q);
// sum_n q^{n^2} z^n / prod_{j=0}^n (1 + z q^{2j+1}).
QPoly rogers_odd_sum(std::size_t max_z, std::size_t max_q);
// sum_n z^n q^{C(n,2)} c^n sum_j q^{jn} / prod_{k=1}^n (1 + sign z q^{j+k} c),
// where c = 1 - q if scaled and c = 1 otherwise. sign = +1 is the form that
// holds; sign = -1 is kept so tests can show the other sign fails.
QPoly double_sum(std::size_t max_z, std::size_t max_q, bool scaled, int sign = 1);

}  // namespace ncs

#endif  // NCSERIES_IDENTITIES_HPP
