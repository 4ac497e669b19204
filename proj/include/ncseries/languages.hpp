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

#ifndef NCSERIES_LANGUAGES_HPP
#define NCSERIES_LANGUAGES_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "ncseries/series.hpp"

namespace ncs {

using LetterPredicate = std::function<bool(Letter)>;
using LinkPredicate = std::function<bool(Letter, Letter)>;

/// A linked language L = 1 + A + L_B: the empty word, every letter of the
/// alphabet A, and every longer word whose consecutive letter pairs are
/// links. Link pairs are only ever consulted for letters inside A.
struct LinkSpec {
  LetterPredicate alphabet;
  LinkPredicate links;
};

/// A right L-module N = A1 + L_{C,B}: single head letters, or words whose
/// first pair is a head link (C) and whose later pairs are body links (B).
struct ModuleSpec {
  LetterPredicate head_alphabet;
  LinkPredicate head_links;
  LinkSpec body;
};

// Words of length >= 2 all of whose pairs lie in B, plus 1 and the letters.
NCSeries linked_language(const LinkSpec& spec, TruncationContext ctx);
// Same alphabet, links complemented inside A x A.
LinkSpec k_dual(const LinkSpec& spec);
bool in_language(const Word& w, const LinkSpec& spec);

NCSeries module_language(const ModuleSpec& spec, TruncationContext ctx);
// Head links complemented inside A1 x A, body dualized.
ModuleSpec k_dual(const ModuleSpec& spec);
bool in_module(const Word& w, const ModuleSpec& spec);
// Module grading: coefficient of w multiplied by (-1)^(length(w) - 1).
NCSeries module_graded(const NCSeries& n);

// Compositions with parts >= min_part and risings k_{i+1} - k_i <= max_rise.
LinkSpec composition_spec(std::int64_t max_rise, Letter min_part = 1);
// Increasing partitions with gaps lambda_{i+1} - lambda_i >= m.
LinkSpec partition_spec(std::int64_t m, Letter min_part = 1);
// Weakly decreasing partitions, parts >= min_part.
LinkSpec decreasing_partition_spec(Letter min_part = 1);
// The tail module: compositions with risings <= 1 and first part >= 2, as a
// right module over compositions with risings <= 1.
ModuleSpec tail_module_spec();

/// Strong compositions k with k_1 >= min_first, every part >= min_part and,
/// when max_rise is set, k_{i+1} - k_i <= max_rise. Includes the empty word.
/// Generated by direct enumeration, independently of linked_language.
NCSeries compositions(std::optional<std::int64_t> max_rise, TruncationContext ctx, Letter min_first = 1,
                      Letter min_part = 1);

/// m-distinct partitions written increasingly, parts >= min_part. The empty
/// word and all singletons are members.
NCSeries partitions_m_distinct(std::int64_t m, TruncationContext ctx, Letter min_part = 1);

// Shift-plethystic trees as the fixed point of A = X0 / (1 - sigma A).
NCSeries sp_trees_recursive(TruncationContext ctx);
// Depth-n convergent X0 / (1 - X1 / (1 - ... / (1 - X_n))).
NCSeries sp_trees_cf(std::size_t depth, TruncationContext ctx);
// Preorder words of every plane tree with at most L vertices and path
// length at most W, enumerated tree by tree.
NCSeries sp_trees_oracle(TruncationContext ctx);

}  // namespace ncs

#endif  // NCSERIES_LANGUAGES_HPP
