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

#include "ncseries/languages.hpp"

#include <vector>

#include "ncseries/errors.hpp"
#include "ncseries/plane_tree.hpp"

namespace ncs {

namespace {

using Extends = std::function<bool(std::size_t position, Letter prev, Letter next)>;

// Depth-first walk over all nonempty words inside ctx whose letter at each
// position is accepted by `extends` (prev is meaningless at position 0).
// Every accepted prefix is emitted with coefficient 1.
void enumerate_words(TruncationContext ctx, const Extends& extends, NCSeries::Terms& out) {
  std::vector<Letter> letters;
  std::function<void(std::uint64_t)> grow = [&](std::uint64_t weight) {
    if (letters.size() == ctx.max_len) return;
    const Letter prev = letters.empty() ? 0 : letters.back();
    for (Letter k = 0; weight + k <= ctx.max_weight; ++k) {
      if (!extends(letters.size(), prev, k)) continue;
      letters.push_back(k);
      out.emplace(Word(letters), 1);
      grow(weight + k);
      letters.pop_back();
    }
  };
  grow(0);
}

// Iterates x <- step(x) from zero until two iterates agree. Used for the
// implicit tree equations, whose (length + weight) filtration stabilizes one
// level per step.
NCSeries fixed_point(TruncationContext ctx, const std::function<NCSeries(const NCSeries&)>& step) {
  NCSeries x(ctx);
  const std::size_t cap = ctx.max_len + ctx.max_weight + 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    NCSeries next = step(x);
    if (next == x) return x;
    x = std::move(next);
  }
  throw NoConvergence("tree equation did not stabilize within L + W + 1 steps");
}

}  // namespace

NCSeries linked_language(const LinkSpec& spec, TruncationContext ctx) {
  NCSeries::Terms terms;
  terms.emplace(Word{}, 1);
  enumerate_words(
      ctx,
      [&](std::size_t pos, Letter prev, Letter next) {
        return spec.alphabet(next) && (pos == 0 || spec.links(prev, next));
      },
      terms);
  return NCSeries(ctx, std::move(terms));
}

LinkSpec k_dual(const LinkSpec& spec) {
  return {spec.alphabet,
          [spec](Letter i, Letter j) { return spec.alphabet(i) && spec.alphabet(j) && !spec.links(i, j); }};
}

bool in_language(const Word& w, const LinkSpec& spec) {
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!spec.alphabet(w[i])) return false;
    if (i > 0 && !spec.links(w[i - 1], w[i])) return false;
  }
  return true;
}

NCSeries module_language(const ModuleSpec& spec, TruncationContext ctx) {
  NCSeries::Terms terms;
  enumerate_words(
      ctx,
      [&](std::size_t pos, Letter prev, Letter next) {
        if (pos == 0) return spec.head_alphabet(next);
        if (!spec.body.alphabet(next)) return false;
        return pos == 1 ? spec.head_links(prev, next) : spec.body.links(prev, next);
      },
      terms);
  return NCSeries(ctx, std::move(terms));
}

ModuleSpec k_dual(const ModuleSpec& spec) {
  return {spec.head_alphabet,
          [spec](Letter i, Letter j) {
            return spec.head_alphabet(i) && spec.body.alphabet(j) && !spec.head_links(i, j);
          },
          k_dual(spec.body)};
}

bool in_module(const Word& w, const ModuleSpec& spec) {
  if (w.empty() || !spec.head_alphabet(w[0])) return false;
  for (std::size_t i = 1; i < w.length(); ++i) {
    if (!spec.body.alphabet(w[i])) return false;
    const bool linked = i == 1 ? spec.head_links(w[0], w[1]) : spec.body.links(w[i - 1], w[i]);
    if (!linked) return false;
  }
  return true;
}

NCSeries module_graded(const NCSeries& n) { return scale(-1, sign_by_length(n)); }

LinkSpec composition_spec(std::int64_t max_rise, Letter min_part) {
  return {[min_part](Letter i) { return i >= min_part; },
          [max_rise](Letter i, Letter j) { return std::int64_t{j} - std::int64_t{i} <= max_rise; }};
}

LinkSpec partition_spec(std::int64_t m, Letter min_part) {
  if (min_part == 0) min_part = 1;
  return {[min_part](Letter i) { return i >= min_part; },
          [m](Letter i, Letter j) { return std::int64_t{j} - std::int64_t{i} >= m; }};
}

LinkSpec decreasing_partition_spec(Letter min_part) {
  if (min_part == 0) min_part = 1;
  return {[min_part](Letter i) { return i >= min_part; }, [](Letter i, Letter j) { return i >= j; }};
}

ModuleSpec tail_module_spec() {
  return {[](Letter i) { return i >= 2; },
          [](Letter i, Letter j) { return i >= 2 && j >= 1 && std::int64_t{j} - std::int64_t{i} <= 1; },
          composition_spec(1, 1)};
}

NCSeries compositions(std::optional<std::int64_t> max_rise, TruncationContext ctx, Letter min_first,
                      Letter min_part) {
  if (min_part == 0) min_part = 1;
  NCSeries::Terms terms;
  terms.emplace(Word{}, 1);
  enumerate_words(
      ctx,
      [&](std::size_t pos, Letter prev, Letter next) {
        if (next < min_part) return false;
        if (pos == 0) return next >= min_first;
        return !max_rise || std::int64_t{next} - std::int64_t{prev} <= *max_rise;
      },
      terms);
  return NCSeries(ctx, std::move(terms));
}

NCSeries partitions_m_distinct(std::int64_t m, TruncationContext ctx, Letter min_part) {
  if (min_part == 0) min_part = 1;
  NCSeries::Terms terms;
  terms.emplace(Word{}, 1);
  enumerate_words(
      ctx,
      [&](std::size_t pos, Letter prev, Letter next) {
        if (next < min_part) return false;
        return pos == 0 || std::int64_t{next} - std::int64_t{prev} >= m;
      },
      terms);
  return NCSeries(ctx, std::move(terms));
}

NCSeries sp_trees_recursive(TruncationContext ctx) {
  const NCSeries x0 = NCSeries::letter(0, ctx);
  return fixed_point(ctx, [&](const NCSeries& a) { return x0 * geometric(shift(a, 1)); });
}

NCSeries sp_trees_cf(std::size_t depth, TruncationContext ctx) {
  NCSeries g = NCSeries::letter(static_cast<Letter>(depth), ctx);
  for (std::size_t i = depth; i-- > 0;) {
    g = NCSeries::letter(static_cast<Letter>(i), ctx) * geometric(g);
  }
  return g;
}

NCSeries sp_trees_oracle(TruncationContext ctx) {
  std::vector<std::pair<Word, Rational>> pairs;
  for (std::size_t n = 1; n <= ctx.max_len; ++n) {
    // The n-vertex star has the least possible path length, n - 1.
    if (n - 1 > ctx.max_weight) break;
    for (const PlaneTree& t : PlaneTree::enumerate(n)) {
      if (t.path_length() <= ctx.max_weight) pairs.emplace_back(t.preorder_word(), 1);
    }
  }
  return NCSeries::from_terms(pairs, ctx);
}

}  // namespace ncs
