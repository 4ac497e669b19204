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

#ifndef NCSERIES_TESTS_TEST_UTIL_HPP
#define NCSERIES_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "ncseries/series.hpp"
#include "ncseries/series_io.hpp"

namespace ncs::testing {

// Seed for every randomized property test; printed via SCOPED_TRACE.
inline constexpr std::uint64_t kSeed = 20260415;

inline Word W(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

// Series from (letters, coefficient) pairs; all coefficients 1 if omitted.
inline NCSeries S(TruncationContext ctx, std::initializer_list<std::pair<std::vector<Letter>, Rational>> terms) {
  std::vector<std::pair<Word, Rational>> pairs;
  for (const auto& [letters, c] : terms) pairs.emplace_back(Word(letters), c);
  return NCSeries::from_terms(pairs, ctx);
}

inline NCSeries words(TruncationContext ctx, std::initializer_list<std::vector<Letter>> ws) {
  std::vector<std::pair<Word, Rational>> pairs;
  for (const auto& letters : ws) pairs.emplace_back(Word(letters), Rational(1));
  return NCSeries::from_terms(pairs, ctx);
}

// Every word inside ctx whose letters satisfy keep_letter, by brute force.
inline std::vector<Word> all_words(TruncationContext ctx, const std::function<bool(Letter)>& keep_letter) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  std::function<void(std::uint64_t)> grow = [&](std::uint64_t weight) {
    out.emplace_back(cur);
    if (cur.size() == ctx.max_len) return;
    for (Letter k = 0; weight + k <= ctx.max_weight; ++k) {
      if (!keep_letter(k)) continue;
      cur.push_back(k);
      grow(weight + k);
      cur.pop_back();
    }
  };
  grow(0);
  return out;
}

// Sum of the words accepted by pred, each with coefficient 1.
inline NCSeries language_oracle(TruncationContext ctx, const std::function<bool(const std::vector<Letter>&)>& pred) {
  NCSeries::Terms terms;
  for (const Word& w : all_words(ctx, [](Letter) { return true; })) {
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    if (pred(letters)) terms.emplace(w, 1);
  }
  return NCSeries(ctx, std::move(terms));
}

// A random series: `terms` random words with coefficients in [-3, 3] and
// small letters, plus the given constant term.
inline NCSeries random_series(std::mt19937_64& rng, TruncationContext ctx, std::size_t terms, Rational constant,
                              Letter max_letter = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(ctx.max_len, 1));
  NCSeries out = NCSeries::constant(constant, ctx);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Letter> letters;
    std::uint64_t budget = ctx.max_weight;
    const std::size_t l = len(rng);
    for (std::size_t i = 0; i < l; ++i) {
      std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(std::min<std::uint64_t>(budget, max_letter)));
      letters.push_back(pick(rng));
      budget -= letters.back();
    }
    out = out + NCSeries::word(Word(letters), ctx, coeff(rng));
  }
  return out;
}

// gtest-friendly equality with a readable diff location.
inline ::testing::AssertionResult SeriesEq(const NCSeries& a, const NCSeries& b) {
  if (auto w = first_difference(a, b)) {
    return ::testing::AssertionFailure() << "differ at " << to_string(*w) << ": " << to_string(a.coeff(*w))
                                         << " vs " << to_string(b.coeff(*w)) << "\n  lhs = " << to_text(a)
                                         << "\n  rhs = " << to_text(b);
  }
  return ::testing::AssertionSuccess();
}

inline std::uint64_t catalan(std::uint64_t n) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace ncs::testing

#endif  // NCSERIES_TESTS_TEST_UTIL_HPP
