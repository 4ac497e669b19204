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

#ifndef NCSERIES_SERIES_HPP
#define NCSERIES_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>

#include "ncseries/rational.hpp"
#include "ncseries/word.hpp"

namespace ncs {

/// Bigraded cutoff: words with length <= max_len and weight <= max_weight.
///
/// X0 has weight zero, so the weight bound alone does not finitize the
/// support; the pair does. Every operation below respects the bigrading.
struct TruncationContext {
  std::size_t max_len = 0;
  std::uint64_t max_weight = 0;

  bool admits(std::size_t length, std::uint64_t weight) const {
    return length <= max_len && weight <= max_weight;
  }
  bool admits(const Word& w) const { return admits(w.length(), w.weight()); }

  friend bool operator==(const TruncationContext&, const TruncationContext&) = default;
};

// Componentwise minimum. Mixed-context operations land here.
inline TruncationContext meet(const TruncationContext& a, const TruncationContext& b) {
  return {std::min(a.max_len, b.max_len), std::min(a.max_weight, b.max_weight)};
}

/// A truncated noncommutative power series with exact rational coefficients.
///
/// Immutable value type. Stored terms are always inside the context, never
/// zero, and iterate in CanonicalOrder.
class NCSeries {
 public:
  using Terms = std::map<Word, Rational, CanonicalOrder>;

  NCSeries() = default;
  explicit NCSeries(TruncationContext ctx) : ctx_(ctx) {}
  // Drops words outside ctx and zero coefficients.
  NCSeries(TruncationContext ctx, Terms terms);

  // Merges duplicate words by summing, then canonicalizes.
  static NCSeries from_terms(std::span<const std::pair<Word, Rational>> pairs, TruncationContext ctx);
  static NCSeries one(TruncationContext ctx) { return constant(1, ctx); }
  static NCSeries constant(const Rational& c, TruncationContext ctx);
  static NCSeries letter(Letter k, TruncationContext ctx) { return word(Word{k}, ctx); }
  static NCSeries word(const Word& w, TruncationContext ctx, const Rational& c = 1);

  const TruncationContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Word& w) const;
  Rational constant_term() const;

  NCSeries truncated(TruncationContext ctx) const;

  // Exact equality of context and terms. See eq_trunc for the
  // context-tolerant comparison.
  friend bool operator==(const NCSeries&, const NCSeries&) = default;

 private:
  TruncationContext ctx_;
  Terms terms_;
};

NCSeries add(const NCSeries& r, const NCSeries& s);
NCSeries scale(const Rational& c, const NCSeries& r);
NCSeries mul(const NCSeries& r, const NCSeries& s);

// R^{-1} = (1/a) sum_n (1 - R/a)^n with a = <R, 1>. Throws ZeroConstantTerm.
NCSeries inverse(const NCSeries& r);
// 1/(1 - B) = sum_n B^n. Throws NonzeroConstantTerm unless <B, 1> == 0.
NCSeries geometric(const NCSeries& b);

// X_k -> X_{k+s} on every letter; words pushed past the weight bound drop.
NCSeries shift(const NCSeries& r, Letter s = 1);
// Coefficient of w multiplied by (-1)^length(w).
NCSeries sign_by_length(const NCSeries& r);

inline Rational coeff(const NCSeries& r, const Word& w) { return r.coeff(w); }
// Compares canonical forms on the meet of the two contexts.
bool eq_trunc(const NCSeries& r, const NCSeries& s);
// First word (canonical order, on the meet context) where r and s differ.
std::optional<Word> first_difference(const NCSeries& r, const NCSeries& s);

inline NCSeries operator+(const NCSeries& r, const NCSeries& s) { return add(r, s); }
inline NCSeries operator-(const NCSeries& r) { return scale(-1, r); }
inline NCSeries operator-(const NCSeries& r, const NCSeries& s) { return add(r, scale(-1, s)); }
inline NCSeries operator*(const NCSeries& r, const NCSeries& s) { return mul(r, s); }
inline NCSeries operator*(const Rational& c, const NCSeries& r) { return scale(c, r); }

}  // namespace ncs

#endif  // NCSERIES_SERIES_HPP
