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

#include "ncseries/series.hpp"

#include <string>
#include <vector>

#include "ncseries/errors.hpp"

namespace ncs {

NCSeries::NCSeries(TruncationContext ctx, Terms terms) : ctx_(ctx), terms_(std::move(terms)) {
  // gmpxx does not reduce values built from a numerator/denominator pair.
  for (auto& [w, c] : terms_) c.canonicalize();
  std::erase_if(terms_, [&](const auto& kv) { return kv.second == 0 || !ctx_.admits(kv.first); });
}

NCSeries NCSeries::from_terms(std::span<const std::pair<Word, Rational>> pairs, TruncationContext ctx) {
  Terms terms;
  for (const auto& [w, c] : pairs) {
    if (ctx.admits(w)) terms[w] += c;
  }
  return NCSeries(ctx, std::move(terms));
}

NCSeries NCSeries::constant(const Rational& c, TruncationContext ctx) { return word(Word{}, ctx, c); }

NCSeries NCSeries::word(const Word& w, TruncationContext ctx, const Rational& c) {
  Terms terms;
  terms.emplace(w, c);
  return NCSeries(ctx, std::move(terms));
}

Rational NCSeries::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational NCSeries::constant_term() const { return coeff(Word{}); }

NCSeries NCSeries::truncated(TruncationContext ctx) const {
  if (ctx == ctx_) return *this;
  Terms terms;
  for (const auto& [w, c] : terms_) {
    if (ctx.admits(w)) terms.emplace_hint(terms.end(), w, c);
  }
  NCSeries out(ctx);
  out.terms_ = std::move(terms);
  return out;
}

NCSeries add(const NCSeries& r, const NCSeries& s) {
  const TruncationContext ctx = meet(r.context(), s.context());
  NCSeries::Terms terms;
  for (const auto& [w, c] : r.terms()) {
    if (ctx.admits(w)) terms.emplace_hint(terms.end(), w, c);
  }
  for (const auto& [w, c] : s.terms()) {
    if (ctx.admits(w)) terms[w] += c;
  }
  return NCSeries(ctx, std::move(terms));
}

NCSeries scale(const Rational& c, const NCSeries& r) {
  if (c == 0) return NCSeries(r.context());
  NCSeries::Terms terms;
  for (const auto& [w, a] : r.terms()) terms.emplace_hint(terms.end(), w, c * a);
  return NCSeries(r.context(), std::move(terms));
}

NCSeries mul(const NCSeries& r, const NCSeries& s) {
  const TruncationContext ctx = meet(r.context(), s.context());
  NCSeries::Terms terms;
  Rational product;
  // Both term maps are sorted by length first, so the inner loop can stop at
  // the first word that overflows the length budget.
  for (const auto& [u, a] : r.terms()) {
    if (!ctx.admits(u)) {
      if (u.length() > ctx.max_len) break;
      continue;
    }
    const std::size_t len_left = ctx.max_len - u.length();
    const std::uint64_t weight_left = ctx.max_weight - u.weight();
    for (const auto& [v, b] : s.terms()) {
      if (v.length() > len_left) break;
      if (v.weight() > weight_left) continue;
      product = a * b;
      terms[u * v] += product;
    }
  }
  return NCSeries(ctx, std::move(terms));
}

namespace {

// Sum_{n >= 0} D^n by Horner's rule, S <- 1 + D S, for <D, 1> == 0.
//
// Each multiplication by D raises the minimal (length + weight) degree by at
// least one, so the iteration is stationary after at most L + W + 1 steps.
// Reaching that cap without a repeated iterate means the premise was broken.
NCSeries neumann_sum(const NCSeries& d) {
  const TruncationContext ctx = d.context();
  const NCSeries one = NCSeries::one(ctx);
  NCSeries s = one;
  const std::size_t cap = ctx.max_len + ctx.max_weight + 1;
  for (std::size_t step = 0; step <= cap; ++step) {
    NCSeries next = one + d * s;
    if (next == s) return s;
    s = std::move(next);
  }
  throw NoConvergence("geometric series did not stabilize within L + W + 1 steps");
}

}  // namespace

NCSeries inverse(const NCSeries& r) {
  const Rational alpha = r.constant_term();
  if (alpha == 0) throw ZeroConstantTerm("inverse: <R, 1> is zero");
  const Rational inv_alpha = 1 / alpha;
  const NCSeries d = NCSeries::one(r.context()) - scale(inv_alpha, r);
  return scale(inv_alpha, neumann_sum(d));
}

NCSeries geometric(const NCSeries& b) {
  if (b.constant_term() != 0) throw NonzeroConstantTerm("geometric: <B, 1> must be zero");
  return neumann_sum(b);
}

NCSeries shift(const NCSeries& r, Letter s) {
  NCSeries::Terms terms;
  for (const auto& [w, c] : r.terms()) {
    Word moved = w.shifted(s);
    if (r.context().admits(moved)) terms.emplace(std::move(moved), c);
  }
  return NCSeries(r.context(), std::move(terms));
}

NCSeries sign_by_length(const NCSeries& r) {
  NCSeries::Terms terms;
  for (const auto& [w, c] : r.terms()) {
    terms.emplace_hint(terms.end(), w, w.length() % 2 == 0 ? Rational(c) : Rational(-c));
  }
  return NCSeries(r.context(), std::move(terms));
}

bool eq_trunc(const NCSeries& r, const NCSeries& s) { return !first_difference(r, s).has_value(); }

std::optional<Word> first_difference(const NCSeries& r, const NCSeries& s) {
  const TruncationContext ctx = meet(r.context(), s.context());
  const NCSeries a = r.truncated(ctx);
  const NCSeries b = s.truncated(ctx);
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const CanonicalOrder less;
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first))) return ia->first;
    if (ia == a.terms().end() || less(ib->first, ia->first)) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace ncs
