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

#include "ncseries/plethysm.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncseries/errors.hpp"

namespace ncs {

namespace {

using TermRef = std::pair<const Word*, const Rational*>;

// Re-labels a series computed under a tighter budget with the enclosing
// context. Its terms are exact there because the discarded words could not
// have survived the enclosing product anyway.
NCSeries widen(const NCSeries& s, TruncationContext ctx) {
  return NCSeries(ctx, NCSeries::Terms(s.terms()));
}

class Composer {
 public:
  Composer(const NCSeries& r, TruncationContext ctx) : r_(r.truncated(ctx)), shifts_(ctx.max_weight + 1) {}

  // Sum over terms[begin, end), which share their first `depth` letters and
  // are sorted lexicographically, of coeff * (suffix after depth) o_s R.
  NCSeries compose(std::span<const TermRef> terms, std::size_t depth, TruncationContext budget) {
    NCSeries acc(budget);
    std::size_t i = 0;
    if (i < terms.size() && terms[i].first->length() == depth) {
      acc = NCSeries::constant(*terms[i].second, budget);
      ++i;
    }
    while (i < terms.size()) {
      const Letter k = (*terms[i].first)[depth];
      std::size_t j = i;
      while (j < terms.size() && (*terms[j].first)[depth] == k) ++j;
      if (budget.max_len >= 1 && k <= budget.max_weight) {
        const TruncationContext rest{budget.max_len - 1, budget.max_weight - k};
        NCSeries tail = compose(terms.subspan(i, j - i), depth + 1, rest);
        if (!tail.is_zero()) acc = acc + shifted(k).truncated(budget) * widen(tail, budget);
      }
      i = j;
    }
    return acc;
  }

 private:
  const NCSeries& shifted(Letter k) {
    if (!shifts_[k]) shifts_[k] = shift(r_, k);
    return *shifts_[k];
  }

  NCSeries r_;
  std::vector<std::optional<NCSeries>> shifts_;
};

constexpr std::array<std::string_view, 8> kNames = {
    "ell", "ell-plus", "ell-plus-even", "ell-plus-odd", "sigma0", "a0-ell-plus", "a-sigma-ell", "a-m",
};

}  // namespace

PlethysmOperand::PlethysmOperand(NCSeries r) : series_(std::move(r)) {
  if (series_.constant_term() != 0) throw NonzeroConstantTerm("plethysm operand: <R, 1> must be zero");
  alpha_ = series_.coeff(Word{0});
}

NCSeries PlethysmOperand::positive_part() const {
  return series_ - scale(alpha_, NCSeries::letter(0, series_.context()));
}

NCSeries word_plethysm(const Word& w, const PlethysmOperand& r) {
  const TruncationContext ctx = r.series().context();
  NCSeries out = NCSeries::one(ctx);
  for (Letter k : w.letters()) out = out * shift(r.series(), k);
  return out;
}

NCSeries plethysm(const NCSeries& outer, const PlethysmOperand& inner) {
  const TruncationContext ctx = meet(outer.context(), inner.series().context());
  std::vector<TermRef> terms;
  for (const auto& [w, c] : outer.terms()) {
    if (ctx.admits(w)) terms.emplace_back(&w, &c);
  }
  std::sort(terms.begin(), terms.end(), [](const TermRef& a, const TermRef& b) {
    auto x = a.first->letters();
    auto y = b.first->letters();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  Composer composer(inner.series(), ctx);
  return composer.compose(terms, 0, ctx);
}

NCSeries plethystic_inverse(const PlethysmOperand& r) {
  if (!r.invertible()) throw NotInvertible("plethystic inverse: <R, X0> is zero");
  const TruncationContext ctx = r.series().context();
  const Rational inv_alpha = 1 / r.alpha();
  const NCSeries r_plus = r.positive_part();
  const NCSeries x0 = NCSeries::letter(0, ctx);
  NCSeries t(ctx);
  const std::size_t cap = ctx.max_len + ctx.max_weight + 1;
  for (std::size_t step = 0; step <= cap; ++step) {
    NCSeries next = scale(inv_alpha, x0 - plethysm(r_plus, PlethysmOperand(t)));
    if (next == t) return t;
    t = std::move(next);
  }
  throw NoConvergence("plethystic inverse did not stabilize within L + W + 1 steps");
}

NCSeries enriched_trees(const NCSeries& m, TruncationContext ctx) {
  if (m.constant_term() != 1) throw BadConstantTerm("enriched trees: <M, 1> must be one");
  ctx = meet(ctx, m.context());
  const NCSeries x0 = NCSeries::letter(0, ctx);
  NCSeries a(ctx);
  const std::size_t cap = ctx.max_len + ctx.max_weight + 1;
  for (std::size_t step = 0; step <= cap; ++step) {
    NCSeries next = x0 * plethysm(m, PlethysmOperand(a));
    if (next == a) return a;
    a = std::move(next);
  }
  throw NoConvergence("enriched tree equation did not stabilize within L + W + 1 steps");
}

NCSeries named_series(std::string_view name, TruncationContext ctx) {
  const NCSeries one = NCSeries::one(ctx);
  auto ell_plus = [&] { return enriched_trees(one + NCSeries::letter(1, ctx), ctx); };
  auto ell_plus_even = [&] { return enriched_trees(one + NCSeries::letter(2, ctx), ctx); };
  auto sigma0 = [&] {
    NCSeries s(ctx);
    for (Letter j = 0; j <= ctx.max_weight; ++j) s = s + NCSeries::letter(j, ctx);
    return s;
  };

  if (name == "ell") return one + ell_plus();
  if (name == "ell-plus") return ell_plus();
  if (name == "ell-plus-even") return ell_plus_even();
  if (name == "ell-plus-odd") return shift(ell_plus_even(), 1);
  if (name == "sigma0") return sigma0();
  if (name == "a0-ell-plus") return plethysm(sigma0(), PlethysmOperand(ell_plus()));
  if (name == "a-sigma-ell") return enriched_trees(shift(one + ell_plus(), 1), ctx);
  if (name == "a-m") return enriched_trees(inverse(one - shift(ell_plus(), 1)), ctx);
  throw UnknownName(std::string(name));
}

std::span<const std::string_view> named_series_names() { return kNames; }

}  // namespace ncs
