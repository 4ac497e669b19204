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

#ifndef NCSERIES_PLETHYSM_HPP
#define NCSERIES_PLETHYSM_HPP

#include <span>
#include <string_view>

#include "ncseries/series.hpp"

namespace ncs {

/// Right-hand argument of a shift plethysm: a series with zero constant term.
class PlethysmOperand {
 public:
  // Throws NonzeroConstantTerm if <R, 1> != 0.
  explicit PlethysmOperand(NCSeries r);

  const NCSeries& series() const { return series_; }
  // <R, X0>.
  const Rational& alpha() const { return alpha_; }
  bool invertible() const { return alpha_ != 0; }
  // R - alpha X0.
  NCSeries positive_part() const;

 private:
  NCSeries series_;
  Rational alpha_;
};

// (sigma^{k1} R)(sigma^{k2} R) ... (sigma^{kl} R); the empty word gives 1.
NCSeries word_plethysm(const Word& w, const PlethysmOperand& r);

/// T o_s R = sum_k <T, X_k> X_k o_s R, on the meet of the two contexts.
///
/// Only outer words inside the context can contribute: every factor
/// sigma^{k_i} R has length >= 1 and weight >= k_i. The sum is evaluated by
/// factoring on first letters, T o_s R = <T,1> + sum_k (sigma^k R)(d_k T o_s R),
/// shrinking the budget of the inner call by the factor's minimal size.
NCSeries plethysm(const NCSeries& outer, const PlethysmOperand& inner);

/// Two-sided inverse under o_s, the fixed point of T = (X0 - R_+ o_s T) / alpha.
///
/// Every word of R_+ has length >= 2 or is a letter X_j with j >= 1, so one
/// more (length + weight) level settles per step. Throws NotInvertible if
/// <R, X0> == 0 and NoConvergence if L + W + 1 steps do not reach a fixed
/// point.
NCSeries plethystic_inverse(const PlethysmOperand& r);

// Fixed point of A_M = X0 (M o_s A_M). Throws BadConstantTerm unless
// <M, 1> == 1.
NCSeries enriched_trees(const NCSeries& m, TruncationContext ctx);

// ell, ell-plus, ell-plus-even, ell-plus-odd, sigma0, a0-ell-plus,
// a-sigma-ell, a-m. Throws UnknownName.
NCSeries named_series(std::string_view name, TruncationContext ctx);
std::span<const std::string_view> named_series_names();

}  // namespace ncs

#endif  // NCSERIES_PLETHYSM_HPP
