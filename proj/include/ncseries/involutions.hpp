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

#ifndef NCSERIES_INVOLUTIONS_HPP
#define NCSERIES_INVOLUTIONS_HPP

#include <cstddef>
#include <random>
#include <string>
#include <utility>

#include "ncseries/languages.hpp"

namespace ncs {

using WordPair = std::pair<Word, Word>;

/// Sign-reversing involution on L x L^! behind L^! = (L^g)^{-1}.
///
/// A letter crosses the boundary: the first letter of the right word moves
/// left when it links to the last letter of the left word (or the left word
/// is empty); otherwise the last letter of the left word moves right. (1, 1)
/// is the only fixed point. Throws InvalidPair outside L x L^!.
WordPair involution_phi(const WordPair& pair, const LinkSpec& spec);

/// Sign-reversing involution on N x L^! behind N^! = N^g L^!.
///
/// Fixed points are the pairs (a, w') with a single head letter and either
/// w' = 1 or (a, w'_1) outside the head links. Throws InvalidPair outside
/// N x L^!.
WordPair involution_psi(const WordPair& pair, const ModuleSpec& spec);

struct InvolutionReport {
  std::size_t pairs = 0;
  std::size_t fixed_points = 0;
  bool involutive = true;       // f(f(p)) == p
  bool preserves_product = true;  // concatenation unchanged
  bool sign_reversing = true;   // left length parity flips off the fixed set
  bool fixed_set_ok = true;     // fixed points are exactly the predicted ones
  bool signed_sum_ok = true;    // surviving sum is 1 (phi) or N^! (psi)

  bool passed() const { return involutive && preserves_product && sign_reversing && fixed_set_ok && signed_sum_ok; }
  std::string summary() const;
};

// Every pair whose concatenation lies inside ctx.
InvolutionReport check_phi_exhaustive(const LinkSpec& spec, TruncationContext ctx);
InvolutionReport check_psi_exhaustive(const ModuleSpec& spec, TruncationContext ctx);

// Alphabet {1, ..., max_letter}, each ordered pair linked with probability 1/2.
LinkSpec random_link_spec(std::mt19937_64& rng, Letter max_letter = 6);
// Random body as above, random nonempty head alphabet and head links.
ModuleSpec random_module_spec(std::mt19937_64& rng, Letter max_letter = 6);

}  // namespace ncs

#endif  // NCSERIES_INVOLUTIONS_HPP
