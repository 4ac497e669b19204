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

#ifndef NCSERIES_WORD_HPP
#define NCSERIES_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncs {

// Index k of the letter X_k.
using Letter = std::uint32_t;

/// A word X_{k1} X_{k2} ... X_{kl} over the alphabet {X0, X1, ...}.
///
/// The empty word is the unit 1. Length and weight (the sum of the letter
/// indices) are both additive under concatenation; the weight is cached.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::uint64_t weight() const { return weight_; }
  bool empty() const { return letters_.empty(); }

  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Letters [pos, pos + count), clamped to the word.
  Word subword(std::size_t pos, std::size_t count = static_cast<std::size_t>(-1)) const;
  // Every letter raised by s (the shift applied s times).
  Word shifted(Letter s) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word& lhs, const Word& rhs) { return lhs.letters_ == rhs.letters_; }

 private:
  std::vector<Letter> letters_;
  std::uint64_t weight_ = 0;
};

struct WordStats {
  std::size_t length;
  std::uint64_t weight;
  friend bool operator==(const WordStats&, const WordStats&) = default;
};

inline WordStats word_stats(const Word& w) { return {w.length(), w.weight()}; }

// Canonical order: by length, then weight, then lexicographic on letters.
struct CanonicalOrder {
  bool operator()(const Word& lhs, const Word& rhs) const;
};

// "1" for the empty word, otherwise "X0X1X2".
std::string to_string(const Word& w);

}  // namespace ncs

#endif  // NCSERIES_WORD_HPP
