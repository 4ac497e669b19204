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

#include "ncseries/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ncseries/rational.hpp"

namespace ncs {

namespace {

std::uint64_t sum_letters(std::span<const Letter> letters) {
  return std::accumulate(letters.begin(), letters.end(), std::uint64_t{0});
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters), weight_(sum_letters(letters_)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)), weight_(sum_letters(letters_)) {}

Word Word::subword(std::size_t pos, std::size_t count) const {
  pos = std::min(pos, letters_.size());
  count = std::min(count, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + count));
}

Word Word::shifted(Letter s) const {
  Word out = *this;
  for (auto& k : out.letters_) k += s;
  out.weight_ += static_cast<std::uint64_t>(s) * letters_.size();
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out;
  out.letters_.reserve(lhs.length() + rhs.length());
  out.letters_.insert(out.letters_.end(), lhs.letters_.begin(), lhs.letters_.end());
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  out.weight_ = lhs.weight_ + rhs.weight_;
  return out;
}

bool CanonicalOrder::operator()(const Word& lhs, const Word& rhs) const {
  if (lhs.length() != rhs.length()) return lhs.length() < rhs.length();
  if (lhs.weight() != rhs.weight()) return lhs.weight() < rhs.weight();
  auto a = lhs.letters();
  auto b = rhs.letters();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter k : w.letters()) {
    out += 'X';
    out += std::to_string(k);
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view num = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Integer n(std::string(num), 10);
  if (text[0] == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace ncs
