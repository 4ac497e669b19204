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

#include "ncseries/series_io.hpp"

#include <vector>

namespace ncs {

nlohmann::json to_json(const NCSeries& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : r.terms()) {
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    terms.push_back({{"word", letters}, {"coeff", to_string(c)}});
  }
  return {{"context", {{"max_len", r.context().max_len}, {"max_weight", r.context().max_weight}}},
          {"terms", std::move(terms)}};
}

NCSeries series_from_json(const nlohmann::json& j) {
  TruncationContext ctx{j.at("context").at("max_len").get<std::size_t>(),
                        j.at("context").at("max_weight").get<std::uint64_t>()};
  std::vector<std::pair<Word, Rational>> pairs;
  for (const auto& t : j.at("terms")) {
    pairs.emplace_back(Word(t.at("word").get<std::vector<Letter>>()),
                       parse_rational(t.at("coeff").get<std::string>()));
  }
  return NCSeries::from_terms(pairs, ctx);
}

std::string to_text(const NCSeries& r) {
  if (r.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : r.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(w);
    }
  }
  return out;
}

}  // namespace ncs
