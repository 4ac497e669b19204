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

#include "ncseries/compositions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace ncs {

std::vector<Composition> rise_one_compositions(unsigned n, unsigned min_part) {
  min_part = std::max(min_part, 1u);
  std::vector<Composition> out;
  Composition parts;
  std::function<void(unsigned)> grow = [&](unsigned left) {
    if (left == 0) {
      if (!parts.empty()) out.push_back(parts);
      return;
    }
    const unsigned cap = parts.empty() ? left : std::min(left, parts.back() + 1);
    for (unsigned p = min_part; p <= cap; ++p) {
      parts.push_back(p);
      grow(left - p);
      parts.pop_back();
    }
  };
  grow(n);
  std::stable_sort(out.begin(), out.end(),
                   [](const Composition& a, const Composition& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<Integer>> rise_one_counts(unsigned max_n, unsigned min_part) {
  min_part = std::max(min_part, 1u);
  // by_last[n][k][p]: compositions of n into k parts whose last part is p.
  std::vector<std::vector<std::vector<Integer>>> by_last(
      max_n + 1, std::vector<std::vector<Integer>>(max_n + 1, std::vector<Integer>(max_n + 1)));
  for (unsigned p = min_part; p <= max_n; ++p) by_last[p][1][p] = 1;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      for (unsigned last = min_part; last <= n; ++last) {
        const Integer& here = by_last[n][k][last];
        if (here == 0) continue;
        for (unsigned p = min_part; p <= last + 1 && n + p <= max_n; ++p) by_last[n + p][k + 1][p] += here;
      }
    }
  }
  std::vector<std::vector<Integer>> counts(max_n + 1, std::vector<Integer>(max_n + 1));
  counts[0][0] = 1;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      for (unsigned p = 0; p <= n; ++p) counts[n][k] += by_last[n][k][p];
    }
  }
  return counts;
}

std::vector<Composition> hat_excluded(unsigned n, bool shifted) {
  auto allowed = [shifted](unsigned p) {
    const unsigned r = p % 5;
    return shifted ? (r == 2 || r == 3) : (r == 1 || r == 4);
  };
  std::vector<Composition> out;
  Composition parts;
  std::function<void(unsigned, unsigned)> grow = [&](unsigned left, unsigned below) {
    if (left == 0) {
      if (!parts.empty()) out.push_back(parts);
      return;
    }
    for (unsigned p = std::min(left, below - 1); p >= 1; --p) {
      if (!allowed(p)) continue;
      parts.push_back(p);
      grow(left - p, p);
      parts.pop_back();
    }
  };
  grow(n, n + 1);
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

SignedSumReport hatted_signed_sum(unsigned n, bool shifted) {
  const unsigned min_part = shifted ? 2 : 1;
  if (n < min_part) throw std::invalid_argument("hatted_signed_sum: n too small");
  SignedSumReport report;
  report.n = n;
  report.shifted = shifted;
  report.excluded = hat_excluded(n, shifted);
  const auto counts = rise_one_counts(n, min_part);
  const unsigned max_k = n / min_part;
  std::vector<Integer> kept(max_k + 1);
  for (unsigned k = 1; k <= max_k; ++k) kept[k] = counts[n][k];
  for (const Composition& c : report.excluded) kept[c.size()] -= 1;
  for (unsigned k = 1; k <= max_k; ++k) {
    if (!kept[k].fits_slong_p()) throw std::overflow_error("hatted_signed_sum: count exceeds 64 bits");
    const std::int64_t signed_count = (k % 2 ? -1 : 1) * kept[k].get_si();
    report.per_k.push_back(signed_count);
    report.total += signed_count;
  }
  return report;
}

nlohmann::json to_json(const SignedSumReport& report) {
  return {{"n", report.n}, {"per_k", report.per_k}, {"total", report.total}, {"excluded", report.excluded}};
}

std::string composition_label(const Composition& c) {
  const bool digits = std::all_of(c.begin(), c.end(), [](unsigned p) { return p < 10; });
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0 && !digits) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace ncs
