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

#include "ncseries/plane_tree.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace ncs {

namespace {

using Forest = std::vector<PlaneTree>;

// All ordered forests with exactly m vertices, memoized by m.
const std::vector<Forest>& forests(std::size_t m, std::map<std::size_t, std::vector<Forest>>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<Forest> out;
  if (m == 0) {
    out.emplace_back();
  } else {
    for (std::size_t first = 1; first <= m; ++first) {
      // std::map references stay valid across the nested inserts.
      const std::vector<Forest>& heads = forests(first - 1, memo);
      const std::vector<Forest>& tails = forests(m - first, memo);
      for (const Forest& h : heads) {
        for (const Forest& t : tails) {
          Forest f;
          f.reserve(1 + t.size());
          f.emplace_back(h);
          f.insert(f.end(), t.begin(), t.end());
          out.push_back(std::move(f));
        }
      }
    }
  }
  return memo.emplace(m, std::move(out)).first->second;
}

PlaneTree parse(const Word& w, std::size_t& pos, Letter depth) {
  if (pos >= w.length() || w[pos] != depth) {
    throw std::invalid_argument("not a plane tree word: " + to_string(w));
  }
  ++pos;
  std::vector<PlaneTree> children;
  while (pos < w.length() && w[pos] == depth + 1) children.push_back(parse(w, pos, depth + 1));
  return PlaneTree(std::move(children));
}

}  // namespace

std::size_t PlaneTree::vertex_count() const {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.vertex_count();
  return n;
}

std::uint64_t PlaneTree::path_length() const {
  // Every vertex of a child subtree sits one level deeper than in the child.
  std::uint64_t pl = 0;
  for (const auto& c : children_) pl += c.path_length() + c.vertex_count();
  return pl;
}

Word PlaneTree::preorder_word() const {
  Word w{0};
  for (const auto& c : children_) w = w * c.preorder_word().shifted(1);
  return w;
}

PlaneTree PlaneTree::from_preorder_word(const Word& w) {
  std::size_t pos = 0;
  PlaneTree t = parse(w, pos, 0);
  if (pos != w.length()) throw std::invalid_argument("trailing letters after tree word: " + to_string(w));
  return t;
}

std::vector<PlaneTree> PlaneTree::enumerate(std::size_t n) {
  if (n == 0) return {};
  std::map<std::size_t, std::vector<Forest>> memo;
  std::vector<PlaneTree> out;
  for (const Forest& f : forests(n - 1, memo)) out.emplace_back(f);
  return out;
}

}  // namespace ncs
