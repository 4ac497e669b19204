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

#ifndef NCSERIES_PLANE_TREE_HPP
#define NCSERIES_PLANE_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncseries/word.hpp"

namespace ncs {

/// Plane rooted tree; each vertex is implicitly colored by its height.
class PlaneTree {
 public:
  PlaneTree() = default;
  explicit PlaneTree(std::vector<PlaneTree> children) : children_(std::move(children)) {}

  const std::vector<PlaneTree>& children() const { return children_; }
  std::size_t vertex_count() const;
  // Sum of vertex heights.
  std::uint64_t path_length() const;

  // X0 (sigma w_T1) ... (sigma w_Tk), read recursively.
  Word preorder_word() const;
  // Inverse of preorder_word. Throws std::invalid_argument if w is not the
  // word of a tree.
  static PlaneTree from_preorder_word(const Word& w);

  // All plane trees with exactly n >= 1 vertices, Catalan(n - 1) of them.
  static std::vector<PlaneTree> enumerate(std::size_t n);

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<PlaneTree> children_;
};

}  // namespace ncs

#endif  // NCSERIES_PLANE_TREE_HPP
