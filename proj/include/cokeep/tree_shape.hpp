// Copyright 2026 The cokeep Authors
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

#ifndef COKEEP_TREE_SHAPE_HPP_
#define COKEEP_TREE_SHAPE_HPP_

#include <string>
#include <vector>

#include "cokeep/graph.hpp"

namespace cokeep {

// A tree on vertices 0..m-1 with its bipartition (V1, V2), |V1| >= |V2|.
// When both sides have equal size, V1 is the side containing vertex 0.
class TreeShape {
 public:
  // Errors: kBadSpec if `tree` is empty, disconnected, or has a cycle.
  explicit TreeShape(Graph tree);

  const Graph& graph() const { return tree_; }
  int order() const { return tree_.order(); }
  const VertexSet& v1() const { return v1_; }
  const VertexSet& v2() const { return v2_; }
  bool in_v1(Vertex v) const { return contains(v1_, v); }
  int max_degree() const { return tree_.max_degree(); }
  int beta() const { return static_cast<int>(v2_.size()); }
  bool is_leaf(Vertex v) const { return tree_.degree(v) == 1; }
  // Smallest leaf, or 0 for K1.
  Vertex smallest_leaf() const;
  // First `count` vertices in breadth-first order from `root`, visiting
  // neighbors by increasing label. Always induces a subtree.
  VertexSet bfs_prefix(Vertex root, int count) const;

  bool operator==(const TreeShape& other) const = default;

 private:
  Graph tree_;
  VertexSet v1_;
  VertexSet v2_;
};

}  // namespace cokeep

#endif  // COKEEP_TREE_SHAPE_HPP_
