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

#include "cokeep/tree_shape.hpp"

#include <deque>

namespace cokeep {

TreeShape::TreeShape(Graph tree) : tree_(std::move(tree)) {
  const int m = tree_.order();
  if (m == 0) fail(ErrorCode::kBadSpec, "a tree needs at least one vertex");
  if (tree_.vertices().back() != m - 1) {
    fail(ErrorCode::kBadSpec, "tree vertices must be 0..m-1");
  }
  if (static_cast<int>(tree_.edge_count()) != m - 1 || !tree_.is_connected()) {
    fail(ErrorCode::kBadSpec, "not a tree: need a connected graph with m-1 edges");
  }
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  std::deque<Vertex> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : tree_.neighbors(u)) {
      if (color[static_cast<std::size_t>(w)] < 0) {
        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < m; ++v) {
    (color[static_cast<std::size_t>(v)] == 0 ? v1_ : v2_).push_back(v);
  }
  if (v2_.size() > v1_.size()) std::swap(v1_, v2_);
}

Vertex TreeShape::smallest_leaf() const {
  for (Vertex v : tree_.vertices()) {
    if (is_leaf(v)) return v;
  }
  return 0;
}

VertexSet TreeShape::bfs_prefix(Vertex root, int count) const {
  std::vector<bool> seen(static_cast<std::size_t>(order()), false);
  VertexSet out;
  std::deque<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty() && static_cast<int>(out.size()) < count) {
    Vertex u = queue.front();
    queue.pop_front();
    out.push_back(u);
    for (Vertex w : tree_.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return make_vertex_set(std::move(out));
}

}  // namespace cokeep
