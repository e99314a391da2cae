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

#ifndef COKEEP_GRAPH_HPP_
#define COKEEP_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cokeep/error.hpp"

namespace cokeep {

// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> labels);
bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
// The `count` smallest labels of `set`; throws kInvalidArgument if too few.
VertexSet smallest(const VertexSet& set, std::size_t count);

// Simple undirected graph over stable integer labels.
//
// Labels are assigned at construction and never change: deleting vertex 1
// from {0,1,2} leaves {0,2}. The graph is built with add_edge() and is then
// used as an immutable value.
class Graph {
 public:
  Graph() = default;
  // Vertices 0..n-1, no edges.
  explicit Graph(int n);
  // Vertices with the given labels (must be distinct and non-negative).
  explicit Graph(VertexSet labels);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);

  // Adds the edge uv. Self-loops are rejected; an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  const VertexSet& vertices() const { return labels_; }
  int order() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  // Sorted neighbor labels. Throws kUnknownVertex.
  const VertexSet& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;

  bool is_complete() const;
  bool is_connected() const;
  // Connected components, each sorted; components ordered by smallest label.
  std::vector<VertexSet> components() const;

  // <S>_G. Errors: kEmptySet, kUnknownVertex.
  Graph induced_subgraph(const VertexSet& subset) const;
  // G - S. Errors: kWouldBeEmpty, kUnknownVertex.
  Graph delete_vertices(const VertexSet& subset) const;
  // G - F; keeps every vertex. Errors: kUnknownEdge.
  Graph delete_edges(std::span<const Edge> edges) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t index_of(Vertex v) const;

  VertexSet labels_;
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

// Edge-list text: first line `n`, then one `u v` pair per line, 0-indexed;
// `#` starts a comment. Errors: kSyntaxError, kUnknownVertex.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace cokeep

#endif  // COKEEP_GRAPH_HPP_
