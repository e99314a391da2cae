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

#ifndef COKEEP_EMBED_HPP_
#define COKEEP_EMBED_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cokeep/cotree.hpp"
#include "cokeep/graph.hpp"
#include "cokeep/tree_shape.hpp"

namespace cokeep {

enum class DeleteMode { kVertex, kEdge };

enum class Property {
  kNone,
  kKConnected,
  kKEdgeConnected,
  kMaximallyConnected,
  kSuperEdgeConnected,
  kExactKappa,
};

std::string_view delete_mode_name(DeleteMode mode);
std::string_view property_name(Property p);

// Tree vertex i maps to graph vertex map[i].
struct Embedding {
  std::vector<Vertex> map;
  DeleteMode mode = DeleteMode::kVertex;
  Property preserved = Property::kNone;
  int k = 0;

  VertexSet image() const;
  std::vector<Edge> image_edges(const TreeShape& t) const;
  // G - V(T') or G - E(T') according to `mode`.
  Graph residual(const Graph& g, const TreeShape& t) const;

  bool operator==(const Embedding&) const = default;
};

struct DisjointPair {
  Embedding first;
  Embedding second;
};

// Partial map from tree vertices to graph vertices.
using PartialMap = std::map<Vertex, Vertex>;

// True iff `e` is injective, lies in G, and maps every tree edge to an edge.
bool is_valid_embedding(const Graph& g, const TreeShape& t, const Embedding& e);

// Embeds T inside `allowed`: tree vertex 0 goes to the smallest allowed
// vertex, then each unmapped tree vertex next to a mapped one (smallest
// first) takes the smallest free allowed neighbor of its mapped neighbor.
// Errors: kDegreeTooLow unless every allowed vertex has at least m-1
// allowed neighbors.
Embedding greedy_embed(const Graph& g, const TreeShape& t,
                       const VertexSet& allowed);

// Extends a connected partial embedding to all of T while avoiding
// `forbidden`, growing as greedy_embed does.
// Errors: kDegreeTooLow, kInvalidArgument (partial not a valid subtree image).
Embedding extend_embedding(const Graph& g, const TreeShape& t,
                           const PartialMap& partial, const VertexSet& forbidden);

// Maps V1 onto the smallest |V1| labels of X and V2 onto the smallest |V2|
// labels of Y. Errors: kPartTooSmall, kMissingCrossEdge.
Embedding embed_across(const Graph& g, const TreeShape& t, const VertexSet& x,
                       const VertexSet& y);

enum class Theorem {
  kTh1,        // G - V(T') k-connected
  kTh2,        // two trees, G - V(T'1) - V(T'2) keeps kappa
  kMaxCon,     // G - V(T') maximally connected
  kTh3,        // G - E(T') k-connected
  kTh4,        // two trees, G - E(T'1) - E(T'2) keeps kappa
  kTh6,        // G - V(T') k-edge-connected
  kSuperKeep,  // G - V(T') super edge-connected
  kTh5,        // G - E(T') k-edge-connected
};

std::string_view theorem_name(Theorem th);
// Errors: kInvalidArgument.
Theorem parse_theorem(std::string_view name);
bool uses_two_trees(Theorem th);
Property theorem_property(Theorem th);
DeleteMode theorem_mode(Theorem th);

struct Bound {
  std::string case_label;
  int required = 0;
};

// Minimum degree the construction needs; `k` is ignored where unused.
Bound required_bound(Theorem th, const Cotree& ct, const TreeShape& t, int k);

Embedding keep_vertex_connectivity(const Graph& g, const TreeShape& t, int k);
DisjointPair keep_vertex_connectivity_two(const Graph& g, const TreeShape& t1,
                                          const TreeShape& t2);
Embedding keep_maximal_connectedness(const Graph& g, const TreeShape& t);
Embedding keep_connectivity_edge_delete(const Graph& g, const TreeShape& t,
                                        int k);
DisjointPair keep_connectivity_edge_delete_two(const Graph& g,
                                               const TreeShape& t1,
                                               const TreeShape& t2);
Embedding keep_edge_connectivity_vertex_delete(const Graph& g,
                                               const TreeShape& t, int k);
Embedding keep_super_edge_connectivity(const Graph& g, const TreeShape& t);
Embedding keep_edge_connectivity_edge_delete(const Graph& g,
                                             const TreeShape& t, int k);

// Runs the construction for `th`; returns one embedding, or two for the
// disjoint-pair theorems (`t2` is then the second tree).
std::vector<Embedding> run_theorem(Theorem th, const Graph& g,
                                   const TreeShape& t1, const TreeShape& t2,
                                   int k);

// The residual after removing every tree of `trees` (one or two).
Graph combined_residual(const Graph& g, const std::vector<TreeShape>& shapes,
                        const std::vector<Embedding>& trees);

}  // namespace cokeep

#endif  // COKEEP_EMBED_HPP_
