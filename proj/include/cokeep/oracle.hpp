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

#ifndef COKEEP_ORACLE_HPP_
#define COKEEP_ORACLE_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "cokeep/cotree.hpp"
#include "cokeep/embed.hpp"
#include "cokeep/graph.hpp"
#include "cokeep/tree_shape.hpp"

namespace cokeep {

inline constexpr int kDefaultEmbeddingCap = 14;
inline constexpr int kDefaultCutCap = 16;

// A bipartition (side, rest) together with |E_side|.
struct CutRecord {
  VertexSet side;
  int size = 0;
  // Set when the cut is exactly the edge star of this vertex.
  std::optional<Vertex> isolates;
};

// Calls `visit` once per subtree of G isomorphic to T (maps that differ by
// an automorphism of T are reported once), in a fixed order. Stops early
// when `visit` returns false. Errors: kTooLarge when n exceeds `cap`.
void enumerate_subtree_embeddings(
    const Graph& g, const TreeShape& t,
    const std::function<bool(const Embedding&)>& visit,
    int cap = kDefaultEmbeddingCap);

std::vector<Embedding> all_subtree_embeddings(const Graph& g,
                                              const TreeShape& t,
                                              int cap = kDefaultEmbeddingCap);

// Flow-based check of `p` on a residual graph. `reference_kappa` is only
// read for Property::kExactKappa. Errors: kTooLarge for super checks above
// the cut cap.
bool residual_has_property(const Graph& residual, Property p, int k,
                           int reference_kappa, int cut_cap = kDefaultCutCap);

struct SearchResult {
  std::optional<Embedding> found;
  long long examined = 0;

  bool proven_none() const { return !found.has_value(); }
};

struct PairSearchResult {
  std::optional<DisjointPair> found;
  long long examined = 0;

  bool proven_none() const { return !found.has_value(); }
};

// First embedding (in enumeration order) whose residual has `p`, or proof
// that none exists. For kExactKappa the reference is kappa(G) by flow.
SearchResult exhaustive_keeping_search(const Graph& g, const TreeShape& t,
                                       Property p, int k, DeleteMode mode,
                                       int cap = kDefaultEmbeddingCap);

// As above for two vertex-disjoint trees removed together.
PairSearchResult exhaustive_pair_search(const Graph& g, const TreeShape& t1,
                                        const TreeShape& t2, Property p, int k,
                                        DeleteMode mode,
                                        int cap = kDefaultEmbeddingCap);

// Every minimum edge cut of a connected graph. Each cut is reported once by
// its smaller side (on ties, the side holding the smallest label).
// Errors: kDisconnected, kTooLarge.
std::vector<CutRecord> min_edge_cuts(const Graph& g, int cap = kDefaultCutCap);

// Super edge-connectedness by cut enumeration, with the single-isolated-
// vertex convention for disconnected graphs.
bool super_by_cuts(const Graph& g, int cap = kDefaultCutCap);

// |E_S| of a connected cograph from the cocomponent sizes and the edges
// inside each cocomponent.
int cut_size_from_cocomponents(const Cotree& ct, const VertexSet& side);

}  // namespace cokeep

#endif  // COKEEP_ORACLE_HPP_
