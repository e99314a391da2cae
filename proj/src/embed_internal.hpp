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

#ifndef COKEEP_SRC_EMBED_INTERNAL_HPP_
#define COKEEP_SRC_EMBED_INTERNAL_HPP_

#include "cokeep/analysis.hpp"
#include "cokeep/embed.hpp"

namespace cokeep::detail {

// Grows `partial` until every vertex of `targets` is mapped, using only
// `allowed` graph vertices. Throws kDegreeTooLow if some allowed vertex has
// fewer than `required_degree` allowed neighbors.
PartialMap grow(const Graph& g, const TreeShape& t, PartialMap partial,
                const VertexSet& allowed, const VertexSet& targets,
                int required_degree);

Embedding to_embedding(const PartialMap& partial, int m);

// Image of the partial map.
VertexSet image_of(const PartialMap& partial);

// Throws BoundViolatedError when delta < bound.required.
void require_bound(const Bound& bound, int delta);

// Cotree-level k-connectivity with the K1 convention.
bool cotree_k_connected(const Cotree& ct, int k);
bool cotree_k_edge_connected(const Cotree& ct, int k);

// The cocomponent of `ct` containing `v`.
const Cotree& cocomponent_of(const Cotree& ct, Vertex v);

void check_tree_pair(const TreeShape& t1, const TreeShape& t2);
void check_k(int k);

// Structural validity of the final embedding.
void ensure_valid(const Graph& g, const TreeShape& t, const Embedding& e);

}  // namespace cokeep::detail

#endif  // COKEEP_SRC_EMBED_INTERNAL_HPP_
