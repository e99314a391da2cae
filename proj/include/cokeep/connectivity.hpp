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

#ifndef COKEEP_CONNECTIVITY_HPP_
#define COKEEP_CONNECTIVITY_HPP_

#include "cokeep/graph.hpp"

namespace cokeep {

// Flow-based connectivity for arbitrary graphs. These are the reference
// values the closed-form cograph formulas are checked against, so they make
// no use of cograph structure.

// kappa(G): min over non-adjacent pairs of vertex-disjoint path counts;
// n-1 for complete graphs, 0 for K1 and disconnected graphs.
int vertex_connectivity_flow(const Graph& g);

// lambda(G): fixed source, unit-capacity edge flow to every other vertex;
// 0 for K1 and disconnected graphs.
int edge_connectivity_flow(const Graph& g);

// Maximum number of internally vertex-disjoint u-v paths. A direct edge uv
// counts as one path. Errors: kUnknownVertex, kInvalidArgument (u == v).
int internally_disjoint_paths(const Graph& g, Vertex u, Vertex v);

// kappa(G) >= k, except that K1 counts as 1-connected.
bool is_k_connected(const Graph& g, int k);
// lambda(G) >= k, except that K1 counts as 1-edge-connected.
bool is_k_edge_connected(const Graph& g, int k);

}  // namespace cokeep

#endif  // COKEEP_CONNECTIVITY_HPP_
