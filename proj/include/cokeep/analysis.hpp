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

#ifndef COKEEP_ANALYSIS_HPP_
#define COKEEP_ANALYSIS_HPP_

#include "cokeep/cotree.hpp"
#include "cokeep/graph.hpp"

namespace cokeep {

// Invariants of a cograph, all read off its cotree.
struct AnalysisReport {
  int n = 0;
  int n_prime = 0;
  int t = 0;
  int delta = 0;
  int Delta = 0;
  int kappa = 0;
  int lambda = 0;
  bool connected = false;
  bool maximally_connected = false;
  bool maximally_edge_connected = false;
  bool super_edge_connected = false;
  // Set when super_edge_connected follows the disconnected-graph convention.
  bool super_by_convention = false;
  bool ideally_connected = false;
  bool dirac = false;
};

// t >= 2, or K1.
bool is_connected_cograph(const Cotree& ct);
int min_degree(const Cotree& ct);
int max_degree(const Cotree& ct);

int kappa_cograph(const Cotree& ct);   // n - n'
int lambda_cograph(const Cotree& ct);  // delta if connected, else 0

// Some cocomponent of maximum order has a vertex with no neighbor inside it.
bool is_maximally_connected(const Cotree& ct);
// Connected: not C4 and not H + K1 with H disconnected, n_H >= 4,
// delta(H) >= 1 and a component of H isomorphic to K_delta(G).
// Disconnected: exactly one isolated vertex.
bool is_super_edge_connected(const Cotree& ct);
// No four vertices induce 2K2.
bool is_ideally_connected(const Cotree& ct);

// Smallest isolated vertex over all maximum-order cocomponents, if any.
std::optional<Vertex> primary_isolated_vertex(const Cotree& ct);

AnalysisReport analyze(const Cotree& ct);
// Errors: NotACographError.
AnalysisReport analyze(const Graph& g);

}  // namespace cokeep

#endif  // COKEEP_ANALYSIS_HPP_
