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

#include "cokeep/analysis.hpp"

#include <algorithm>

namespace cokeep {
namespace {

bool is_complete_node(const Cotree& c) {
  if (c.is_leaf()) return true;
  return c.kind() == CotreeKind::kJoin &&
         std::all_of(c.children().begin(), c.children().end(),
                     [](const Cotree& x) { return x.is_leaf(); });
}

// Vertices with no neighbor inside the cocomponent `c`.
VertexSet isolated_in(const Cotree& c) {
  if (c.is_leaf()) return {c.label()};
  VertexSet out;
  if (c.kind() == CotreeKind::kUnion) {
    for (const Cotree& x : c.children()) {
      if (x.is_leaf()) out.push_back(x.label());
    }
  }
  return make_vertex_set(std::move(out));
}

bool is_c4(const Cotree& ct) {
  if (ct.order() != 4) return false;
  for (const auto& [v, d] : cotree_degrees(ct)) {
    if (d != 2) return false;
  }
  return true;
}

}  // namespace

bool is_connected_cograph(const Cotree& ct) {
  return cocomponent_count(ct) >= 2 || ct.order() == 1;
}

int min_degree(const Cotree& ct) {
  int best = ct.order();
  for (const auto& [v, d] : cotree_degrees(ct)) best = std::min(best, d);
  return best;
}

int max_degree(const Cotree& ct) {
  int best = 0;
  for (const auto& [v, d] : cotree_degrees(ct)) best = std::max(best, d);
  return best;
}

int kappa_cograph(const Cotree& ct) { return ct.order() - primary_order(ct); }

int lambda_cograph(const Cotree& ct) {
  if (ct.order() == 1 || !is_connected_cograph(ct)) return 0;
  return min_degree(ct);
}

std::optional<Vertex> primary_isolated_vertex(const Cotree& ct) {
  const int top = primary_order(ct);
  std::optional<Vertex> best;
  for (const Cotree& c : cocomponents(ct)) {
    if (c.order() != top) continue;
    VertexSet iso = isolated_in(c);
    if (!iso.empty() && (!best || iso.front() < *best)) best = iso.front();
  }
  return best;
}

bool is_maximally_connected(const Cotree& ct) {
  return primary_isolated_vertex(ct).has_value();
}

bool is_super_edge_connected(const Cotree& ct) {
  if (!is_connected_cograph(ct)) {
    // Exactly one isolated vertex; other components are unconstrained.
    int isolated = 0;
    for (const Cotree& c : ct.children()) isolated += c.is_leaf() ? 1 : 0;
    return isolated == 1;
  }
  if (is_c4(ct)) return false;
  if (cocomponent_count(ct) != 2) return true;
  const Cotree& h = ct.children()[0];
  const Cotree& rest = ct.children()[1];
  if (!rest.is_leaf() || h.kind() != CotreeKind::kUnion || h.order() < 4) {
    return true;
  }
  if (min_degree(h) < 1) return true;
  const int delta = min_degree(ct);
  for (const Cotree& comp : h.children()) {
    if (is_complete_node(comp) && comp.order() == delta) return false;
  }
  return true;
}

bool is_ideally_connected(const Cotree& ct) {
  const Graph g = materialize(ct);
  const std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      if (!g.has_edge(a.u, b.u) && !g.has_edge(a.u, b.v) &&
          !g.has_edge(a.v, b.u) && !g.has_edge(a.v, b.v)) {
        return false;
      }
    }
  }
  return true;
}

AnalysisReport analyze(const Cotree& ct) {
  AnalysisReport r;
  r.n = ct.order();
  r.n_prime = primary_order(ct);
  r.t = cocomponent_count(ct);
  r.delta = min_degree(ct);
  r.Delta = max_degree(ct);
  r.kappa = kappa_cograph(ct);
  r.lambda = lambda_cograph(ct);
  r.connected = is_connected_cograph(ct);
  r.maximally_connected = is_maximally_connected(ct);
  r.maximally_edge_connected = r.lambda == r.delta;
  r.super_edge_connected = is_super_edge_connected(ct);
  r.super_by_convention = !r.connected;
  r.ideally_connected = is_ideally_connected(ct);
  r.dirac = r.n >= 3 && 2 * r.delta >= r.n;
  return r;
}

AnalysisReport analyze(const Graph& g) { return analyze(require_cotree(g)); }

}  // namespace cokeep
