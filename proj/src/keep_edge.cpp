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

#include <algorithm>

#include "cokeep/analysis.hpp"
#include "cokeep/connectivity.hpp"
#include "cokeep/embed.hpp"
#include "embed_internal.hpp"

namespace cokeep {
namespace {

using detail::ensure_valid;
using detail::require_bound;

Embedding finish(Embedding e, Property p, int k) {
  e.mode = DeleteMode::kEdge;
  e.preserved = p;
  e.k = k;
  return e;
}

Embedding single_vertex(Vertex v) {
  Embedding e;
  e.map = {v};
  return e;
}

VertexSet images(const Embedding& e, const VertexSet& tree_vertices) {
  VertexSet out;
  for (Vertex tv : tree_vertices) out.push_back(e.map[static_cast<std::size_t>(tv)]);
  return make_vertex_set(std::move(out));
}

// Edge-deletion tree for a k-edge-connected cograph `h` with
// delta(h) >= max{k + Delta(T) + beta(T) - 1, m - 1}, m >= 2.
Embedding edge_keeping_tree(const Graph& h, const TreeShape& t) {
  const int m = t.order();
  Embedding e = greedy_embed(h, t, h.vertices());
  const VertexSet v2_image = images(e, t.v2());
  if (h.delete_vertices(v2_image).is_connected()) return e;

  const Cotree ct = require_cotree(h);
  ensure(ct.kind() == CotreeKind::kJoin, "graph is disconnected");
  const Vertex anchor = e.map[static_cast<std::size_t>(t.v1().front())];
  const VertexSet gj = detail::cocomponent_of(ct, anchor).leaves();
  const VertexSet s = set_minus(h.vertices(), gj);

  for (Vertex u : s) {
    for (Vertex v : h.neighbors(u)) {
      if (!contains(s, v)) continue;
      // Root the tree at a V1-V2 edge placed on uv.
      for (const Edge& te : t.graph().edges()) {
        Vertex a = t.in_v1(te.u) ? te.u : te.v;
        Vertex b = a == te.u ? te.v : te.u;
        PartialMap p = detail::grow(h, t, {{a, u}, {b, v}}, h.vertices(),
                                    t.graph().vertices(), m - 1);
        return detail::to_embedding(p, m);
      }
    }
  }

  if (s.size() >= 2) {
    const Vertex x = t.smallest_leaf();
    const Vertex y = t.graph().neighbors(x).front();
    const Vertex w = s[0];
    const Vertex z = s[1];
    const VertexSet targets = set_minus(t.graph().vertices(), {x});
    PartialMap p = detail::grow(h, t, {{y, z}}, set_minus(h.vertices(), {w}),
                                targets, m - 2);
    const VertexSet free = set_minus(gj, detail::image_of(p));
    ensure(!free.empty(), "no vertex of G1 left for the last leaf");
    p[x] = free.front();
    return detail::to_embedding(p, m);
  }

  // G = G1 + w: recurse into the largest component of G1 plus w.
  const Cotree& g1 = detail::cocomponent_of(ct, anchor);
  ensure(g1.kind() == CotreeKind::kUnion, "G1 is connected");
  VertexSet part = g1.children().front().leaves();
  part = set_union(part, s);
  return edge_keeping_tree(h.induced_subgraph(part), t);
}

}  // namespace

Embedding keep_connectivity_edge_delete(const Graph& g, const TreeShape& t,
                                        int k) {
  detail::check_k(k);
  const Cotree ct = require_cotree(g);
  if (!detail::cotree_k_connected(ct, k)) {
    fail(ErrorCode::kNotKConnected,
         "graph is not " + std::to_string(k) + "-connected");
  }
  require_bound(required_bound(Theorem::kTh3, ct, t, k), min_degree(ct));
  const VertexSet g1 = ct.kind() == CotreeKind::kJoin
                           ? ct.children().front().leaves()
                           : ct.leaves();
  const VertexSet s = set_minus(g.vertices(), g1);
  const VertexSet spare = smallest(s, static_cast<std::size_t>(k));
  Embedding e = greedy_embed(g, t, set_minus(g.vertices(), spare));
  e = finish(e, Property::kKConnected, k);
  ensure_valid(g, t, e);
  ensure(is_k_connected(e.residual(g, t), k), "residual lost k-connectivity");
  return e;
}

DisjointPair keep_connectivity_edge_delete_two(const Graph& g,
                                               const TreeShape& t1,
                                               const TreeShape& t2) {
  detail::check_tree_pair(t1, t2);
  const Cotree ct = require_cotree(g);
  if (!is_connected_cograph(ct)) fail(ErrorCode::kNotConnected, "graph is disconnected");
  if (ct.order() == 1) {
    fail(ErrorCode::kBoundViolated, "K1 cannot hold two disjoint trees");
  }
  require_bound(required_bound(Theorem::kTh4, ct, t1, 0), min_degree(ct));
  const int kappa = kappa_cograph(ct);
  DisjointPair out;
  if (t1.order() == 1) {
    out.first = single_vertex(g.vertices()[0]);
    out.second = single_vertex(g.vertices()[1]);
  } else {
    const Cotree& g1 = ct.children().front();
    ensure(g1.kind() == CotreeKind::kUnion, "primary cocomponent is connected");
    out.first = greedy_embed(g, t1, g1.children()[0].leaves());
    out.second = greedy_embed(g, t2, g1.children()[1].leaves());
  }
  out.first = finish(out.first, Property::kExactKappa, kappa);
  out.second = finish(out.second, Property::kExactKappa, kappa);
  ensure_valid(g, t1, out.first);
  ensure_valid(g, t2, out.second);
  ensure(set_intersection(out.first.image(), out.second.image()).empty(),
         "trees overlap");
  const Graph rest = combined_residual(g, {t1, t2}, {out.first, out.second});
  ensure(vertex_connectivity_flow(rest) == kappa, "residual connectivity changed");
  return out;
}

Embedding keep_edge_connectivity_edge_delete(const Graph& g,
                                             const TreeShape& t, int k) {
  detail::check_k(k);
  const Cotree ct = require_cotree(g);
  if (!detail::cotree_k_edge_connected(ct, k)) {
    fail(ErrorCode::kNotKEdgeConnected,
         "graph is not " + std::to_string(k) + "-edge-connected");
  }
  Embedding e;
  if (t.order() == 1) {
    e = single_vertex(g.vertices().front());
  } else {
    require_bound(required_bound(Theorem::kTh5, ct, t, k), min_degree(ct));
    e = edge_keeping_tree(g, t);
  }
  e = finish(e, Property::kKEdgeConnected, k);
  ensure_valid(g, t, e);
  ensure(is_k_edge_connected(e.residual(g, t), k),
         "residual lost k-edge-connectivity");
  return e;
}

}  // namespace cokeep
