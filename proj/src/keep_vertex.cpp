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
#include "cokeep/oracle.hpp"
#include "embed_internal.hpp"

namespace cokeep {
namespace {

using detail::ensure_valid;
using detail::grow;
using detail::require_bound;
using detail::to_embedding;

// Residual sizes up to this order also get a brute-force cut check.
constexpr int kSuperCutCheckLimit = 12;

VertexSet primary_vertices(const Cotree& ct) {
  return ct.kind() == CotreeKind::kJoin ? ct.children().front().leaves()
                                        : ct.leaves();
}

Embedding finish(Embedding e, DeleteMode mode, Property p, int k) {
  e.mode = mode;
  e.preserved = p;
  e.k = k;
  return e;
}

bool is_cycle4(const Graph& g) {
  if (g.order() != 4) return false;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// T' containing the edge wz with z the image of a leaf, grown inside
// `allowed`. For m = 1 the single vertex goes to z.
PartialMap rooted_at_edge(const Graph& g, const TreeShape& t, Vertex w,
                          Vertex z, const VertexSet& allowed, Vertex& leaf) {
  leaf = t.smallest_leaf();
  if (t.order() == 1) return {{0, z}};
  Vertex parent = t.graph().neighbors(leaf).front();
  return grow(g, t, {{parent, w}, {leaf, z}}, allowed, t.graph().vertices(),
              t.order() - 1);
}

std::optional<Edge> first_edge_inside(const Graph& g, const VertexSet& s) {
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && contains(s, v)) return Edge(u, v);
    }
  }
  return std::nullopt;
}

// Tree inside the non-complete component `comp` of G1 when G = G1 + K1, such
// that comp - V(T') is connected but not complete.
Embedding super_single_apex(const Graph& g, const TreeShape& t,
                            const Cotree& comp) {
  const Cotree& inner = comp.children().front();  // primary cocomponent
  const VertexSet g11 = inner.leaves();
  const VertexSet s1 = set_minus(comp.leaves(), g11);
  const VertexSet all = comp.leaves();
  const Graph g11_graph = g.induced_subgraph(g11);
  const std::vector<VertexSet> parts = g11_graph.components();
  ensure(parts.size() >= 2, "primary cocomponent of a component is connected");

  auto with_swap = [&](Vertex w, Vertex z, const VertexSet& avoid,
                       const VertexSet& must_leave, const VertexSet& spare) {
    Vertex leaf = 0;
    PartialMap p = rooted_at_edge(g, t, w, z, set_minus(all, avoid), leaf);
    Embedding e = to_embedding(p, t.order());
    VertexSet img = e.image();
    if (set_minus(must_leave, img).empty()) {
      VertexSet free = set_minus(set_minus(spare, img), avoid);
      ensure(!free.empty(), "no vertex left for the leaf swap");
      e.map[static_cast<std::size_t>(leaf)] = free.front();
    }
    return e;
  };

  if (auto wz = first_edge_inside(g, s1)) {
    VertexSet avoid{parts[0].front(), parts[1].front()};
    return with_swap(wz->u, wz->v, make_vertex_set(avoid), s1, g11);
  }
  if (s1.size() >= 2) {
    if (auto wz = first_edge_inside(g, g11)) {
      VertexSet avoid = smallest(s1, 2);
      return with_swap(wz->u, wz->v, avoid, g11, s1);
    }
    return embed_across(g, t, g11, s1);
  }
  return greedy_embed(g, t, inner.children().front().leaves());
}

}  // namespace

Embedding keep_vertex_connectivity(const Graph& g, const TreeShape& t, int k) {
  detail::check_k(k);
  const Cotree ct = require_cotree(g);
  if (!detail::cotree_k_connected(ct, k)) {
    fail(ErrorCode::kNotKConnected,
         "graph is not " + std::to_string(k) + "-connected");
  }
  const Bound bound = required_bound(Theorem::kTh1, ct, t, k);
  require_bound(bound, min_degree(ct));

  const int m = t.order();
  const int np = primary_order(ct);
  const VertexSet g1 = primary_vertices(ct);
  const VertexSet s = set_minus(g.vertices(), g1);
  Embedding e;
  if (np == 1) {
    e = greedy_embed(g, t, g.vertices());
  } else if (np <= k) {
    e = greedy_embed(g, t, s);
  } else if (np < k + m) {
    const int p = np - k;
    const VertexSet t0 = t.bfs_prefix(t.smallest_leaf(), m - p);
    PartialMap part = grow(g, t, {}, s, t0, m - p - 1);
    const VertexSet spare = smallest(set_minus(s, detail::image_of(part)),
                                     static_cast<std::size_t>(k));
    e = extend_embedding(g, t, part, spare);
  } else {
    e = greedy_embed(g, t, set_minus(g.vertices(),
                                     smallest(s, static_cast<std::size_t>(k))));
  }
  e = finish(e, DeleteMode::kVertex, Property::kKConnected, k);
  ensure_valid(g, t, e);
  const Cotree rest = require_cotree(e.residual(g, t));
  ensure(detail::cotree_k_connected(rest, k), "residual lost k-connectivity");
  return e;
}

DisjointPair keep_vertex_connectivity_two(const Graph& g, const TreeShape& t1,
                                          const TreeShape& t2) {
  detail::check_tree_pair(t1, t2);
  const Cotree ct = require_cotree(g);
  if (!is_connected_cograph(ct)) fail(ErrorCode::kNotConnected, "graph is disconnected");
  const Bound bound = required_bound(Theorem::kTh2, ct, t1, 0);
  if (ct.order() == 1) {
    fail(ErrorCode::kBoundViolated, "K1 cannot hold two disjoint trees");
  }
  require_bound(bound, min_degree(ct));

  const Cotree& g1 = ct.children().front();
  ensure(g1.kind() == CotreeKind::kUnion, "primary cocomponent is connected");
  DisjointPair out;
  out.first = greedy_embed(g, t1, g1.children()[0].leaves());
  out.second = greedy_embed(g, t2, g1.children()[1].leaves());
  const int kappa = kappa_cograph(ct);
  out.first = finish(out.first, DeleteMode::kVertex, Property::kExactKappa, kappa);
  out.second = finish(out.second, DeleteMode::kVertex, Property::kExactKappa, kappa);
  ensure_valid(g, t1, out.first);
  ensure_valid(g, t2, out.second);
  ensure(set_intersection(out.first.image(), out.second.image()).empty(),
         "trees overlap");
  const Graph rest = combined_residual(g, {t1, t2}, {out.first, out.second});
  ensure(kappa_cograph(require_cotree(rest)) == kappa,
         "residual connectivity changed");
  return out;
}

Embedding keep_maximal_connectedness(const Graph& g, const TreeShape& t) {
  const Cotree ct = require_cotree(g);
  const int m = t.order();
  if (!is_maximally_connected(ct)) {
    fail(ErrorCode::kNotMaximallyConnected, "graph is not maximally connected");
  }
  if (g.order() == m && g.is_complete()) {
    fail(ErrorCode::kIsKm, "graph is the complete graph of the tree's order");
  }
  const int delta = min_degree(ct);
  if (delta < m - 1) {
    fail(ErrorCode::kDegreeTooLow, "minimum degree " + std::to_string(delta) +
                                       " is below m-1 = " + std::to_string(m - 1));
  }

  const Vertex x = *primary_isolated_vertex(ct);
  const Cotree& g1_tree = detail::cocomponent_of(ct, x);
  const VertexSet g1 = g1_tree.leaves();
  const VertexSet g1_free = set_minus(g1, {x});
  const VertexSet s = set_minus(g.vertices(), g1);
  std::vector<VertexSet> others;  // G2, G3, ... by descending order
  if (ct.kind() == CotreeKind::kJoin) {
    for (const Cotree& c : ct.children()) {
      if (&c != &g1_tree) others.push_back(c.leaves());
    }
  }
  const int k = delta - m + 1;
  const int p = static_cast<int>(g1.size()) - k;
  const int n1 = static_cast<int>(t.v1().size());
  const int n2 = static_cast<int>(t.v2().size());
  const int q = n1 - n2;

  Embedding e;
  if (m == 1) {
    Vertex target = s.empty() ? set_minus(g.vertices(), {x}).front() : s.front();
    e.map = {target};
  } else if (p >= m - 1 || (p >= 1 && q >= m - p - 1)) {
    e = embed_across(g, t, s, g1_free);
  } else if (p <= 0) {
    e = greedy_embed(g, t, s);
  } else {
    const int r = (m - p - q - 1 + 1) / 2;
    const int half = (p + 1) / 2;
    ensure(n1 == q + r + half && n2 == r + half, "bipartition arithmetic");
    ensure(others.size() >= 2, "fewer than three cocomponents");
    if (static_cast<int>(others[0].size()) >= n2) {
      const VertexSet s2 = smallest(others[0], static_cast<std::size_t>(n2));
      const VertexSet s11 = smallest(set_minus(s, others[0]),
                                     static_cast<std::size_t>(q + r));
      const VertexSet s12 = smallest(g1_free, static_cast<std::size_t>(half));
      e = embed_across(g, t, set_union(s11, s12), s2);
    } else {
      // Even-indexed cocomponents G2, G4, ... are others[0], others[2], ...
      int sum_before = 0;
      std::optional<std::size_t> last;
      VertexSet before;
      for (std::size_t i = 0; i < others.size(); i += 2) {
        if (sum_before + static_cast<int>(others[i].size()) >= n2) {
          last = i;
          break;
        }
        sum_before += static_cast<int>(others[i].size());
        before = set_union(before, others[i]);
      }
      ensure(last.has_value(), "no index s with the required partial sums");
      const VertexSet& g2s = others[*last];
      const VertexSet s2 = set_union(before, g2s);
      const VertexSet s1 = set_minus(s, s2);
      if (static_cast<int>(s1.size()) >= n1) {
        e = embed_across(g, t, s1, s2);
      } else {
        const int l1 = n1 - static_cast<int>(s1.size());
        const int l2 = n2 - sum_before;
        if (l2 >= l1) {
          const VertexSet l2_set = smallest(g2s, static_cast<std::size_t>(l2));
          const VertexSet u1 = smallest(g1_free, static_cast<std::size_t>(l1));
          e = embed_across(g, t, set_union(u1, s1), set_union(before, l2_set));
        } else {
          const VertexSet l1_set = smallest(g2s, static_cast<std::size_t>(l1));
          const VertexSet u2 = smallest(g1_free, static_cast<std::size_t>(l2));
          e = embed_across(g, t, set_union(s1, l1_set), set_union(before, u2));
        }
      }
    }
  }
  e = finish(e, DeleteMode::kVertex, Property::kMaximallyConnected, 0);
  ensure_valid(g, t, e);
  ensure(is_maximally_connected(require_cotree(e.residual(g, t))),
         "residual is not maximally connected");
  return e;
}

Embedding keep_edge_connectivity_vertex_delete(const Graph& g,
                                               const TreeShape& t, int k) {
  detail::check_k(k);
  const Cotree ct = require_cotree(g);
  if (!detail::cotree_k_edge_connected(ct, k)) {
    fail(ErrorCode::kNotKEdgeConnected,
         "graph is not " + std::to_string(k) + "-edge-connected");
  }
  require_bound(required_bound(Theorem::kTh6, ct, t, k), min_degree(ct));
  Embedding e = keep_vertex_connectivity(g, t, 1);
  e = finish(e, DeleteMode::kVertex, Property::kKEdgeConnected, k);
  ensure(is_k_edge_connected(e.residual(g, t), k),
         "residual lost k-edge-connectivity");
  return e;
}

Embedding keep_super_edge_connectivity(const Graph& g, const TreeShape& t) {
  const Cotree ct = require_cotree(g);
  if (!is_super_edge_connected(ct)) {
    fail(ErrorCode::kNotSuper, "graph is not super edge-connected");
  }
  require_bound(required_bound(Theorem::kSuperKeep, ct, t, 0), min_degree(ct));
  ensure(is_connected_cograph(ct), "super graph with large degree is disconnected");

  const VertexSet g1 = primary_vertices(ct);
  const VertexSet s = set_minus(g.vertices(), g1);
  Embedding e;
  if (g1.size() == 1) {
    e = greedy_embed(g, t, g.vertices());
  } else if (s.size() >= 2) {
    e = keep_vertex_connectivity(g, t, 2);
    if (is_cycle4(e.residual(g, t))) {
      ensure(set_intersection(e.image(), g1).empty(), "tree meets G1");
      const Vertex z = t.smallest_leaf();
      e.map[static_cast<std::size_t>(z)] = g1.front();
    }
  } else {
    const Cotree& top = ct.children().front();
    ensure(top.kind() == CotreeKind::kUnion, "G1 is connected");
    const Cotree* comp = nullptr;
    for (const Cotree& c : top.children()) {
      if (!c.is_leaf() && !(c.kind() == CotreeKind::kJoin &&
                            std::all_of(c.children().begin(), c.children().end(),
                                        [](const Cotree& x) { return x.is_leaf(); }))) {
        comp = &c;
        break;
      }
    }
    ensure(comp != nullptr, "every component of G1 is complete");
    e = super_single_apex(g, t, *comp);
  }
  e = finish(e, DeleteMode::kVertex, Property::kSuperEdgeConnected, 0);
  ensure_valid(g, t, e);
  const Graph rest = e.residual(g, t);
  ensure(is_super_edge_connected(require_cotree(rest)),
         "residual is not super edge-connected");
  if (rest.order() <= kSuperCutCheckLimit) {
    ensure(super_by_cuts(rest), "cut enumeration disagrees on the residual");
  }
  return e;
}

}  // namespace cokeep
