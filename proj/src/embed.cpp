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

#include "cokeep/embed.hpp"

#include <algorithm>
#include <array>

#include "embed_internal.hpp"

namespace cokeep {

std::string_view delete_mode_name(DeleteMode mode) {
  return mode == DeleteMode::kVertex ? "vertex" : "edge";
}

std::string_view property_name(Property p) {
  switch (p) {
    case Property::kNone: return "none";
    case Property::kKConnected: return "k-connected";
    case Property::kKEdgeConnected: return "k-edge-connected";
    case Property::kMaximallyConnected: return "maximally-connected";
    case Property::kSuperEdgeConnected: return "super-edge-connected";
    case Property::kExactKappa: return "exact-kappa";
  }
  return "none";
}

VertexSet Embedding::image() const { return make_vertex_set(map); }

std::vector<Edge> Embedding::image_edges(const TreeShape& t) const {
  std::vector<Edge> out;
  for (const Edge& e : t.graph().edges()) {
    out.emplace_back(map[static_cast<std::size_t>(e.u)],
                     map[static_cast<std::size_t>(e.v)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Embedding::residual(const Graph& g, const TreeShape& t) const {
  if (mode == DeleteMode::kVertex) return g.delete_vertices(image());
  return g.delete_edges(image_edges(t));
}

bool is_valid_embedding(const Graph& g, const TreeShape& t,
                        const Embedding& e) {
  if (static_cast<int>(e.map.size()) != t.order()) return false;
  for (Vertex v : e.map) {
    if (!g.has_vertex(v)) return false;
  }
  if (static_cast<int>(e.image().size()) != t.order()) return false;
  for (const Edge& te : t.graph().edges()) {
    if (!g.has_edge(e.map[static_cast<std::size_t>(te.u)],
                    e.map[static_cast<std::size_t>(te.v)])) {
      return false;
    }
  }
  return true;
}

Graph combined_residual(const Graph& g, const std::vector<TreeShape>& shapes,
                        const std::vector<Embedding>& trees) {
  if (shapes.size() != trees.size() || trees.empty()) {
    fail(ErrorCode::kInvalidArgument, "one shape per embedding is required");
  }
  if (trees.front().mode == DeleteMode::kVertex) {
    VertexSet all;
    for (const Embedding& e : trees) all = set_union(all, e.image());
    return g.delete_vertices(all);
  }
  std::vector<Edge> all;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto part = trees[i].image_edges(shapes[i]);
    all.insert(all.end(), part.begin(), part.end());
  }
  return g.delete_edges(all);
}

namespace detail {

VertexSet image_of(const PartialMap& partial) {
  VertexSet out;
  for (const auto& [tv, gv] : partial) out.push_back(gv);
  return make_vertex_set(std::move(out));
}

PartialMap grow(const Graph& g, const TreeShape& t, PartialMap partial,
                const VertexSet& allowed, const VertexSet& targets,
                int required_degree) {
  for (Vertex v : allowed) {
    int inside = static_cast<int>(set_intersection(g.neighbors(v), allowed).size());
    if (inside < required_degree) {
      fail(ErrorCode::kDegreeTooLow,
           "vertex " + std::to_string(v) + " has " + std::to_string(inside) +
               " usable neighbors, needs " + std::to_string(required_degree));
    }
  }
  VertexSet used = image_of(partial);
  if (partial.empty()) {
    if (targets.empty()) return partial;
    ensure(!allowed.empty(), "no vertex available for the tree root");
    partial[targets.front()] = allowed.front();
    used = {allowed.front()};
  }
  while (true) {
    std::optional<std::pair<Vertex, Vertex>> next;  // (tree vertex, parent)
    for (Vertex tv : targets) {
      if (partial.count(tv)) continue;
      for (Vertex nb : t.graph().neighbors(tv)) {
        if (partial.count(nb)) {
          next = {tv, nb};
          break;
        }
      }
      if (next) break;
    }
    if (!next) break;
    const Vertex anchor = partial.at(next->second);
    std::optional<Vertex> choice;
    for (Vertex w : g.neighbors(anchor)) {
      if (contains(allowed, w) && !contains(used, w)) {
        choice = w;
        break;
      }
    }
    ensure(choice.has_value(), "greedy growth ran out of neighbors");
    partial[next->first] = *choice;
    used.insert(std::lower_bound(used.begin(), used.end(), *choice), *choice);
  }
  for (Vertex tv : targets) {
    ensure(partial.count(tv) > 0, "target vertices do not form a subtree");
  }
  return partial;
}

Embedding to_embedding(const PartialMap& partial, int m) {
  Embedding e;
  e.map.assign(static_cast<std::size_t>(m), -1);
  for (const auto& [tv, gv] : partial) e.map[static_cast<std::size_t>(tv)] = gv;
  for (Vertex v : e.map) ensure(v >= 0, "tree vertex left unmapped");
  return e;
}

void require_bound(const Bound& bound, int delta) {
  if (delta < bound.required) {
    throw BoundViolatedError(bound.case_label, bound.required, delta);
  }
}

bool cotree_k_connected(const Cotree& ct, int k) {
  if (k <= 0) return true;
  if (ct.order() == 1) return k == 1;
  return kappa_cograph(ct) >= k;
}

bool cotree_k_edge_connected(const Cotree& ct, int k) {
  if (k <= 0) return true;
  if (ct.order() == 1) return k == 1;
  return lambda_cograph(ct) >= k;
}

const Cotree& cocomponent_of(const Cotree& ct, Vertex v) {
  if (ct.kind() == CotreeKind::kJoin) {
    for (const Cotree& c : ct.children()) {
      if (contains(c.leaves(), v)) return c;
    }
  }
  return ct;
}

void check_tree_pair(const TreeShape& t1, const TreeShape& t2) {
  if (t1.order() != t2.order()) {
    fail(ErrorCode::kInvalidArgument, "both trees must have the same order");
  }
}

void check_k(int k) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be at least 1");
}

void ensure_valid(const Graph& g, const TreeShape& t, const Embedding& e) {
  ensure(is_valid_embedding(g, t, e), "constructed map is not a tree embedding");
}

}  // namespace detail

Embedding greedy_embed(const Graph& g, const TreeShape& t,
                       const VertexSet& allowed) {
  VertexSet a = make_vertex_set(allowed);
  if (a.empty()) fail(ErrorCode::kEmptySet, "no allowed vertices");
  for (Vertex v : a) {
    if (!g.has_vertex(v)) {
      fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(v));
    }
  }
  VertexSet all = t.graph().vertices();
  PartialMap p = detail::grow(g, t, {}, a, all, t.order() - 1);
  return detail::to_embedding(p, t.order());
}

Embedding extend_embedding(const Graph& g, const TreeShape& t,
                           const PartialMap& partial,
                           const VertexSet& forbidden) {
  VertexSet f = make_vertex_set(forbidden);
  VertexSet allowed = set_minus(g.vertices(), f);
  VertexSet seen;
  for (const auto& [tv, gv] : partial) {
    if (tv < 0 || tv >= t.order()) {
      fail(ErrorCode::kInvalidArgument, "partial map names an unknown tree vertex");
    }
    if (!g.has_vertex(gv)) {
      fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(gv));
    }
    if (contains(f, gv)) {
      fail(ErrorCode::kInvalidArgument, "partial map uses a forbidden vertex");
    }
    seen.push_back(gv);
  }
  if (make_vertex_set(seen).size() != partial.size()) {
    fail(ErrorCode::kInvalidArgument, "partial map is not injective");
  }
  for (const Edge& e : t.graph().edges()) {
    if (partial.count(e.u) && partial.count(e.v) &&
        !g.has_edge(partial.at(e.u), partial.at(e.v))) {
      fail(ErrorCode::kInvalidArgument, "partial map breaks a tree edge");
    }
  }
  if (!partial.empty()) {
    VertexSet dom;
    for (const auto& [tv, gv] : partial) dom.push_back(tv);
    if (!t.graph().induced_subgraph(make_vertex_set(dom)).is_connected()) {
      fail(ErrorCode::kInvalidArgument, "partial map is not a subtree");
    }
  }
  PartialMap p = detail::grow(g, t, partial, allowed, t.graph().vertices(),
                              t.order() - 1);
  return detail::to_embedding(p, t.order());
}

Embedding embed_across(const Graph& g, const TreeShape& t, const VertexSet& x,
                       const VertexSet& y) {
  VertexSet xs = make_vertex_set(x);
  VertexSet ys = make_vertex_set(y);
  if (xs.size() < t.v1().size() || ys.size() < t.v2().size()) {
    fail(ErrorCode::kPartTooSmall,
         "parts of sizes " + std::to_string(xs.size()) + " and " +
             std::to_string(ys.size()) + " cannot hold a bipartition " +
             std::to_string(t.v1().size()) + "+" + std::to_string(t.v2().size()));
  }
  if (!set_intersection(xs, ys).empty()) {
    fail(ErrorCode::kInvalidArgument, "parts must be disjoint");
  }
  for (Vertex a : xs) {
    for (Vertex b : ys) {
      if (!g.has_edge(a, b)) {
        fail(ErrorCode::kMissingCrossEdge, "missing cross edge " +
                                               std::to_string(a) + "-" +
                                               std::to_string(b));
      }
    }
  }
  Embedding e;
  e.map.assign(static_cast<std::size_t>(t.order()), -1);
  for (std::size_t i = 0; i < t.v1().size(); ++i) {
    e.map[static_cast<std::size_t>(t.v1()[i])] = xs[i];
  }
  for (std::size_t i = 0; i < t.v2().size(); ++i) {
    e.map[static_cast<std::size_t>(t.v2()[i])] = ys[i];
  }
  return e;
}

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 8> kTheoremNames{{
    {Theorem::kTh1, "th1"},
    {Theorem::kTh2, "th2"},
    {Theorem::kMaxCon, "maxcon"},
    {Theorem::kTh3, "th3"},
    {Theorem::kTh4, "th4"},
    {Theorem::kTh6, "th6"},
    {Theorem::kSuperKeep, "superkeep"},
    {Theorem::kTh5, "th5"},
}};

}  // namespace

std::string_view theorem_name(Theorem th) {
  for (const auto& [value, name] : kTheoremNames) {
    if (value == th) return name;
  }
  return "th1";
}

Theorem parse_theorem(std::string_view name) {
  for (const auto& [value, text] : kTheoremNames) {
    if (text == name) return value;
  }
  fail(ErrorCode::kInvalidArgument, "unknown theorem '" + std::string(name) + "'");
}

bool uses_two_trees(Theorem th) {
  return th == Theorem::kTh2 || th == Theorem::kTh4;
}

Property theorem_property(Theorem th) {
  switch (th) {
    case Theorem::kTh1:
    case Theorem::kTh3:
      return Property::kKConnected;
    case Theorem::kTh2:
    case Theorem::kTh4:
      return Property::kExactKappa;
    case Theorem::kMaxCon:
      return Property::kMaximallyConnected;
    case Theorem::kTh6:
    case Theorem::kTh5:
      return Property::kKEdgeConnected;
    case Theorem::kSuperKeep:
      return Property::kSuperEdgeConnected;
  }
  return Property::kNone;
}

DeleteMode theorem_mode(Theorem th) {
  switch (th) {
    case Theorem::kTh3:
    case Theorem::kTh4:
    case Theorem::kTh5:
      return DeleteMode::kEdge;
    default:
      return DeleteMode::kVertex;
  }
}

std::vector<Embedding> run_theorem(Theorem th, const Graph& g,
                                   const TreeShape& t1, const TreeShape& t2,
                                   int k) {
  switch (th) {
    case Theorem::kTh1:
      return {keep_vertex_connectivity(g, t1, k)};
    case Theorem::kTh2: {
      DisjointPair p = keep_vertex_connectivity_two(g, t1, t2);
      return {p.first, p.second};
    }
    case Theorem::kMaxCon:
      return {keep_maximal_connectedness(g, t1)};
    case Theorem::kTh3:
      return {keep_connectivity_edge_delete(g, t1, k)};
    case Theorem::kTh4: {
      DisjointPair p = keep_connectivity_edge_delete_two(g, t1, t2);
      return {p.first, p.second};
    }
    case Theorem::kTh6:
      return {keep_edge_connectivity_vertex_delete(g, t1, k)};
    case Theorem::kSuperKeep:
      return {keep_super_edge_connectivity(g, t1)};
    case Theorem::kTh5:
      return {keep_edge_connectivity_edge_delete(g, t1, k)};
  }
  return {};
}

Bound required_bound(Theorem th, const Cotree& ct, const TreeShape& t, int k) {
  const int m = t.order();
  const int kappa = kappa_cograph(ct);
  const int iverson_k1 = k == 1 ? 1 : 0;
  switch (th) {
    case Theorem::kTh1: {
      const int np = primary_order(ct);
      if (np == 1) return {"th1 case 1", k + m - iverson_k1};
      if (np <= k) return {"th1 case 2", k + m - 1 + np / 2};
      if (np < k + m) return {"th1 case 3", 3 * k / 2 + m - 1};
      return {"th1 case 4", k + m - 1};
    }
    case Theorem::kTh2:
      return {"th2", (3 * kappa + 1) / 2 + m - 1};
    case Theorem::kMaxCon:
      return {"maxcon", m - 1};
    case Theorem::kTh3:
      return {"th3", k + m - 1};
    case Theorem::kTh4:
      return {"th4", kappa + m - 1};
    case Theorem::kTh6:
      return {"th6", k + m - iverson_k1};
    case Theorem::kSuperKeep:
      return {"superkeep", m + 2};
    case Theorem::kTh5:
      return {"th5", std::max(k + t.max_degree() + t.beta() - 1, m - 1)};
  }
  return {"", 0};
}

}  // namespace cokeep
