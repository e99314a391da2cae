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

#include "cokeep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "cokeep/connectivity.hpp"

namespace cokeep {
namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    fail(ErrorCode::kTooLarge, std::string(what) + " is capped at n = " +
                                   std::to_string(cap) + ", got " +
                                   std::to_string(g.order()));
  }
}

struct TreeOrder {
  std::vector<Vertex> order;   // breadth-first from vertex 0
  std::vector<Vertex> parent;  // parent[order[i]], -1 for the root
};

TreeOrder tree_order(const TreeShape& t) {
  TreeOrder out;
  out.parent.assign(static_cast<std::size_t>(t.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    out.order.push_back(u);
    for (Vertex w : t.graph().neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        out.parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const TreeShape& t,
             const std::function<bool(const Embedding&)>& visit)
      : g_(g), t_(t), visit_(visit), plan_(tree_order(t)) {
    current_.map.assign(static_cast<std::size_t>(t.order()), -1);
  }

  void run() {
    for (Vertex v : g_.vertices()) {
      if (!place(0, v)) return;
    }
  }

 private:
  // Returns false once the visitor asks to stop.
  bool place(std::size_t depth, Vertex v) {
    const Vertex tv = plan_.order[depth];
    current_.map[static_cast<std::size_t>(tv)] = v;
    used_.insert(v);
    bool keep_going = true;
    if (depth + 1 == plan_.order.size()) {
      keep_going = report();
    } else {
      const Vertex next = plan_.order[depth + 1];
      const Vertex anchor =
          current_.map[static_cast<std::size_t>(plan_.parent[static_cast<std::size_t>(next)])];
      for (Vertex w : g_.neighbors(anchor)) {
        if (used_.count(w)) continue;
        if (!place(depth + 1, w)) {
          keep_going = false;
          break;
        }
      }
    }
    used_.erase(v);
    current_.map[static_cast<std::size_t>(tv)] = -1;
    return keep_going;
  }

  bool report() {
    std::vector<Edge> key = current_.image_edges(t_);
    if (key.empty()) key.emplace_back(current_.map[0], current_.map[0]);
    if (!seen_.insert(std::move(key)).second) return true;
    return visit_(current_);
  }

  const Graph& g_;
  const TreeShape& t_;
  const std::function<bool(const Embedding&)>& visit_;
  TreeOrder plan_;
  Embedding current_;
  std::set<Vertex> used_;
  std::set<std::vector<Edge>> seen_;
};

}  // namespace

void enumerate_subtree_embeddings(
    const Graph& g, const TreeShape& t,
    const std::function<bool(const Embedding&)>& visit, int cap) {
  check_cap(g, cap, "subtree enumeration");
  if (t.order() > g.order()) return;
  Enumerator(g, t, visit).run();
}

std::vector<Embedding> all_subtree_embeddings(const Graph& g,
                                              const TreeShape& t, int cap) {
  std::vector<Embedding> out;
  enumerate_subtree_embeddings(
      g, t,
      [&](const Embedding& e) {
        out.push_back(e);
        return true;
      },
      cap);
  return out;
}

bool residual_has_property(const Graph& residual, Property p, int k,
                           int reference_kappa, int cut_cap) {
  switch (p) {
    case Property::kNone:
      return true;
    case Property::kKConnected:
      return is_k_connected(residual, k);
    case Property::kKEdgeConnected:
      return is_k_edge_connected(residual, k);
    case Property::kMaximallyConnected:
      return vertex_connectivity_flow(residual) == residual.min_degree();
    case Property::kSuperEdgeConnected:
      return super_by_cuts(residual, cut_cap);
    case Property::kExactKappa:
      return vertex_connectivity_flow(residual) == reference_kappa;
  }
  return false;
}

SearchResult exhaustive_keeping_search(const Graph& g, const TreeShape& t,
                                       Property p, int k, DeleteMode mode,
                                       int cap) {
  SearchResult result;
  const int reference = vertex_connectivity_flow(g);
  std::map<VertexSet, bool> memo;
  enumerate_subtree_embeddings(
      g, t,
      [&](const Embedding& e) {
        ++result.examined;
        bool ok = false;
        if (mode == DeleteMode::kVertex) {
          const VertexSet img = e.image();
          auto it = memo.find(img);
          if (it != memo.end()) {
            ok = it->second;
          } else {
            ok = t.order() < g.order() &&
                 residual_has_property(g.delete_vertices(img), p, k, reference);
            memo.emplace(img, ok);
          }
        } else {
          ok = residual_has_property(g.delete_edges(e.image_edges(t)), p, k,
                                     reference);
        }
        if (ok) {
          result.found = e;
          result.found->mode = mode;
          result.found->preserved = p;
          result.found->k = k;
        }
        return !ok;
      },
      cap);
  return result;
}

PairSearchResult exhaustive_pair_search(const Graph& g, const TreeShape& t1,
                                        const TreeShape& t2, Property p, int k,
                                        DeleteMode mode, int cap) {
  PairSearchResult result;
  const int reference = vertex_connectivity_flow(g);
  const std::vector<Embedding> first = all_subtree_embeddings(g, t1, cap);
  const std::vector<Embedding> second = all_subtree_embeddings(g, t2, cap);
  std::map<VertexSet, bool> memo;
  for (const Embedding& a : first) {
    const VertexSet ia = a.image();
    for (const Embedding& b : second) {
      const VertexSet ib = b.image();
      if (!set_intersection(ia, ib).empty()) continue;
      ++result.examined;
      bool ok = false;
      if (mode == DeleteMode::kVertex) {
        const VertexSet both = set_union(ia, ib);
        auto it = memo.find(both);
        if (it != memo.end()) {
          ok = it->second;
        } else {
          ok = static_cast<int>(both.size()) < g.order() &&
               residual_has_property(g.delete_vertices(both), p, k, reference);
          memo.emplace(both, ok);
        }
      } else {
        std::vector<Edge> edges = a.image_edges(t1);
        auto eb = b.image_edges(t2);
        edges.insert(edges.end(), eb.begin(), eb.end());
        ok = residual_has_property(g.delete_edges(edges), p, k, reference);
      }
      if (ok) {
        DisjointPair pair{a, b};
        for (Embedding* e : {&pair.first, &pair.second}) {
          e->mode = mode;
          e->preserved = p;
          e->k = k;
        }
        result.found = pair;
        return result;
      }
    }
  }
  return result;
}

std::vector<CutRecord> min_edge_cuts(const Graph& g, int cap) {
  check_cap(g, cap, "cut enumeration");
  if (!g.is_connected()) fail(ErrorCode::kDisconnected, "graph is disconnected");
  const int n = g.order();
  if (n > 30) fail(ErrorCode::kTooLarge, "cut enumeration supports n <= 30");
  const VertexSet& labels = g.vertices();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(labels[static_cast<std::size_t>(i)])) {
      auto j = std::lower_bound(labels.begin(), labels.end(), w) - labels.begin();
      adj[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<CutRecord> best;
  int best_size = -1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int size_s = std::popcount(mask);
    if (2 * size_s > n) continue;
    if (2 * size_s == n && !(mask & 1u)) continue;
    int cut = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) cut += std::popcount(adj[static_cast<std::size_t>(i)] & ~mask & full);
    }
    if (best_size >= 0 && cut > best_size) continue;
    if (cut < best_size || best_size < 0) {
      best.clear();
      best_size = cut;
    }
    CutRecord rec;
    rec.size = cut;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) rec.side.push_back(labels[static_cast<std::size_t>(i)]);
    }
    if (size_s == 1) {
      rec.isolates = rec.side.front();
    } else if (n - size_s == 1) {
      rec.isolates = set_minus(labels, rec.side).front();
    }
    best.push_back(std::move(rec));
  }
  return best;
}

bool super_by_cuts(const Graph& g, int cap) {
  if (g.order() == 1) return true;
  if (!g.is_connected()) {
    int isolated = 0;
    for (Vertex v : g.vertices()) isolated += g.degree(v) == 0 ? 1 : 0;
    return isolated == 1;
  }
  for (const CutRecord& c : min_edge_cuts(g, cap)) {
    if (!c.isolates) return false;
  }
  return true;
}

int cut_size_from_cocomponents(const Cotree& ct, const VertexSet& side) {
  const VertexSet all = ct.leaves();
  const VertexSet s = make_vertex_set(side);
  const int outside = static_cast<int>(set_minus(all, s).size());
  int total = 0;
  for (const Cotree& gi : cocomponents(ct)) {
    const VertexSet vi = gi.leaves();
    const VertexSet si = set_intersection(vi, s);
    if (si.empty()) continue;
    const int rest_i = static_cast<int>(vi.size() - si.size());
    total += static_cast<int>(si.size()) * (outside - rest_i);
    const Graph gi_graph = materialize(gi);
    for (Vertex v : si) {
      total += static_cast<int>(set_minus(gi_graph.neighbors(v), si).size());
    }
  }
  return total;
}

}  // namespace cokeep
