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

#ifndef COKEEP_TESTS_TEST_SUPPORT_HPP_
#define COKEEP_TESTS_TEST_SUPPORT_HPP_

// Brute-force reference oracles. Nothing here calls library algorithms;
// graphs are converted to bitmask adjacency and examined exhaustively.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "cokeep/graph.hpp"

namespace cokeep_test {

using Mask = std::uint32_t;

struct Small {
  int n = 0;
  std::vector<Mask> adj;

  bool edge(int u, int v) const { return (adj[u] >> v) & 1U; }
  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

// Relabels the vertices of `g` to 0..n-1 in increasing label order.
inline Small to_small(const cokeep::Graph& g) {
  Small s;
  s.n = g.order();
  s.adj.assign(s.n, 0);
  const auto& labels = g.vertices();
  auto index = [&](int v) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) -
                            labels.begin());
  };
  for (const cokeep::Edge& e : g.edges()) {
    int a = index(e.u);
    int b = index(e.v);
    s.adj[a] |= Mask{1} << b;
    s.adj[b] |= Mask{1} << a;
  }
  return s;
}

inline cokeep::Graph to_graph(const Small& s) {
  cokeep::Graph g(s.n);
  for (int u = 0; u < s.n; ++u) {
    for (int v = u + 1; v < s.n; ++v) {
      if (s.edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

inline int degree(const Small& s, int v, Mask within) {
  return std::popcount(s.adj[v] & within);
}

inline int min_degree(const Small& s) {
  int d = s.n;
  for (int v = 0; v < s.n; ++v) d = std::min(d, degree(s, v, s.all()));
  return s.n == 0 ? 0 : d;
}

// Connectivity of the subgraph induced by `within`.
inline bool connected_within(const Small& s, Mask within) {
  if (within == 0) return false;
  Mask seen = within & (~within + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= s.adj[std::countr_zero(f)];
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

inline bool is_complete(const Small& s) {
  for (int v = 0; v < s.n; ++v) {
    if (degree(s, v, s.all()) != s.n - 1) return false;
  }
  return true;
}

// Smallest separating set size; n-1 for complete graphs.
inline int brute_kappa(const Small& s) {
  if (s.n <= 1) return 0;
  if (is_complete(s)) return s.n - 1;
  if (!connected_within(s, s.all())) return 0;
  int best = s.n - 2;
  for (Mask cut = 1; cut < s.all(); ++cut) {
    int size = std::popcount(cut);
    if (size >= best) continue;
    if (!connected_within(s, s.all() & ~cut)) best = size;
  }
  return best;
}

inline int cut_edges(const Small& s, Mask side) {
  int total = 0;
  for (Mask f = side; f != 0; f &= f - 1) {
    total += std::popcount(s.adj[std::countr_zero(f)] & ~side & s.all());
  }
  return total;
}

// Minimum number of edges crossing a proper nonempty bipartition.
inline int brute_lambda(const Small& s) {
  if (s.n <= 1) return 0;
  int best = s.n * s.n;
  // Sides holding vertex 0 cover every bipartition once.
  for (Mask side = 1; side < s.all(); side += 2) {
    best = std::min(best, cut_edges(s, side));
  }
  return best;
}

// Every minimum edge cut of a connected graph separates a single vertex.
inline bool brute_super(const Small& s) {
  int lambda = brute_lambda(s);
  for (Mask side = 1; side < s.all(); side += 2) {
    if (cut_edges(s, side) != lambda) continue;
    int a = std::popcount(side);
    if (a != 1 && a != s.n - 1) return false;
  }
  return true;
}

inline bool induces_p4(const Small& s, int a, int b, int c, int d) {
  return s.edge(a, b) && s.edge(b, c) && s.edge(c, d) && !s.edge(a, c) &&
         !s.edge(a, d) && !s.edge(b, d);
}

// Any ordering of the four vertices forming a path.
inline bool subset_is_p4(const Small& s, std::array<int, 4> q) {
  std::sort(q.begin(), q.end());
  do {
    if (induces_p4(s, q[0], q[1], q[2], q[3])) return true;
  } while (std::next_permutation(q.begin(), q.end()));
  return false;
}

inline bool has_induced_p4(const Small& s) {
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      for (int c = b + 1; c < s.n; ++c)
        for (int d = c + 1; d < s.n; ++d)
          if (subset_is_p4(s, {a, b, c, d})) return true;
  return false;
}

inline bool has_induced_2k2(const Small& s) {
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      for (int c = b + 1; c < s.n; ++c)
        for (int d = c + 1; d < s.n; ++d) {
          int e = (s.edge(a, b) + s.edge(a, c) + s.edge(a, d) + s.edge(b, c) +
                   s.edge(b, d) + s.edge(c, d));
          if (e != 2) continue;
          if ((s.edge(a, b) && s.edge(c, d)) || (s.edge(a, c) && s.edge(b, d)) ||
              (s.edge(a, d) && s.edge(b, c))) {
            return true;
          }
        }
  return false;
}

// Random cograph built directly by unions and joins of vertex blocks,
// relabeled by a random permutation.
inline Small random_cograph(int n, std::mt19937_64& rng) {
  Small s;
  s.n = n;
  s.adj.assign(n, 0);
  std::function<void(int, int, bool)> build = [&](int lo, int hi, bool join) {
    if (hi - lo <= 1) return;
    int parts = std::min<int>(hi - lo, 2 + static_cast<int>(rng() % 3));
    std::vector<int> cuts;
    for (int i = lo + 1; i < hi; ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (join) {
        for (int u = cuts[i]; u < cuts[i + 1]; ++u)
          for (int v = cuts[i + 1]; v < hi; ++v) {
            s.adj[u] |= Mask{1} << v;
            s.adj[v] |= Mask{1} << u;
          }
      }
      build(cuts[i], cuts[i + 1], !join);
    }
  };
  build(0, n, rng() % 2 == 0);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Small out;
  out.n = n;
  out.adj.assign(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (s.edge(u, v)) out.adj[perm[u]] |= Mask{1} << perm[v];
  return out;
}

inline Small random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Small s;
  s.n = n;
  s.adj.assign(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) {
        s.adj[u] |= Mask{1} << v;
        s.adj[v] |= Mask{1} << u;
      }
  return s;
}

inline Small induced(const Small& s, Mask keep) {
  std::vector<int> index(s.n, -1);
  Small out;
  for (int v = 0; v < s.n; ++v)
    if ((keep >> v) & 1U) index[v] = out.n++;
  out.adj.assign(out.n, 0);
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v)
      if (index[u] >= 0 && index[v] >= 0 && s.edge(u, v))
        out.adj[index[u]] |= Mask{1} << index[v];
  return out;
}

// Tree edges as (a, b) pairs on 0..m-1.
using TreeEdges = std::vector<std::pair<int, int>>;

inline TreeEdges tree_edges(const cokeep::Graph& tree) {
  TreeEdges out;
  for (const cokeep::Edge& e : tree.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// True iff `map` is an injective homomorphism of the tree into `g`.
inline bool embeds(const cokeep::Graph& g, int m, const TreeEdges& t,
                   const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != m) return false;
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : map)
    if (!g.has_vertex(v)) return false;
  for (auto [a, b] : t)
    if (!g.has_edge(map[a], map[b])) return false;
  return true;
}

// Visits every injective map of the tree into `s` (automorphic copies are
// visited separately). Returns false if `visit` stopped the search.
inline bool for_each_tree_map(const Small& s, int m, const TreeEdges& t,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> map(m, -1);
  std::function<bool(int, Mask)> rec = [&](int i, Mask used) -> bool {
    if (i == m) return visit(map);
    for (int v = 0; v < s.n; ++v) {
      if ((used >> v) & 1U) continue;
      bool ok = true;
      for (auto [a, b] : t) {
        int other = a == i ? b : (b == i ? a : -1);
        if (other >= 0 && other < i && !s.edge(v, map[other])) ok = false;
      }
      if (!ok) continue;
      map[i] = v;
      if (!rec(i + 1, used | (Mask{1} << v))) return false;
    }
    return true;
  };
  return rec(0, 0);
}

inline Small remove_edges(Small s, const std::vector<std::pair<int, int>>& edges) {
  for (auto [a, b] : edges) {
    s.adj[a] &= ~(Mask{1} << b);
    s.adj[b] &= ~(Mask{1} << a);
  }
  return s;
}

}  // namespace cokeep_test

#endif  // COKEEP_TESTS_TEST_SUPPORT_HPP_
