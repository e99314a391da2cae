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

#include "cokeep/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace cokeep {
namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

// Dinic max-flow over a small directed network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, int capacity) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  // Stops as soon as the flow reaches `limit`.
  int max_flow(int source, int sink, int limit) {
    int total = 0;
    while (total < limit && build_levels(source, sink)) {
      next_.assign(adj_.size(), 0);
      while (total < limit) {
        int pushed = augment(source, sink, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int residual;
  };

  bool build_levels(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (a.residual > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  int augment(int u, int sink, int budget) {
    if (u == sink) return budget;
    for (int& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int id = adj_[u][i];
      Arc& a = arcs_[id];
      if (a.residual <= 0 || level_[a.to] != level_[u] + 1) continue;
      int pushed = augment(a.to, sink, std::min(budget, a.residual));
      if (pushed > 0) {
        a.residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> next_;
};

// Vertex-split network: vertex i becomes in-node 2i and out-node 2i+1 with a
// unit arc between them (unbounded for the two terminals). The direct edge
// between the terminals, if any, is left out.
int disjoint_paths_by_index(const Graph& g, std::size_t s, std::size_t t,
                            int limit) {
  const VertexSet& labels = g.vertices();
  const int n = static_cast<int>(labels.size());
  FlowNetwork net(2 * n);
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) -
                            labels.begin());
  };
  for (int i = 0; i < n; ++i) {
    bool terminal = i == static_cast<int>(s) || i == static_cast<int>(t);
    net.add_arc(2 * i, 2 * i + 1, terminal ? kInfinity : 1);
  }
  for (const Edge& e : g.edges()) {
    int a = index(e.u);
    int b = index(e.v);
    bool direct = (a == static_cast<int>(s) && b == static_cast<int>(t)) ||
                  (a == static_cast<int>(t) && b == static_cast<int>(s));
    if (direct) continue;
    net.add_arc(2 * a + 1, 2 * b, 1);
    net.add_arc(2 * b + 1, 2 * a, 1);
  }
  return net.max_flow(2 * static_cast<int>(s) + 1, 2 * static_cast<int>(t),
                      limit);
}

}  // namespace

int vertex_connectivity_flow(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!g.is_connected()) return 0;
  const VertexSet& labels = g.vertices();
  int best = n - 1;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    for (std::size_t t = s + 1; t < labels.size(); ++t) {
      if (g.has_edge(labels[s], labels[t])) continue;
      best = std::min(best, disjoint_paths_by_index(g, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

int edge_connectivity_flow(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const VertexSet& labels = g.vertices();
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) -
                            labels.begin());
  };
  int best = g.min_degree();
  for (int t = 1; t < n && best > 0; ++t) {
    FlowNetwork net(n);
    for (const Edge& e : g.edges()) {
      net.add_arc(index(e.u), index(e.v), 1);
      net.add_arc(index(e.v), index(e.u), 1);
    }
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

int internally_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    fail(ErrorCode::kUnknownVertex, "unknown vertex in path query");
  }
  if (u == v) fail(ErrorCode::kInvalidArgument, "endpoints must differ");
  const VertexSet& labels = g.vertices();
  auto s = static_cast<std::size_t>(
      std::lower_bound(labels.begin(), labels.end(), u) - labels.begin());
  auto t = static_cast<std::size_t>(
      std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  int direct = g.has_edge(u, v) ? 1 : 0;
  return direct + disjoint_paths_by_index(g, s, t, kInfinity);
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() == 1) return k == 1;
  return vertex_connectivity_flow(g) >= k;
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() == 1) return k == 1;
  return edge_connectivity_flow(g) >= k;
}

}  // namespace cokeep
