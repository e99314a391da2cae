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

#include "cokeep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

namespace cokeep {

VertexSet make_vertex_set(std::vector<Vertex> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet smallest(const VertexSet& set, std::size_t count) {
  if (count > set.size()) {
    fail(ErrorCode::kInvalidArgument,
         "requested " + std::to_string(count) + " vertices from a set of " +
             std::to_string(set.size()));
  }
  return VertexSet(set.begin(), set.begin() + static_cast<long>(count));
}

Graph::Graph(int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "negative order");
  labels_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels_[static_cast<std::size_t>(i)] = i;
  adjacency_.resize(labels_.size());
}

Graph::Graph(VertexSet labels) : labels_(std::move(labels)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    fail(ErrorCode::kInvalidArgument, "vertex labels must be distinct");
  }
  if (!labels_.empty() && labels_.front() < 0) {
    fail(ErrorCode::kInvalidArgument, "vertex labels must be non-negative");
  }
  adjacency_.resize(labels_.size());
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) {
    fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) {
    fail(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
  }
  auto& nu = adjacency_[index_of(u)];
  auto& nv = adjacency_[index_of(v)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_vertex(Vertex v) const { return contains(labels_, v); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return contains(adjacency_[index_of(u)], v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  return adjacency_[index_of(v)];
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::min_degree() const {
  if (labels_.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& adj : adjacency_) best = std::min(best, adj.size());
  return static_cast<int>(best);
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (Vertex w : adjacency_[i]) {
      if (labels_[i] < w) out.emplace_back(labels_[i], w);
    }
  }
  return out;
}

bool Graph::is_complete() const {
  const std::size_t n = labels_.size();
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<bool> seen(labels_.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < labels_.size(); ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(labels_[i]);
      for (Vertex w : adjacency_[i]) {
        std::size_t j = index_of(w);
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const {
  return !labels_.empty() && components().size() == 1;
}

Graph Graph::induced_subgraph(const VertexSet& subset) const {
  if (subset.empty()) {
    fail(ErrorCode::kEmptySet, "induced subgraph of an empty vertex set");
  }
  VertexSet s = make_vertex_set(subset);
  for (Vertex v : s) index_of(v);
  Graph out(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : neighbors(s[i])) {
      if (s[i] < w && contains(s, w)) out.add_edge(s[i], w);
    }
  }
  return out;
}

Graph Graph::delete_vertices(const VertexSet& subset) const {
  VertexSet s = make_vertex_set(subset);
  for (Vertex v : s) index_of(v);
  VertexSet rest = set_minus(labels_, s);
  if (rest.empty()) {
    fail(ErrorCode::kWouldBeEmpty, "deleting every vertex of the graph");
  }
  return induced_subgraph(rest);
}

Graph Graph::delete_edges(std::span<const Edge> edges) const {
  Graph out = *this;
  for (const Edge& e : edges) {
    if (!has_edge(e.u, e.v)) {
      fail(ErrorCode::kUnknownEdge, "unknown edge " + std::to_string(e.u) +
                                        "-" + std::to_string(e.v));
    }
    auto& nu = out.adjacency_[out.index_of(e.u)];
    auto& nv = out.adjacency_[out.index_of(e.v)];
    auto iu = std::lower_bound(nu.begin(), nu.end(), e.v);
    if (iu == nu.end() || *iu != e.v) continue;  // repeated in `edges`
    nu.erase(iu);
    nv.erase(std::lower_bound(nv.begin(), nv.end(), e.u));
    --out.edge_count_;
  }
  return out;
}

namespace {

// Splits one line into integer tokens, dropping a trailing `#` comment.
std::vector<long long> line_integers(std::string_view line, std::size_t line_no,
                                     std::size_t line_offset) {
  std::vector<long long> out;
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i) {
      throw SyntaxError(line_offset + i,
                        "expected an integer on line " + std::to_string(line_no));
    }
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
        line[i] != '\r') {
      throw SyntaxError(line_offset + i, "unexpected character on line " +
                                             std::to_string(line_no));
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto values = line_integers(text.substr(offset, end - offset), line_no, offset);
    if (!values.empty()) {
      if (!g) {
        if (values.size() != 1 || values[0] < 0 ||
            values[0] > std::numeric_limits<int>::max()) {
          throw SyntaxError(offset, "first line must hold the vertex count");
        }
        g.emplace(static_cast<int>(values[0]));
      } else {
        if (values.size() != 2) {
          throw SyntaxError(offset, "expected `u v` on line " +
                                        std::to_string(line_no));
        }
        for (long long x : values) {
          if (x < 0 || x >= g->order()) {
            fail(ErrorCode::kUnknownVertex,
                 "vertex " + std::to_string(x) + " out of range on line " +
                     std::to_string(line_no));
          }
        }
        g->add_edge(static_cast<Vertex>(values[0]),
                    static_cast<Vertex>(values[1]));
      }
    }
    offset = end + 1;
  }
  if (!g) throw SyntaxError(0, "missing vertex count");
  return *g;
}

std::string format_edge_list(const Graph& g) {
  if (!g.empty() && g.vertices().back() != g.order() - 1) {
    fail(ErrorCode::kInvalidArgument,
         "edge-list output needs dense labels 0..n-1");
  }
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace cokeep
