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

#include "cokeep/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <random>
#include <utility>

#include "cokeep/analysis.hpp"

namespace cokeep {
namespace {

constexpr std::array<std::pair<TightKind, std::string_view>, 7> kKindNames{{
    {TightKind::kTh1Case1, "th1case1"},
    {TightKind::kTh1Case2, "th1case2"},
    {TightKind::kTh1Case3, "th1case3"},
    {TightKind::kTh1Case4, "th1case4"},
    {TightKind::kTh2Tight, "th2tight"},
    {TightKind::kMaxEdgeKeepTight, "maxedgekeeptight"},
    {TightKind::kSuperKeepTight, "superkeeptight"},
}};

// Hands out fresh leaf labels in creation order.
class Builder {
 public:
  Cotree clique(int n) {
    std::vector<Cotree> leaves;
    for (int i = 0; i < n; ++i) leaves.push_back(Cotree::leaf(next_++));
    return Cotree::make_join(std::move(leaves));
  }
  Cotree independent(int n) {
    std::vector<Cotree> leaves;
    for (int i = 0; i < n; ++i) leaves.push_back(Cotree::leaf(next_++));
    return Cotree::make_union(std::move(leaves));
  }

 private:
  Vertex next_ = 0;
};

void require(bool ok, std::string_view kind, const std::string& condition) {
  if (!ok) {
    fail(ErrorCode::kParamViolation,
         std::string(kind) + " requires " + condition);
  }
}

}  // namespace

std::string_view tight_kind_name(TightKind kind) {
  for (const auto& [value, name] : kKindNames) {
    if (value == kind) return name;
  }
  return "th1case1";
}

TightKind parse_tight_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& [value, text] : kKindNames) {
    if (text == lower) return value;
  }
  fail(ErrorCode::kBadSpec, "unknown tight kind '" + std::string(name) + "'");
}

TightExample tight_example(TightKind kind, int k, int m) {
  const std::string_view name = tight_kind_name(kind);
  Builder b;
  std::vector<Cotree> parts;
  int kappa = 0;
  int delta = 0;
  switch (kind) {
    case TightKind::kTh1Case1: {
      require(k >= 1 && m >= 1, name, "k >= 1 and m >= 1");
      const int n = k + m - (k == 1 ? 1 : 0);
      parts.push_back(b.clique(n));
      kappa = delta = n - 1;
      break;
    }
    case TightKind::kTh1Case2: {
      require(m >= 1, name, "m >= 1");
      require(k >= 4 && m < k / 2, name, "m < floor(k/2) and k >= 4");
      for (int i = 0; i < 2; ++i) {
        Cotree a = b.clique(k / 2);
        Cotree c = b.clique((k + 1) / 2);
        parts.push_back(Cotree::make_union({a, c}));
      }
      const int apex = (m + 1) / 2 - 1;
      if (apex > 0) parts.push_back(b.clique(apex));
      kappa = k + (m + 1) / 2 - 1;
      delta = 3 * k / 2 + (m + 1) / 2 - 2;
      break;
    }
    case TightKind::kTh1Case3: {
      require(m >= 5 && m <= 2 * k && m % 4 == 1 && k % 2 == 0, name,
              "5 <= m <= 2k, m mod 4 = 1 and k even");
      const int side = k / 2 + (m - 1) / 4;
      for (int i = 0; i < 2; ++i) {
        Cotree a = b.clique(side);
        Cotree c = b.clique(side);
        parts.push_back(Cotree::make_union({a, c}));
      }
      kappa = k + (m - 1) / 2;
      delta = 3 * k / 2 + 3 * (m - 1) / 4 - 1;
      break;
    }
    case TightKind::kTh1Case4: {
      require(k >= 1 && m >= 2, name, "k >= 1 and m >= 2");
      require(k <= 2 * m - 3, name, "k <= 2m-3");
      std::vector<Cotree> h1;
      for (int i = 0; i < 3; ++i) h1.push_back(b.clique(m - 1));
      parts.push_back(Cotree::make_union(std::move(h1)));
      parts.push_back(b.clique(k));
      kappa = k;
      delta = k + m - 2;
      break;
    }
    case TightKind::kTh2Tight: {
      require(k >= 3 && k % 2 == 1, name, "k >= 3 and k odd");
      require(m >= 1 && m <= k / 2, name, "1 <= m <= floor(k/2)");
      Cotree a = b.clique(k / 2 + m);
      Cotree c = b.clique(k / 2 + m);
      parts.push_back(Cotree::make_union({a, c}));
      Cotree d = b.clique(k / 2);
      Cotree e = b.clique((k + 1) / 2);
      parts.push_back(Cotree::make_union({d, e}));
      kappa = k;
      delta = 3 * k / 2 + m - 1;
      break;
    }
    case TightKind::kMaxEdgeKeepTight: {
      require(m >= 2, name, "m >= 2");
      std::vector<Cotree> h;
      for (int i = 0; i < 3; ++i) h.push_back(b.clique(m - 1));
      parts.push_back(Cotree::make_union(std::move(h)));
      parts.push_back(b.clique(1));
      kappa = 1;
      delta = m - 1;
      break;
    }
    case TightKind::kSuperKeepTight: {
      require(m >= 2 && m % 2 == 0, name, "m even and m >= 2");
      std::vector<Cotree> halves;
      for (int i = 0; i < 2; ++i) {
        std::vector<Cotree> pairs;
        for (int j = 0; j < m / 2 + 1; ++j) pairs.push_back(b.independent(2));
        halves.push_back(Cotree::make_join(std::move(pairs)));
      }
      parts.push_back(Cotree::make_union(std::move(halves)));
      parts.push_back(b.clique(1));
      kappa = 1;
      delta = m + 1;
      break;
    }
  }
  Cotree ct = Cotree::make_join(std::move(parts));
  ensure(kappa_cograph(ct) == kappa, std::string(name) + " kappa mismatch");
  ensure(min_degree(ct) == delta, std::string(name) + " delta mismatch");
  return TightExample{kind, k, m, std::move(ct), kappa, delta};
}

namespace {

Cotree random_node(int n, bool join, std::mt19937_64& rng,
                   const std::vector<Vertex>& labels, std::size_t& next) {
  if (n == 1) return Cotree::leaf(labels[next++]);
  const int max_parts = std::min(n, 4);
  const int count = std::uniform_int_distribution<int>(2, max_parts)(rng);
  std::vector<int> cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(count - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Cotree> children;
  int prev = 0;
  cuts.push_back(n);
  for (int c : cuts) {
    children.push_back(random_node(c - prev, !join, rng, labels, next));
    prev = c;
  }
  return join ? Cotree::make_join(std::move(children))
              : Cotree::make_union(std::move(children));
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail(ErrorCode::kBadSpec, "bad number '" + std::string(text) + "' in '" +
                                  std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

TreeShape make_tree(int m, const std::vector<Edge>& edges) {
  if (m < 1) fail(ErrorCode::kBadSpec, "tree order must be at least 1");
  Graph g(m);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= m || e.u == e.v) {
      fail(ErrorCode::kBadSpec, "tree edge out of range");
    }
    if (g.has_edge(e.u, e.v)) fail(ErrorCode::kBadSpec, "repeated tree edge");
    g.add_edge(e.u, e.v);
  }
  return TreeShape(std::move(g));
}

}  // namespace

Cotree random_cotree(int n, std::uint64_t seed, double join_bias) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (!(join_bias >= 0.0 && join_bias <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, "join_bias must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);
  bool join = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < join_bias ||
              std::bernoulli_distribution(0.5)(rng);
  std::size_t next = 0;
  return random_node(n, join, rng, labels, next);
}

TreeShape tree_from_prufer(const std::vector<int>& sequence) {
  const int m = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(m), 1);
  for (int a : sequence) {
    if (a < 0 || a >= m) {
      fail(ErrorCode::kBadSpec, "Pruefer entry " + std::to_string(a) +
                                    " out of range 0.." + std::to_string(m - 1));
    }
    ++degree[static_cast<std::size_t>(a)];
  }
  std::vector<Edge> edges;
  for (int a : sequence) {
    for (int leaf = 0; leaf < m; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, a);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(a)];
        break;
      }
    }
  }
  std::vector<int> last;
  for (int v = 0; v < m; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return make_tree(m, edges);
}

TreeShape random_tree(int m, std::uint64_t seed) {
  if (m < 1) fail(ErrorCode::kBadSpec, "tree order must be at least 1");
  if (m == 1) return make_tree(1, {});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::vector<int> seq(static_cast<std::size_t>(m - 2));
  for (int& a : seq) a = pick(rng);
  return tree_from_prufer(seq);
}

TreeShape named_tree(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorCode::kBadSpec, "tree spec needs 'kind:args', got '" +
                                  std::string(spec) + "'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (kind == "path" || kind == "star") {
    const int m = parse_int(args, spec);
    if (m < 1) fail(ErrorCode::kBadSpec, "tree order must be at least 1");
    std::vector<Edge> edges;
    for (int i = 1; i < m; ++i) edges.emplace_back(kind == "path" ? i - 1 : 0, i);
    return make_tree(m, edges);
  }
  if (kind == "prufer") {
    std::vector<int> seq;
    for (std::string_view part : split(args, ',')) seq.push_back(parse_int(part, spec));
    return tree_from_prufer(seq);
  }
  if (kind == "edges") {
    std::vector<Edge> edges;
    int m = 1;
    for (std::string_view part : split(args, ',')) {
      const std::size_t dash = part.find('-');
      if (dash == std::string_view::npos) {
        fail(ErrorCode::kBadSpec, "edge '" + std::string(part) + "' needs u-v");
      }
      const int u = parse_int(part.substr(0, dash), spec);
      const int v = parse_int(part.substr(dash + 1), spec);
      if (u < 0 || v < 0) fail(ErrorCode::kBadSpec, "negative tree vertex");
      edges.emplace_back(u, v);
      m = std::max({m, u + 1, v + 1});
    }
    return make_tree(m, edges);
  }
  fail(ErrorCode::kBadSpec, "unknown tree kind '" + std::string(kind) + "'");
}

}  // namespace cokeep
