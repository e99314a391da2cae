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

#include "cokeep/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <utility>

namespace cokeep {

Cotree Cotree::leaf(Vertex label) {
  if (label < 0) fail(ErrorCode::kInvalidArgument, "negative leaf label");
  Cotree t;
  t.kind_ = CotreeKind::kLeaf;
  t.label_ = label;
  t.order_ = 1;
  t.min_label_ = label;
  return t;
}

Cotree Cotree::make_union(std::vector<Cotree> parts) {
  return combine(CotreeKind::kUnion, std::move(parts));
}

Cotree Cotree::make_join(std::vector<Cotree> parts) {
  return combine(CotreeKind::kJoin, std::move(parts));
}

Cotree Cotree::combine(CotreeKind kind, std::vector<Cotree> parts) {
  if (parts.empty()) {
    fail(ErrorCode::kInvalidArgument, "cotree operation without operands");
  }
  std::vector<Cotree> flat;
  for (Cotree& p : parts) {
    if (p.kind_ == kind) {
      for (Cotree& c : p.children_) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());

  std::sort(flat.begin(), flat.end(), [](const Cotree& a, const Cotree& b) {
    if (a.order_ != b.order_) return a.order_ > b.order_;
    return a.min_label_ < b.min_label_;
  });

  Cotree t;
  t.kind_ = kind;
  t.order_ = 0;
  t.min_label_ = std::numeric_limits<Vertex>::max();
  VertexSet seen;
  for (const Cotree& c : flat) {
    t.order_ += c.order_;
    t.min_label_ = std::min(t.min_label_, c.min_label_);
    VertexSet leaves = c.leaves();
    if (!set_intersection(seen, leaves).empty()) {
      fail(ErrorCode::kInvalidArgument, "cotree operands share a vertex");
    }
    seen = set_union(seen, leaves);
  }
  t.children_ = std::move(flat);
  return t;
}

Vertex Cotree::label() const {
  if (!is_leaf()) fail(ErrorCode::kInvalidArgument, "internal cotree node");
  return label_;
}

VertexSet Cotree::leaves() const {
  if (is_leaf()) return {label_};
  VertexSet out;
  for (const Cotree& c : children_) {
    VertexSet sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cotree Cotree::complement() const {
  if (is_leaf()) return *this;
  std::vector<Cotree> parts;
  parts.reserve(children_.size());
  for (const Cotree& c : children_) parts.push_back(c.complement());
  return kind_ == CotreeKind::kUnion ? make_join(std::move(parts))
                                     : make_union(std::move(parts));
}

namespace {

// Components of the complement of `h`, found without materializing it.
std::vector<VertexSet> co_components(const Graph& h) {
  std::vector<VertexSet> out;
  VertexSet unvisited = h.vertices();
  while (!unvisited.empty()) {
    VertexSet comp;
    std::deque<Vertex> queue{unvisited.front()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      VertexSet still;
      for (Vertex w : unvisited) {
        if (h.has_edge(u, w)) {
          still.push_back(w);
        } else {
          queue.push_back(w);
        }
      }
      unvisited = std::move(still);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Orders four vertices inducing P4 as a path, starting at the smaller end.
std::optional<std::array<Vertex, 4>> as_p4(const Graph& h,
                                           const std::array<Vertex, 4>& q) {
  int edges = 0;
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (h.has_edge(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  if (edges != 3) return std::nullopt;
  std::vector<int> ends;
  for (int i = 0; i < 4; ++i) {
    if (deg[i] == 1) ends.push_back(i);
    if (deg[i] == 0 || deg[i] == 3) return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;  // triangle plus isolated vertex
  std::array<Vertex, 4> path{};
  int prev = -1;
  int cur = q[ends[0]] < q[ends[1]] ? ends[0] : ends[1];
  for (int step = 0; step < 4; ++step) {
    path[step] = q[cur];
    for (int j = 0; j < 4; ++j) {
      if (j != cur && j != prev && h.has_edge(q[cur], q[j])) {
        prev = cur;
        cur = j;
        break;
      }
    }
  }
  return path;
}

std::array<Vertex, 4> find_p4(const Graph& h) {
  const VertexSet& v = h.vertices();
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          if (auto p = as_p4(h, {v[a], v[b], v[c], v[d]})) return *p;
        }
      }
    }
  }
  // A graph that is connected with a connected complement always has one.
  fail(ErrorCode::kPostconditionFailed, "recognition found no induced P4");
}

std::optional<Cotree> recognize(const Graph& h,
                                std::optional<std::array<Vertex, 4>>& witness) {
  if (h.order() == 1) return Cotree::leaf(h.vertices().front());
  std::vector<VertexSet> parts = h.components();
  CotreeKind kind = CotreeKind::kUnion;
  if (parts.size() == 1) {
    parts = co_components(h);
    kind = CotreeKind::kJoin;
    if (parts.size() == 1) {
      witness = find_p4(h);
      return std::nullopt;
    }
  }
  std::vector<Cotree> children;
  for (const VertexSet& part : parts) {
    auto sub = recognize(h.induced_subgraph(part), witness);
    if (!sub) return std::nullopt;
    children.push_back(std::move(*sub));
  }
  return kind == CotreeKind::kUnion ? Cotree::make_union(std::move(children))
                                    : Cotree::make_join(std::move(children));
}

}  // namespace

RecognitionResult cotree_from_graph(const Graph& g) {
  if (g.empty()) fail(ErrorCode::kEmptySet, "cannot recognize the empty graph");
  RecognitionResult result;
  result.cotree = recognize(g, result.witness);
  return result;
}

Cotree require_cotree(const Graph& g) {
  RecognitionResult r = cotree_from_graph(g);
  if (!r.cotree) throw NotACographError(*r.witness);
  return std::move(*r.cotree);
}

namespace {

void add_join_edges(const Cotree& ct, Graph& g) {
  if (ct.is_leaf()) return;
  for (const Cotree& c : ct.children()) add_join_edges(c, g);
  if (ct.kind() != CotreeKind::kJoin) return;
  std::vector<VertexSet> sides;
  for (const Cotree& c : ct.children()) sides.push_back(c.leaves());
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      for (Vertex a : sides[i]) {
        for (Vertex b : sides[j]) g.add_edge(a, b);
      }
    }
  }
}

void accumulate_degrees(const Cotree& ct, int inherited,
                        std::map<Vertex, int>& out) {
  if (ct.is_leaf()) {
    out[ct.label()] = inherited;
    return;
  }
  for (const Cotree& c : ct.children()) {
    int extra = ct.kind() == CotreeKind::kJoin ? ct.order() - c.order() : 0;
    accumulate_degrees(c, inherited + extra, out);
  }
}

}  // namespace

Graph materialize(const Cotree& ct) {
  Graph g(ct.leaves());
  add_join_edges(ct, g);
  return g;
}

std::vector<Cotree> cocomponents(const Cotree& ct) {
  if (ct.kind() == CotreeKind::kJoin) return ct.children();
  return {ct};
}

int primary_order(const Cotree& ct) {
  return ct.kind() == CotreeKind::kJoin ? ct.children().front().order()
                                        : ct.order();
}

int cocomponent_count(const Cotree& ct) {
  return ct.kind() == CotreeKind::kJoin
             ? static_cast<int>(ct.children().size())
             : 1;
}

std::map<Vertex, int> cotree_degrees(const Cotree& ct) {
  std::map<Vertex, int> out;
  accumulate_degrees(ct, 0, out);
  return out;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Cotree parse() {
    Cotree result = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character");
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Cotree parse_expr() {
    std::vector<Cotree> parts{parse_term()};
    while (accept('+')) parts.push_back(parse_term());
    return Cotree::make_join(std::move(parts));
  }

  Cotree parse_term() {
    std::vector<Cotree> parts{parse_atom()};
    while (accept('|')) parts.push_back(parse_atom());
    return Cotree::make_union(std::move(parts));
  }

  Cotree parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    if (accept('(')) {
      Cotree inner = parse_expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (!accept('K')) throw SyntaxError(pos_, "expected 'K' or '('");
    skip_space();
    std::size_t start = pos_;
    int count = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), count);
    if (ec == std::errc::result_out_of_range) {
      throw SyntaxError(start, "vertex count too large");
    }
    if (ec != std::errc() || (start < text_.size() && text_[start] == '-')) {
      throw SyntaxError(start, "expected a vertex count after 'K'");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (count < 1) {
      fail(ErrorCode::kArityError,
           "K" + std::to_string(count) + " at position " +
               std::to_string(start) + " has no vertices");
    }
    std::vector<Cotree> leaves;
    leaves.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) leaves.push_back(Cotree::leaf(next_label_++));
    return Cotree::make_join(std::move(leaves));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Vertex next_label_ = 0;
};

bool all_leaves(const Cotree& ct) {
  return std::all_of(ct.children().begin(), ct.children().end(),
                     [](const Cotree& c) { return c.is_leaf(); });
}

std::string format_node(const Cotree& ct, bool nested) {
  if (ct.is_leaf()) return "K1";
  if (ct.kind() == CotreeKind::kJoin && all_leaves(ct)) {
    return "K" + std::to_string(ct.order());
  }
  std::string out;
  const char* sep = ct.kind() == CotreeKind::kJoin ? "+" : "|";
  int leaf_count = 0;
  for (const Cotree& c : ct.children()) {
    if (ct.kind() == CotreeKind::kJoin && c.is_leaf()) {
      ++leaf_count;
      continue;
    }
    if (!out.empty()) out += sep;
    out += format_node(c, true);
  }
  // Leaves of a join are grouped into one complete-graph atom.
  if (leaf_count > 0) {
    out += sep;
    out += "K" + std::to_string(leaf_count);
  }
  return nested ? "(" + out + ")" : out;
}

}  // namespace

Cotree parse_expression(std::string_view text) {
  return ExpressionParser(text).parse();
}

std::string format_expression(const Cotree& ct) { return format_node(ct, false); }

}  // namespace cokeep
