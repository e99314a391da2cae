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

#ifndef COKEEP_COTREE_HPP_
#define COKEEP_COTREE_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cokeep/graph.hpp"

namespace cokeep {

enum class CotreeKind { kLeaf, kUnion, kJoin };

// Canonical cotree of a cograph.
//
// Every internal node is a union or a join with at least two children, no
// child repeats its parent's operation, and children are ordered by
// descending order with ties broken by smallest contained label. The first
// child of a join root is therefore the primary cocomponent.
class Cotree {
 public:
  static Cotree leaf(Vertex label);
  // Flattens nested unions, sorts, and collapses a single part to itself.
  // Errors: kInvalidArgument on empty input or overlapping labels.
  static Cotree make_union(std::vector<Cotree> parts);
  static Cotree make_join(std::vector<Cotree> parts);

  CotreeKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == CotreeKind::kLeaf; }
  // Leaf label; kInvalidArgument for internal nodes.
  Vertex label() const;
  const std::vector<Cotree>& children() const { return children_; }
  int order() const { return order_; }
  Vertex min_label() const { return min_label_; }
  VertexSet leaves() const;

  // Cotree of the complement graph (unions and joins swapped).
  Cotree complement() const;

  bool operator==(const Cotree& other) const = default;

 private:
  Cotree() = default;
  static Cotree combine(CotreeKind kind, std::vector<Cotree> parts);

  CotreeKind kind_ = CotreeKind::kLeaf;
  Vertex label_ = 0;
  std::vector<Cotree> children_;
  int order_ = 1;
  Vertex min_label_ = 0;
};

// Either a cotree or an ordered induced-P4 witness (a-b-c-d).
struct RecognitionResult {
  std::optional<Cotree> cotree;
  std::optional<std::array<Vertex, 4>> witness;

  bool is_cograph() const { return cotree.has_value(); }
};

// Recognizes a cograph by recursive component / co-component splitting.
// Errors: kEmptySet for the empty graph.
RecognitionResult cotree_from_graph(const Graph& g);
// As above but throws NotACographError on failure.
Cotree require_cotree(const Graph& g);

Graph materialize(const Cotree& ct);

// Cocomponents G_1..G_t of a nontrivial connected cograph (the join root's
// children), or the whole tree when the root is a leaf or a union.
std::vector<Cotree> cocomponents(const Cotree& ct);
int primary_order(const Cotree& ct);      // n'_G
int cocomponent_count(const Cotree& ct);  // t_G

// Degree of every vertex, read off the join ancestors.
std::map<Vertex, int> cotree_degrees(const Cotree& ct);

// Expression grammar:
//   expr := term | expr "+" term     join
//   term := atom | term "|" atom     union, binds tighter than "+"
//   atom := "K" INT | "(" expr ")"   Kn is the complete graph on n vertices
// Leaves receive fresh labels 0, 1, ... from left to right.
// Errors: SyntaxError, kArityError (K0).
Cotree parse_expression(std::string_view text);
std::string format_expression(const Cotree& ct);

}  // namespace cokeep

#endif  // COKEEP_COTREE_HPP_
