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

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>
#include <string>

#include "cokeep/analysis.hpp"
#include "cokeep/connectivity.hpp"
#include "cokeep/embed.hpp"
#include "cokeep/error.hpp"
#include "cokeep/generators.hpp"
#include "test_support.hpp"

namespace cokeep {
namespace {

Graph expr(const char* text) { return materialize(parse_expression(text)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

bool valid(const Graph& g, const TreeShape& t, const Embedding& e) {
  return cokeep_test::embeds(g, t.order(), cokeep_test::tree_edges(t.graph()), e.map);
}

TEST(GreedyEmbedTest, SmallestChoices) {
  Graph k4 = Graph::complete(4);
  TreeShape p3 = named_tree("path:3");
  Embedding e = greedy_embed(k4, p3, k4.vertices());
  EXPECT_EQ(e.map, (std::vector<Vertex>{0, 1, 2}));
  Embedding f = greedy_embed(k4, p3, {1, 2, 3});
  EXPECT_EQ(f.map, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(is_valid_embedding(k4, p3, f));
}

TEST(GreedyEmbedTest, DegreePrecondition) {
  Graph star = materialize(parse_expression("(K1|K1|K1)+K1"));
  EXPECT_EQ(code_of([&] { (void)greedy_embed(star, named_tree("star:4"), star.vertices()); }),
            ErrorCode::kDegreeTooLow);
  EXPECT_EQ(code_of([&] { (void)greedy_embed(star, named_tree("path:2"), {}); }),
            ErrorCode::kEmptySet);
}

TEST(ExtendEmbeddingTest, AvoidsForbidden) {
  Graph k5 = Graph::complete(5);
  TreeShape p3 = named_tree("path:3");
  Embedding e = extend_embedding(k5, p3, {{1, 4}}, {0});
  EXPECT_TRUE(valid(k5, p3, e));
  EXPECT_EQ(e.map[1], 4);
  for (Vertex v : e.map) EXPECT_NE(v, 0);
  EXPECT_EQ(code_of([&] { (void)extend_embedding(k5, p3, {{0, 2}, {1, 2}}, {}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { (void)extend_embedding(k5, p3, {{0, 1}, {2, 3}}, {}); }),
            ErrorCode::kInvalidArgument);
}

TEST(EmbedAcrossTest, UsesBothSides) {
  Graph k23 = expr("(K1|K1)+(K1|K1|K1)");
  TreeShape star = named_tree("star:4");
  Embedding e = embed_across(k23, star, {2, 3, 4}, {0, 1});
  EXPECT_EQ(e.map, (std::vector<Vertex>{0, 2, 3, 4}));
  EXPECT_TRUE(valid(k23, star, e));
  EXPECT_EQ(code_of([&] { (void)embed_across(k23, star, {2, 3}, {0, 1}); }),
            ErrorCode::kPartTooSmall);
  Graph sparse = expr("K2|K2|K1");
  EXPECT_EQ(code_of([&] { (void)embed_across(sparse, named_tree("path:2"), {0}, {2}); }),
            ErrorCode::kMissingCrossEdge);
}

TEST(EmbeddingTest, ResidualModes) {
  Graph k4 = Graph::complete(4);
  TreeShape p2 = named_tree("path:2");
  Embedding e{{1, 3}, DeleteMode::kVertex, Property::kKConnected, 1};
  EXPECT_EQ(e.residual(k4, p2).vertices(), (VertexSet{0, 2}));
  e.mode = DeleteMode::kEdge;
  Graph r = e.residual(k4, p2);
  EXPECT_EQ(r.order(), 4);
  EXPECT_FALSE(r.has_edge(1, 3));
  EXPECT_FALSE(is_valid_embedding(k4, p2, Embedding{{1, 1}}));
  EXPECT_FALSE(is_valid_embedding(expr("K1|K1"), p2, Embedding{{0, 1}}));
}

TEST(TheoremNamesTest, RoundTrip) {
  for (Theorem th : {Theorem::kTh1, Theorem::kTh2, Theorem::kMaxCon, Theorem::kTh3,
                     Theorem::kTh4, Theorem::kTh6, Theorem::kSuperKeep, Theorem::kTh5}) {
    EXPECT_EQ(parse_theorem(theorem_name(th)), th);
  }
  EXPECT_EQ(code_of([] { (void)parse_theorem("th9"); }), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(uses_two_trees(Theorem::kTh2));
  EXPECT_TRUE(uses_two_trees(Theorem::kTh4));
  EXPECT_FALSE(uses_two_trees(Theorem::kTh5));
  EXPECT_EQ(theorem_mode(Theorem::kTh3), DeleteMode::kEdge);
  EXPECT_EQ(theorem_mode(Theorem::kTh6), DeleteMode::kVertex);
}

TEST(PreconditionTest, ReportsSpecificErrors) {
  TreeShape p2 = named_tree("path:2");
  TreeShape p3 = named_tree("path:3");
  Graph c4 = expr("(K1|K1)+(K1|K1)");
  EXPECT_EQ(code_of([&] { (void)keep_vertex_connectivity(expr("K2|K2"), p2, 1); }),
            ErrorCode::kNotKConnected);
  EXPECT_EQ(code_of([&] { (void)keep_vertex_connectivity(c4, p2, 0); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { (void)keep_vertex_connectivity(c4, p2, 2); }),
            ErrorCode::kBoundViolated);
  EXPECT_EQ(code_of([&] { (void)keep_vertex_connectivity_two(Graph(1), named_tree("path:1"),
                                                             named_tree("path:1")); }),
            ErrorCode::kBoundViolated);
  EXPECT_EQ(code_of([&] { (void)keep_vertex_connectivity_two(expr("K3|K3"), p2, p2); }),
            ErrorCode::kNotConnected);
  EXPECT_EQ(code_of([&] { (void)keep_vertex_connectivity_two(Graph::complete(6), p2, p3); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { (void)keep_maximal_connectedness(expr("K2|K2"), p2); }),
            ErrorCode::kNotMaximallyConnected);
  EXPECT_EQ(code_of([&] { (void)keep_maximal_connectedness(Graph::complete(3), p3); }),
            ErrorCode::kIsKm);
  EXPECT_EQ(code_of([&] { (void)keep_maximal_connectedness(c4, named_tree("path:4")); }),
            ErrorCode::kDegreeTooLow);
  EXPECT_EQ(code_of([&] { (void)keep_super_edge_connectivity(c4, p2); }),
            ErrorCode::kNotSuper);
  EXPECT_EQ(code_of([&] { (void)keep_edge_connectivity_vertex_delete(expr("K2|K1"), p2, 1); }),
            ErrorCode::kNotKEdgeConnected);
  EXPECT_EQ(code_of([&] { (void)keep_connectivity_edge_delete(c4, p3, 3); }),
            ErrorCode::kNotKConnected);
  EXPECT_EQ(code_of([&] { (void)keep_edge_connectivity_edge_delete(c4, p3, 3); }),
            ErrorCode::kNotKEdgeConnected);
}

TEST(PreconditionTest, BoundDetails) {
  try {
    (void)keep_vertex_connectivity(expr("(K1|K1)+(K1|K1)"), named_tree("path:2"), 2);
    ADD_FAILURE();
  } catch (const BoundViolatedError& e) {
    EXPECT_EQ(e.actual_degree(), 2);
    EXPECT_GT(e.required_degree(), 2);
    EXPECT_EQ(e.case_label().rfind("th1 case ", 0), 0u);
  }
}

TEST(Th1Test, SpecExample) {
  Graph g = expr("(K1|K1|K1)+K3");
  TreeShape t = named_tree("star:2");
  Embedding e = keep_vertex_connectivity(g, t, 1);
  EXPECT_TRUE(valid(g, t, e));
  EXPECT_EQ(e.k, 1);
  EXPECT_EQ(e.preserved, Property::kKConnected);
  EXPECT_TRUE(is_k_connected(e.residual(g, t), 1));
}

// Every case of the four-way split is reached and each succeeds.
TEST(Th1Test, AllCasesReached) {
  std::set<std::string> labels;
  std::mt19937_64 rng(41);
  for (int i = 0; i < 4000 && labels.size() < 4; ++i) {
    int n = 3 + static_cast<int>(rng() % 14);
    Cotree ct = random_cotree(n, rng(), 0.9);
    int k = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 6);
    TreeShape t = random_tree(m, rng());
    if (kappa_cograph(ct) < k) continue;
    Bound b = required_bound(Theorem::kTh1, ct, t, k);
    if (min_degree(ct) < b.required) continue;
    Graph g = materialize(ct);
    Embedding e = keep_vertex_connectivity(g, t, k);
    ASSERT_TRUE(valid(g, t, e)) << format_expression(ct);
    ASSERT_TRUE(is_k_connected(e.residual(g, t), k)) << format_expression(ct);
    labels.insert(b.case_label);
  }
  EXPECT_EQ(labels.size(), 4u);
}

TEST(Th1Test, BoundNeverExceedsMaderBound) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Cotree ct = random_cotree(2 + static_cast<int>(seed % 14), seed, 0.8);
    for (int k = 1; k <= 4; ++k) {
      for (int m = 1; m <= 5; ++m) {
        if (kappa_cograph(ct) < k) continue;
        TreeShape t = named_tree("path:" + std::to_string(m));
        EXPECT_LE(required_bound(Theorem::kTh1, ct, t, k).required, 3 * k / 2 + m - 1);
      }
    }
  }
}

TEST(Th2Test, TwoDisjointTreesKeepKappa) {
  Graph g = expr("(K4|K4)+K2");  // kappa 2, delta 5
  TreeShape p3 = named_tree("path:3");
  TreeShape s3 = named_tree("star:3");
  DisjointPair p = keep_vertex_connectivity_two(g, p3, s3);
  EXPECT_TRUE(valid(g, p3, p.first));
  EXPECT_TRUE(valid(g, s3, p.second));
  EXPECT_TRUE(set_intersection(p.first.image(), p.second.image()).empty());
  Graph r = g.delete_vertices(set_union(p.first.image(), p.second.image()));
  EXPECT_EQ(vertex_connectivity_flow(r), 2);
}

TEST(Th4Test, EdgeDisjointTreesKeepKappa) {
  Graph g = expr("(K2|K2)+(K1|K1|K1)");
  TreeShape p2 = named_tree("path:2");
  std::vector<Embedding> trees = run_theorem(Theorem::kTh4, g, p2, p2, 1);
  ASSERT_EQ(trees.size(), 2u);
  Graph r = combined_residual(g, {p2, p2}, trees);
  EXPECT_EQ(vertex_connectivity_flow(r), vertex_connectivity_flow(g));
  EXPECT_EQ(trees[0].mode, DeleteMode::kEdge);
}

TEST(MaxConTest, KeepsMaximalConnectedness) {
  for (const char* text : {"(K1|K1)+K2", "(K1|K2|K3)+K3", "(K1|K1|K1)+(K1|K1|K1)", "K5"}) {
    Graph g = expr(text);
    for (int m = 1; m <= g.min_degree() + 1; ++m) {
      TreeShape t = named_tree("path:" + std::to_string(m));
      if (g.is_complete() && g.order() == m) continue;
      Embedding e = keep_maximal_connectedness(g, t);
      Graph r = e.residual(g, t);
      EXPECT_TRUE(valid(g, t, e)) << text;
      EXPECT_EQ(vertex_connectivity_flow(r), r.min_degree()) << text << " m=" << m;
    }
  }
}

TEST(SuperKeepTest, KeepsSuperEdgeConnectedness) {
  for (const char* text : {"K6", "(K2|K1)+(K2|K1)+K2", "(K1|K1|K1)+(K2|K2)+K1"}) {
    Graph g = expr(text);
    for (int m = 1; m + 2 <= g.min_degree(); ++m) {
      for (const char* kind : {"path:", "star:"}) {
        TreeShape t = named_tree(kind + std::to_string(m));
        Embedding e = keep_super_edge_connectivity(g, t);
        EXPECT_TRUE(valid(g, t, e));
        Graph r = e.residual(g, t);
        EXPECT_TRUE(cokeep_test::brute_super(cokeep_test::to_small(r))) << text;
      }
    }
  }
}

TEST(Th5Test, WeakerBoundWindow) {
  // path:5 has Delta + beta - 1 = 3 < m - 1 = 4.
  TreeShape t = named_tree("path:5");
  Graph g = expr("(K2|K2|K1)+(K2|K1)+K1");
  Cotree ct = require_cotree(g);
  ASSERT_LT(required_bound(Theorem::kTh5, ct, t, 1).required, 1 + 5 - 1);
  ASSERT_GE(g.min_degree(), required_bound(Theorem::kTh5, ct, t, 1).required);
  Embedding e = keep_edge_connectivity_edge_delete(g, t, 1);
  EXPECT_TRUE(valid(g, t, e));
  EXPECT_TRUE(is_k_edge_connected(e.residual(g, t), 1));
}

TEST(Th5Test, SingleVertexTree) {
  Graph g = expr("K2");
  TreeShape t = named_tree("path:1");
  Embedding e = keep_edge_connectivity_edge_delete(g, t, 1);
  EXPECT_EQ(e.map.size(), 1u);
  EXPECT_EQ(e.residual(g, t), g);
}

// Randomized sweep across all constructions with larger trees than the
// acceptance grid.
TEST(ConstructionSweep, LargerTrees) {
  std::mt19937_64 rng(43);
  int runs = 0;
  for (int i = 0; i < 3000; ++i) {
    Cotree ct = random_cotree(4 + static_cast<int>(rng() % 13), rng(), 0.9);
    Graph g = materialize(ct);
    int m = 1 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % 3);
    TreeShape t1 = random_tree(m, rng());
    TreeShape t2 = random_tree(m, rng());
    for (Theorem th : {Theorem::kTh1, Theorem::kTh2, Theorem::kMaxCon, Theorem::kTh3,
                       Theorem::kTh4, Theorem::kTh6, Theorem::kSuperKeep, Theorem::kTh5}) {
      std::vector<Embedding> trees;
      try {
        trees = run_theorem(th, g, t1, t2, k);
      } catch (const Error& e) {
        ASSERT_NE(e.code(), ErrorCode::kPostconditionFailed)
            << theorem_name(th) << " on " << format_expression(ct) << ": " << e.what();
        continue;
      }
      ++runs;
      ASSERT_TRUE(valid(g, t1, trees[0]));
      if (trees.size() == 2) {
        ASSERT_TRUE(valid(g, t2, trees[1]));
      }
      std::vector<TreeShape> shapes{t1};
      if (trees.size() == 2) shapes.push_back(t2);
      Graph r = combined_residual(g, shapes, trees);
      cokeep_test::Small s = cokeep_test::to_small(r);
      switch (theorem_property(th)) {
        case Property::kKConnected:
          EXPECT_TRUE(is_k_connected(r, k));
          break;
        case Property::kExactKappa:
          EXPECT_EQ(vertex_connectivity_flow(r), kappa_cograph(ct));
          break;
        case Property::kKEdgeConnected:
          EXPECT_TRUE(is_k_edge_connected(r, k));
          break;
        case Property::kMaximallyConnected:
          EXPECT_EQ(vertex_connectivity_flow(r), r.min_degree());
          break;
        case Property::kSuperEdgeConnected:
          if (s.n <= 14 && cokeep_test::connected_within(s, s.all())) {
            EXPECT_TRUE(cokeep_test::brute_super(s)) << format_expression(ct);
          }
          break;
        case Property::kNone:
          break;
      }
    }
  }
  EXPECT_GT(runs, 2000);
}

TEST(DeterminismTest, SameInputSameOutput) {
  Graph g = expr("(K2|K2|K1)+(K3|K1)+K2");
  TreeShape t = named_tree("prufer:1,1,3");
  for (Theorem th : {Theorem::kTh1, Theorem::kTh3, Theorem::kTh5, Theorem::kTh6}) {
    EXPECT_EQ(run_theorem(th, g, t, t, 1), run_theorem(th, g, t, t, 1));
  }
}

}  // namespace
}  // namespace cokeep
