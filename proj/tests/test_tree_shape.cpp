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

#include <set>
#include <string>

#include "cokeep/generators.hpp"
#include "cokeep/tree_shape.hpp"
#include "test_support.hpp"

namespace cokeep {
namespace {

TEST(TreeShapeTest, NamedShapes) {
  TreeShape star = named_tree("star:5");
  EXPECT_EQ(star.order(), 5);
  EXPECT_EQ(star.max_degree(), 4);
  EXPECT_EQ(star.beta(), 1);
  EXPECT_EQ(star.v2(), (VertexSet{0}));
  TreeShape path = named_tree("path:4");
  EXPECT_EQ(path.v1(), (VertexSet{0, 2}));
  EXPECT_EQ(path.v2(), (VertexSet{1, 3}));
  EXPECT_EQ(path.beta(), 2);
  EXPECT_EQ(named_tree("path:1").order(), 1);
  TreeShape spider = named_tree("edges:0-1,0-2,2-3");
  EXPECT_EQ(spider.graph().edge_count(), 3u);
  EXPECT_EQ(spider.smallest_leaf(), 1);
}

TEST(TreeShapeTest, BadSpecs) {
  for (const char* spec : {"path", "path:0", "ring:3", "edges:0-1,1-2,2-0",
                           "edges:0-1,2-3", "edges:0-2", "prufer:9", "star:x"}) {
    try {
      (void)named_tree(spec);
      ADD_FAILURE() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadSpec) << spec;
    }
  }
}

TEST(TreeShapeTest, Prufer) {
  TreeShape t = tree_from_prufer({3, 3, 3});
  EXPECT_EQ(t.order(), 5);
  EXPECT_EQ(t.graph().degree(3), 4);
  EXPECT_EQ(named_tree("prufer:3,3,3"), t);
}

TEST(TreeShapeTest, RandomTreesAreTrees) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TreeShape t = random_tree(7, seed);
    EXPECT_EQ(t.order(), 7);
    EXPECT_EQ(t.graph().edge_count(), 6u);
    EXPECT_TRUE(t.graph().is_connected());
    EXPECT_GE(t.v1().size(), t.v2().size());
    for (const Edge& e : t.graph().edges()) EXPECT_NE(t.in_v1(e.u), t.in_v1(e.v));
    seen.insert(format_edge_list(t.graph()));
    EXPECT_EQ(random_tree(7, seed), t);
  }
  EXPECT_GT(seen.size(), 150u);
}

TEST(TreeShapeTest, BfsPrefixIsSubtree) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TreeShape t = random_tree(8, seed);
    for (int count = 1; count <= 8; ++count) {
      VertexSet prefix = make_vertex_set(t.bfs_prefix(t.smallest_leaf(), count));
      ASSERT_EQ(static_cast<int>(prefix.size()), count);
      EXPECT_TRUE(contains(prefix, t.smallest_leaf()));
      EXPECT_TRUE(t.graph().induced_subgraph(prefix).is_connected());
    }
  }
}

}  // namespace
}  // namespace cokeep
