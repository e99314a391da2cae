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

#include <string>

#include "cokeep/cokeep.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

// `text` is read after the call has filled it.
Json take(cokeep_status status, char** text) {
  EXPECT_EQ(status, COKEEP_OK) << cokeep_last_error_message();
  Json j = *text == nullptr ? Json() : Json::parse(*text);
  cokeep_string_free(*text);
  *text = nullptr;
  return j;
}

TEST(CApiTest, StatusNamesAndExitCodes) {
  EXPECT_STREQ(cokeep_status_name(COKEEP_OK), "Ok");
  EXPECT_STREQ(cokeep_status_name(COKEEP_BOUND_VIOLATED), "BoundViolated");
  EXPECT_STREQ(cokeep_status_name(COKEEP_NOT_A_COGRAPH), "NotACograph");
  EXPECT_STREQ(cokeep_status_name(COKEEP_POSTCONDITION_FAILED), "PostconditionFailed");
  EXPECT_STREQ(cokeep_status_name(COKEEP_INTERNAL_ERROR), "InternalError");
  EXPECT_EQ(cokeep_status_exit_code(COKEEP_OK), 0);
  EXPECT_EQ(cokeep_status_exit_code(COKEEP_INVALID_ARGUMENT), 1);
  EXPECT_EQ(cokeep_status_exit_code(COKEEP_IO_ERROR), 2);
  EXPECT_EQ(cokeep_status_exit_code(COKEEP_NOT_A_COGRAPH), 3);
  EXPECT_EQ(cokeep_status_exit_code(COKEEP_BOUND_VIOLATED), 3);
  EXPECT_EQ(cokeep_status_exit_code(COKEEP_POSTCONDITION_FAILED), 4);
}

TEST(CApiTest, GraphLifecycle) {
  cokeep_graph* g = nullptr;
  ASSERT_EQ(cokeep_graph_parse_expression("(K1|K1)+(K1|K1)", &g), COKEEP_OK);
  EXPECT_EQ(cokeep_graph_order(g), 4);
  EXPECT_EQ(cokeep_graph_edge_count(g), 4u);
  char* text = nullptr;
  ASSERT_EQ(cokeep_graph_format(g, &text), COKEEP_OK);
  cokeep_graph* h = nullptr;
  ASSERT_EQ(cokeep_graph_parse_edge_list(text, &h), COKEEP_OK);
  EXPECT_EQ(cokeep_graph_edge_count(h), 4u);
  cokeep_string_free(text);
  cokeep_graph_free(h);
  cokeep_graph_free(g);
  cokeep_graph_free(nullptr);
  EXPECT_EQ(cokeep_graph_order(nullptr), 0);
}

TEST(CApiTest, FromEdges) {
  const int pairs[] = {0, 1, 1, 2, 2, 3};
  cokeep_graph* g = nullptr;
  ASSERT_EQ(cokeep_graph_from_edges(4, pairs, 3, &g), COKEEP_OK);
  char* out = nullptr;
  Json r = take(cokeep_recognize(g, &out), &out);
  EXPECT_FALSE(r["cograph"].get<bool>());
  EXPECT_EQ(r["witness"].size(), 4u);
  cokeep_graph_free(g);
  const int bad[] = {0, 9};
  EXPECT_EQ(cokeep_graph_from_edges(2, bad, 1, &g), COKEEP_UNKNOWN_VERTEX);
}

TEST(CApiTest, Analyze) {
  cokeep_graph* g = nullptr;
  ASSERT_EQ(cokeep_graph_parse_expression("(K1|K1)+(K1|K1)", &g), COKEEP_OK);
  char* out = nullptr;
  Json r = take(cokeep_analyze(g, &out), &out);
  EXPECT_EQ(r["kappa"], 2);
  EXPECT_EQ(r["super_edge_connected"], false);
  const char* keys[] = {"n", "n_prime", "t", "delta", "Delta", "kappa", "lambda",
                        "connected", "maximally_connected", "maximally_edge_connected",
                        "super_edge_connected", "ideally_connected", "dirac"};
  for (const char* key : keys) EXPECT_TRUE(r.contains(key)) << key;
  cokeep_graph_free(g);
}

TEST(CApiTest, ErrorsCarryDetails) {
  cokeep_graph* g = nullptr;
  EXPECT_EQ(cokeep_graph_parse_expression("K1+", &g), COKEEP_SYNTAX_ERROR);
  EXPECT_EQ(g, nullptr);
  Json err = Json::parse(cokeep_last_error_json());
  EXPECT_EQ(err["error"], "SyntaxError");
  EXPECT_TRUE(err.contains("position"));
  EXPECT_EQ(cokeep_graph_parse_expression("K0", &g), COKEEP_ARITY_ERROR);
  EXPECT_EQ(cokeep_graph_parse_expression(nullptr, &g), COKEEP_INVALID_ARGUMENT);

  ASSERT_EQ(cokeep_graph_parse_expression("(K1|K1)+(K1|K1)", &g), COKEEP_OK);
  cokeep_tree* t = nullptr;
  ASSERT_EQ(cokeep_tree_parse("path:2", &t), COKEEP_OK);
  char* out = nullptr;
  EXPECT_EQ(cokeep_embed(g, "th1", t, nullptr, 2, &out), COKEEP_BOUND_VIOLATED);
  EXPECT_EQ(out, nullptr);
  err = Json::parse(cokeep_last_error_json());
  EXPECT_EQ(err["error"], "BoundViolated");
  EXPECT_EQ(err["actual_delta"], 2);
  EXPECT_TRUE(err.contains("required_delta"));
  EXPECT_EQ(cokeep_embed(g, "nope", t, nullptr, 1, &out), COKEEP_INVALID_ARGUMENT);
  cokeep_tree_free(t);
  cokeep_graph_free(g);
  EXPECT_EQ(cokeep_tree_parse("ring:3", &t), COKEEP_BAD_SPEC);
}

TEST(CApiTest, EmbedReportsResidual) {
  cokeep_graph* g = nullptr;
  ASSERT_EQ(cokeep_graph_parse_expression("(K1|K1|K1)+K3", &g), COKEEP_OK);
  cokeep_tree* t = nullptr;
  ASSERT_EQ(cokeep_tree_parse("star:2", &t), COKEEP_OK);
  EXPECT_EQ(cokeep_tree_order(t), 2);
  char* out = nullptr;
  Json r = take(cokeep_embed(g, "th1", t, nullptr, 1, &out), &out);
  EXPECT_EQ(r["theorem"], "th1");
  EXPECT_EQ(r["mode"], "vertex");
  EXPECT_EQ(r["preserved"]["k"], 1);
  EXPECT_EQ(r["map"].size(), 2u);
  EXPECT_GE(r["residual"]["kappa"].get<int>(), 1);
  cokeep_graph* h = nullptr;
  ASSERT_EQ(cokeep_graph_parse_expression("(K2|K2)+(K1|K1|K1)", &h), COKEEP_OK);
  Json pair = take(cokeep_embed(h, "th4", t, t, 1, &out), &out);
  EXPECT_EQ(pair["trees"].size(), 2u);
  EXPECT_EQ(pair["residual"]["kappa"], 3);
  cokeep_tree_free(t);
  cokeep_graph_free(h);
  cokeep_graph_free(g);
}

TEST(CApiTest, Verify) {
  cokeep_graph* g = nullptr;
  ASSERT_EQ(cokeep_graph_parse_expression("(K2|K1)+(K1|K1)+K1", &g), COKEEP_OK);
  char* out = nullptr;
  Json r = take(cokeep_verify(g, nullptr, &out), &out);
  EXPECT_TRUE(r["agree"].get<bool>());
  for (const Json& c : r["checks"]) EXPECT_TRUE(c["agree"].get<bool>()) << c.dump();
  Json k = take(cokeep_verify(g, R"({"theorem":"th1","tree":"path:2","k":1})", &out), &out);
  EXPECT_TRUE(k["keeping"]["consistent"].get<bool>()) << k.dump();
  EXPECT_EQ(cokeep_verify(g, "{", &out), COKEEP_INVALID_ARGUMENT);
  cokeep_graph_free(g);
}

TEST(CApiTest, Generators) {
  char* out = nullptr;
  Json t = take(cokeep_gen_tight("th1case1", 2, 3, &out), &out);
  EXPECT_EQ(t["expression"], "K5");
  EXPECT_EQ(cokeep_gen_tight("th1case2", 3, 2, &out), COKEEP_PARAM_VIOLATION);
  Json a = take(cokeep_gen_random(8, 42, 0.5, &out), &out);
  Json b = take(cokeep_gen_random(8, 42, 0.5, &out), &out);
  EXPECT_EQ(a, b);
  cokeep_tree* tr = nullptr;
  ASSERT_EQ(cokeep_tree_random(6, 3, &tr), COKEEP_OK);
  EXPECT_EQ(cokeep_tree_order(tr), 6);
  cokeep_tree_free(tr);
}

}  // namespace
