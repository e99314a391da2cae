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

#include "cokeep/cokeep.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "cokeep/cotree.hpp"
#include "cokeep/embed.hpp"
#include "cokeep/error.hpp"
#include "cokeep/generators.hpp"
#include "cokeep/graph.hpp"
#include "cokeep/tree_shape.hpp"
#include "serialize.hpp"

struct cokeep_graph {
  cokeep::Graph graph;
};

struct cokeep_tree {
  cokeep::TreeShape shape;
};

namespace {

using cokeep::ErrorCode;
using cokeep::serialize::Json;

thread_local std::string last_message;
thread_local std::string last_json;

cokeep_status to_status(ErrorCode code) {
  return static_cast<cokeep_status>(static_cast<int>(code) + 1);
}

void clear_error() {
  last_message.clear();
  last_json.clear();
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const Json& j) { return dup_string(j.dump()); }

template <typename F>
cokeep_status guarded(F&& body) {
  clear_error();
  try {
    body();
    return COKEEP_OK;
  } catch (const cokeep::Error& e) {
    last_message = e.what();
    last_json = cokeep::serialize::error(e).dump();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_message = "out of memory";
  } catch (const std::exception& e) {
    last_message = e.what();
  } catch (...) {
    last_message = "unknown failure";
  }
  last_json = Json{{"error", "InternalError"}, {"message", last_message}}.dump();
  return COKEEP_INTERNAL_ERROR;
}

void require(bool condition, const char* what) {
  if (!condition) cokeep::fail(ErrorCode::kInvalidArgument, what);
}

}  // namespace

extern "C" {

const char* cokeep_status_name(cokeep_status status) {
  static thread_local std::string name;
  if (status == COKEEP_OK) return "Ok";
  if (status == COKEEP_INTERNAL_ERROR) return "InternalError";
  if (status < COKEEP_OK || status > COKEEP_INTERNAL_ERROR) return "Unknown";
  name = std::string(
      cokeep::error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1)));
  return name.c_str();
}

int cokeep_status_exit_code(cokeep_status status) {
  switch (status) {
    case COKEEP_OK:
      return 0;
    case COKEEP_INVALID_ARGUMENT:
    case COKEEP_BAD_SPEC:
    case COKEEP_SYNTAX_ERROR:
    case COKEEP_ARITY_ERROR:
      return 1;
    case COKEEP_IO_ERROR:
      return 2;
    case COKEEP_POSTCONDITION_FAILED:
    case COKEEP_INTERNAL_ERROR:
      return 4;
    default:
      return 3;
  }
}

const char* cokeep_last_error_message(void) { return last_message.c_str(); }
const char* cokeep_last_error_json(void) { return last_json.c_str(); }

void cokeep_string_free(char* s) { std::free(s); }

cokeep_status cokeep_graph_parse_edge_list(const char* text, cokeep_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new cokeep_graph{cokeep::parse_edge_list(text)};
  });
}

cokeep_status cokeep_graph_parse_expression(const char* text,
                                            cokeep_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new cokeep_graph{cokeep::materialize(cokeep::parse_expression(text))};
  });
}

cokeep_status cokeep_graph_from_edges(int n, const int* pairs,
                                      size_t edge_count, cokeep_graph** out) {
  return guarded([&] {
    require(out != nullptr && n >= 0, "invalid argument");
    require(pairs != nullptr || edge_count == 0, "null edge array");
    cokeep::Graph g(n);
    for (size_t i = 0; i < edge_count; ++i) g.add_edge(pairs[2 * i], pairs[2 * i + 1]);
    *out = new cokeep_graph{std::move(g)};
  });
}

void cokeep_graph_free(cokeep_graph* g) { delete g; }

int cokeep_graph_order(const cokeep_graph* g) {
  return g == nullptr ? 0 : g->graph.order();
}

size_t cokeep_graph_edge_count(const cokeep_graph* g) {
  return g == nullptr ? 0 : g->graph.edge_count();
}

cokeep_status cokeep_graph_format(const cokeep_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup_string(cokeep::format_edge_list(g->graph));
  });
}

cokeep_status cokeep_recognize(const cokeep_graph* g, char** json) {
  return guarded([&] {
    require(g != nullptr && json != nullptr, "null argument");
    *json = dump(cokeep::serialize::recognition(g->graph));
  });
}

cokeep_status cokeep_analyze(const cokeep_graph* g, char** json) {
  return guarded([&] {
    require(g != nullptr && json != nullptr, "null argument");
    *json = dump(cokeep::serialize::analysis(cokeep::analyze(g->graph)));
  });
}

cokeep_status cokeep_tree_parse(const char* spec, cokeep_tree** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = new cokeep_tree{cokeep::named_tree(spec)};
  });
}

cokeep_status cokeep_tree_random(int m, uint64_t seed, cokeep_tree** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new cokeep_tree{cokeep::random_tree(m, seed)};
  });
}

void cokeep_tree_free(cokeep_tree* t) { delete t; }

int cokeep_tree_order(const cokeep_tree* t) {
  return t == nullptr ? 0 : t->shape.order();
}

cokeep_status cokeep_embed(const cokeep_graph* g, const char* theorem,
                           const cokeep_tree* tree, const cokeep_tree* tree2,
                           int k, char** json) {
  return guarded([&] {
    require(g != nullptr && theorem != nullptr && tree != nullptr &&
                json != nullptr,
            "null argument");
    cokeep::Theorem th = cokeep::parse_theorem(theorem);
    const cokeep::TreeShape& t1 = tree->shape;
    const cokeep::TreeShape& t2 = tree2 != nullptr ? tree2->shape : t1;
    std::vector<cokeep::Embedding> trees = cokeep::run_theorem(th, g->graph, t1, t2, k);
    std::vector<cokeep::TreeShape> shapes{t1};
    if (trees.size() == 2) shapes.push_back(t2);
    *json = dump(cokeep::serialize::embedding(th, g->graph, shapes, trees));
  });
}

cokeep_status cokeep_verify(const cokeep_graph* g, const char* options_json,
                            char** json) {
  return guarded([&] {
    require(g != nullptr && json != nullptr, "null argument");
    cokeep::serialize::VerifyOptions o;
    if (options_json != nullptr) {
      o = cokeep::serialize::parse_verify_options(options_json);
    }
    *json = dump(cokeep::serialize::verify(g->graph, o));
  });
}

cokeep_status cokeep_gen_tight(const char* kind, int k, int m, char** json) {
  return guarded([&] {
    require(kind != nullptr && json != nullptr, "null argument");
    *json = dump(cokeep::serialize::tight(
        cokeep::tight_example(cokeep::parse_tight_kind(kind), k, m)));
  });
}

cokeep_status cokeep_gen_random(int n, uint64_t seed, double join_bias,
                                char** json) {
  return guarded([&] {
    require(json != nullptr, "null argument");
    cokeep::Cotree ct = cokeep::random_cotree(n, seed, join_bias);
    cokeep::Graph g = cokeep::materialize(ct);
    *json = dump(Json{{"n", n},
                      {"seed", seed},
                      {"join_bias", join_bias},
                      {"expression", cokeep::format_expression(ct)},
                      {"edge_count", g.edge_count()}});
  });
}

}  // extern "C"
