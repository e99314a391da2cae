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

#include "serialize.hpp"

#include <algorithm>

#include "cokeep/connectivity.hpp"
#include "cokeep/oracle.hpp"

namespace cokeep::serialize {
namespace {

Json tree_json(const TreeShape& t) {
  Json edges = Json::array();
  for (const Edge& e : t.graph().edges()) edges.push_back({e.u, e.v});
  return Json{{"order", t.order()}, {"edges", edges}};
}

Json map_json(const Embedding& e) {
  Json out = Json::array();
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    out.push_back({static_cast<int>(i), e.map[i]});
  }
  return out;
}

bool has_induced_p4(const Graph& g) {
  const VertexSet& v = g.vertices();
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> q{v[a], v[b], v[c], v[d]};
          int edges = 0;
          std::array<int, 4> deg{};
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (g.has_edge(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
            }
          }
          std::sort(deg.begin(), deg.end());
          if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) return true;
        }
      }
    }
  }
  return false;
}

bool ideal_by_paths(const Graph& g) {
  const VertexSet& v = g.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const int want = std::min(g.degree(v[i]), g.degree(v[j]));
      if (internally_disjoint_paths(g, v[i], v[j]) < want) return false;
    }
  }
  return true;
}

Json check(const std::string& name, const Json& closed_form, const Json& oracle) {
  return Json{{"name", name},
              {"closed_form", closed_form},
              {"oracle", oracle},
              {"agree", closed_form == oracle}};
}

Json skipped(const std::string& name, const Json& closed_form,
             const std::string& reason) {
  return Json{{"name", name},
              {"closed_form", closed_form},
              {"oracle", nullptr},
              {"skipped", reason}};
}

}  // namespace

Json analysis(const AnalysisReport& r) {
  return Json{{"n", r.n},
              {"n_prime", r.n_prime},
              {"t", r.t},
              {"delta", r.delta},
              {"Delta", r.Delta},
              {"kappa", r.kappa},
              {"lambda", r.lambda},
              {"connected", r.connected},
              {"maximally_connected", r.maximally_connected},
              {"maximally_edge_connected", r.maximally_edge_connected},
              {"super_edge_connected", r.super_edge_connected},
              {"super_by_convention", r.super_by_convention},
              {"ideally_connected", r.ideally_connected},
              {"dirac", r.dirac}};
}

Json recognition(const Graph& g) {
  RecognitionResult r = cotree_from_graph(g);
  if (r.cotree) {
    return Json{{"cograph", true},
                {"n", g.order()},
                {"expression", format_expression(*r.cotree)}};
  }
  const auto& w = *r.witness;
  return Json{{"cograph", false},
              {"n", g.order()},
              {"witness", {w[0], w[1], w[2], w[3]}}};
}

Json residual(const Graph& g) {
  RecognitionResult r = cotree_from_graph(g);
  Json out{{"cograph", r.is_cograph()},
           {"vertices", g.vertices()},
           {"edge_count", g.edge_count()}};
  if (r.cotree) {
    out["expression"] = format_expression(*r.cotree);
    Json report = analysis(analyze(*r.cotree));
    for (auto& [key, value] : report.items()) {
      out[key] = value;
    }
  } else {
    out["n"] = g.order();
    out["delta"] = g.min_degree();
    out["kappa"] = vertex_connectivity_flow(g);
    out["lambda"] = edge_connectivity_flow(g);
  }
  return out;
}

Json embedding(Theorem th, const Graph& g, const std::vector<TreeShape>& shapes,
               const std::vector<Embedding>& trees) {
  const Embedding& first = trees.front();
  Json out{{"theorem", std::string(theorem_name(th))},
           {"mode", std::string(delete_mode_name(first.mode))},
           {"preserved",
            {{"property", std::string(property_name(first.preserved))},
             {"k", first.k}}}};
  if (trees.size() == 1) {
    out["tree"] = tree_json(shapes.front());
    out["map"] = map_json(first);
  } else {
    Json list = Json::array();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      list.push_back({{"tree", tree_json(shapes[i])}, {"map", map_json(trees[i])}});
    }
    out["trees"] = list;
  }
  out["residual"] = residual(combined_residual(g, shapes, trees));
  return out;
}

Json tight(const TightExample& ex) {
  return Json{{"kind", std::string(tight_kind_name(ex.kind))},
              {"k", ex.k},
              {"m", ex.m},
              {"expression", format_expression(ex.cotree)},
              {"claimed_kappa", ex.claimed_kappa},
              {"claimed_delta", ex.claimed_delta}};
}

Json error(const std::exception& e) {
  Json out;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    out["error"] = std::string(error_code_name(err->code()));
    out["message"] = err->what();
    if (const auto* p4 = dynamic_cast<const NotACographError*>(err)) {
      const auto& w = p4->witness();
      out["witness"] = {w[0], w[1], w[2], w[3]};
    } else if (const auto* b = dynamic_cast<const BoundViolatedError*>(err)) {
      out["case"] = b->case_label();
      out["required_delta"] = b->required_degree();
      out["actual_delta"] = b->actual_degree();
    } else if (const auto* s = dynamic_cast<const SyntaxError*>(err)) {
      out["position"] = s->position();
    }
  } else {
    out["error"] = "Internal";
    out["message"] = e.what();
  }
  return out;
}

VerifyOptions parse_verify_options(const std::string& text) {
  VerifyOptions o;
  if (text.empty()) return o;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("bad verify options: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::kInvalidArgument, "verify options must be an object");
  try {
    o.embedding_cap = j.value("embedding_cap", o.embedding_cap);
    o.cut_cap = j.value("cut_cap", o.cut_cap);
    o.theorem = j.value("theorem", o.theorem);
    o.tree = j.value("tree", o.tree);
    o.tree2 = j.value("tree2", o.tree2);
    o.k = j.value("k", o.k);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("bad verify options: ") + e.what());
  }
  return o;
}

Json verify(const Graph& g, const VerifyOptions& o) {
  Json out{{"n", g.order()}};
  Json checks = Json::array();
  RecognitionResult rec = cotree_from_graph(g);
  checks.push_back(check("cograph", rec.is_cograph(), !has_induced_p4(g)));
  out["cograph"] = rec.is_cograph();
  if (rec.cotree) {
    const Cotree& ct = *rec.cotree;
    const AnalysisReport r = analyze(ct);
    const int kappa = vertex_connectivity_flow(g);
    checks.push_back(check("kappa", r.kappa, kappa));
    checks.push_back(check("lambda", r.lambda, edge_connectivity_flow(g)));
    checks.push_back(check("maximally_connected", r.maximally_connected,
                           kappa == g.min_degree()));
    if (g.order() <= o.cut_cap) {
      checks.push_back(check("super_edge_connected", r.super_edge_connected,
                             super_by_cuts(g, o.cut_cap)));
      checks.push_back(check("ideally_connected", r.ideally_connected,
                             ideal_by_paths(g)));
    } else {
      checks.push_back(skipped("super_edge_connected", r.super_edge_connected,
                               "n above cut cap"));
      checks.push_back(skipped("ideally_connected", r.ideally_connected,
                               "n above cut cap"));
    }
  }
  bool agree = true;
  for (const Json& c : checks) agree = agree && c.value("agree", true);
  out["checks"] = checks;

  if (!o.theorem.empty()) {
    const Theorem th = parse_theorem(o.theorem);
    if (o.tree.empty()) fail(ErrorCode::kInvalidArgument, "verify needs a tree");
    const TreeShape t1 = named_tree(o.tree);
    const TreeShape t2 = o.tree2.empty() ? t1 : named_tree(o.tree2);
    const Property p = theorem_property(th);
    const DeleteMode mode = theorem_mode(th);
    Json keep{{"theorem", std::string(theorem_name(th))},
              {"property", std::string(property_name(p))},
              {"mode", std::string(delete_mode_name(mode))},
              {"k", o.k}};
    bool built = false;
    try {
      std::vector<TreeShape> shapes{t1};
      if (uses_two_trees(th)) shapes.push_back(t2);
      const std::vector<Embedding> trees = run_theorem(th, g, t1, t2, o.k);
      keep["construction"] = embedding(th, g, shapes, trees);
      built = true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kPostconditionFailed) throw;
      keep["construction"] = error(e);
    }
    try {
      bool found = false;
      if (uses_two_trees(th)) {
        PairSearchResult s =
            exhaustive_pair_search(g, t1, t2, p, o.k, mode, o.embedding_cap);
        found = !s.proven_none();
        keep["search"] = {{"found", found}, {"examined", s.examined}};
        if (found) {
          keep["search"]["maps"] = {map_json(s.found->first),
                                    map_json(s.found->second)};
        }
      } else {
        SearchResult s = exhaustive_keeping_search(g, t1, p, o.k, mode,
                                                   o.embedding_cap);
        found = !s.proven_none();
        keep["search"] = {{"found", found}, {"examined", s.examined}};
        if (found) keep["search"]["map"] = map_json(*s.found);
      }
      keep["consistent"] = !built || found;
      agree = agree && (!built || found);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      keep["search"] = error(e);
    }
    out["keeping"] = keep;
  }
  out["agree"] = agree;
  return out;
}

}  // namespace cokeep::serialize
