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

// Command-line front end over the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "cokeep/cokeep.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Input {
  std::string expr;
  std::string file;
  std::string positional;
};

struct Options {
  bool pretty = false;
  Input input;
  std::string theorem;
  std::string tree;
  std::string tree2;
  int k = 1;
  std::string tight;
  std::string random;
  double join_bias = 0.5;
  bool dsl = false;
};

// Failure raised inside the driver: exit code plus a JSON report.
struct Failure {
  int exit_code;
  Json report;
};

struct Owned {
  char* text = nullptr;
  ~Owned() { cokeep_string_free(text); }
};

[[noreturn]] void raise_last(cokeep_status status) {
  Json report = Json::parse(cokeep_last_error_json(), nullptr, false);
  if (report.is_discarded()) {
    report = Json{{"error", cokeep_status_name(status)},
                  {"message", cokeep_last_error_message()}};
  }
  throw Failure{cokeep_status_exit_code(status), report};
}

[[noreturn]] void usage(const std::string& message) {
  throw Failure{1, Json{{"error", "Usage"}, {"message", message}}};
}

void check(cokeep_status status) {
  if (status != COKEEP_OK) raise_last(status);
}

Json take(cokeep_status status, Owned& out) {
  check(status);
  return Json::parse(out.text);
}

void render(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render(value, prefix.empty() ? key : prefix + "." + key, os);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump())
       << '\n';
  }
}

void emit(const Json& j, bool pretty) {
  if (pretty) {
    render(j, "", std::cout);
  } else {
    std::cout << j.dump() << '\n';
  }
}

std::string read_source(const Input& in) {
  if (!in.positional.empty() && in.positional != "-") {
    usage("unexpected argument " + in.positional);
  }
  int count = (in.expr.empty() ? 0 : 1) + (in.file.empty() ? 0 : 1) +
              (in.positional == "-" ? 1 : 0);
  if (count != 1) usage("exactly one of --expr, --file, - is required");
  if (!in.expr.empty()) return in.expr;
  if (in.positional == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(in.file, std::ios::binary);
  if (!f) {
    throw Failure{2, Json{{"error", "IoError"},
                          {"message", "cannot read " + in.file}}};
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) {
    throw Failure{2, Json{{"error", "IoError"},
                          {"message", "read failed for " + in.file}}};
  }
  return ss.str();
}

// Edge lists start with the vertex count; expressions start with K or '('.
bool looks_like_edge_list(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '#' || (c >= '0' && c <= '9');
  }
  return false;
}

struct GraphHandle {
  cokeep_graph* g = nullptr;
  ~GraphHandle() { cokeep_graph_free(g); }
};

struct TreeHandle {
  cokeep_tree* t = nullptr;
  ~TreeHandle() { cokeep_tree_free(t); }
};

void load_graph(const Input& in, GraphHandle& out) {
  std::string text = read_source(in);
  if (in.expr.empty() && looks_like_edge_list(text)) {
    check(cokeep_graph_parse_edge_list(text.c_str(), &out.g));
  } else {
    check(cokeep_graph_parse_expression(text.c_str(), &out.g));
  }
}

int run_recognize(const Options& o) {
  GraphHandle g;
  load_graph(o.input, g);
  Owned out;
  Json report = take(cokeep_recognize(g.g, &out.text), out);
  emit(report, o.pretty);
  return report.value("cograph", false) ? 0 : 3;
}

int run_analyze(const Options& o) {
  GraphHandle g;
  load_graph(o.input, g);
  Owned out;
  emit(take(cokeep_analyze(g.g, &out.text), out), o.pretty);
  return 0;
}

int run_embed(const Options& o) {
  GraphHandle g;
  load_graph(o.input, g);
  TreeHandle t1;
  TreeHandle t2;
  check(cokeep_tree_parse(o.tree.c_str(), &t1.t));
  if (!o.tree2.empty()) check(cokeep_tree_parse(o.tree2.c_str(), &t2.t));
  Owned out;
  emit(take(cokeep_embed(g.g, o.theorem.c_str(), t1.t, t2.t, o.k, &out.text),
            out),
       o.pretty);
  return 0;
}

std::optional<std::pair<int, int>> oracle_caps() {
  const char* env = std::getenv("COGRAPH_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return std::nullopt;
  std::string text(env);
  std::size_t comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      int cap = std::stoi(text, &used);
      if (used != text.size() || cap < 1) throw std::invalid_argument(text);
      return std::pair{cap, cap};
    }
    std::string a = text.substr(0, comma);
    std::string b = text.substr(comma + 1);
    int e = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    int c = std::stoi(b, &used);
    if (used != b.size() || e < 1 || c < 1) throw std::invalid_argument(text);
    return std::pair{e, c};
  } catch (const std::exception&) {
    usage("COGRAPH_ORACLE_CAP must be N or EMBED,CUT");
  }
}

int run_verify(const Options& o) {
  GraphHandle g;
  load_graph(o.input, g);
  Json options = Json::object();
  if (auto caps = oracle_caps()) {
    options["embedding_cap"] = caps->first;
    options["cut_cap"] = caps->second;
  }
  if (!o.theorem.empty()) {
    if (o.tree.empty()) usage("verify --theorem needs --tree");
    options["theorem"] = o.theorem;
    options["tree"] = o.tree;
    if (!o.tree2.empty()) options["tree2"] = o.tree2;
    options["k"] = o.k;
  }
  Owned out;
  Json report = take(cokeep_verify(g.g, options.dump().c_str(), &out.text), out);
  emit(report, o.pretty);
  return report.value("agree", false) ? 0 : 4;
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) usage(std::string(what) + " expects A,B");
  try {
    std::size_t used = 0;
    std::string a = text.substr(0, comma);
    std::string b = text.substr(comma + 1);
    int x = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    int y = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {x, y};
  } catch (const std::exception&) {
    usage(std::string(what) + " expects two integers A,B");
  }
}

int run_gen(const Options& o) {
  if (o.tight.empty() == o.random.empty()) {
    usage("gen needs exactly one of --tight, --random");
  }
  Owned out;
  Json report;
  if (!o.tight.empty()) {
    std::size_t colon = o.tight.find(':');
    if (colon == std::string::npos) usage("--tight expects KIND:K,M");
    auto [k, m] = parse_pair(o.tight.substr(colon + 1), "--tight");
    std::string kind = o.tight.substr(0, colon);
    report = take(cokeep_gen_tight(kind.c_str(), k, m, &out.text), out);
  } else {
    std::size_t comma = o.random.find(',');
    if (comma == std::string::npos) usage("--random expects N,SEED");
    std::uint64_t seed = 0;
    int n = 0;
    try {
      std::size_t used = 0;
      std::string a = o.random.substr(0, comma);
      std::string b = o.random.substr(comma + 1);
      n = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      if (b.empty() || b.front() == '-') throw std::invalid_argument(b);
      seed = std::stoull(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    } catch (const std::exception&) {
      usage("--random expects N,SEED");
    }
    report = take(cokeep_gen_random(n, seed, o.join_bias, &out.text), out);
  }
  if (o.dsl) {
    std::cout << report.at("expression").get<std::string>() << '\n';
  } else {
    emit(report, o.pretty);
  }
  return 0;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--expr", o.input.expr, "Cotree expression");
  cmd->add_option("--file", o.input.file, "Edge list or expression file");
  cmd->add_option("source", o.input.positional, "`-` reads standard input");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Connectivity-keeping trees in cographs"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Human-readable output");

  CLI::App* recognize = app.add_subcommand("recognize", "Recognize a cograph");
  add_input(recognize, o);
  CLI::App* analyze = app.add_subcommand("analyze", "Connectivity report");
  add_input(analyze, o);

  CLI::App* embed = app.add_subcommand("embed", "Build a connectivity-keeping tree");
  add_input(embed, o);
  embed->add_option("--theorem", o.theorem, "th1 th2 maxcon th3 th4 th6 superkeep th5")
      ->required();
  embed->add_option("--tree", o.tree, "path:m star:m prufer:... edges:u-v,...")
      ->required();
  embed->add_option("--tree2", o.tree2, "Second tree for th2 and th4");
  embed->add_option("-k", o.k, "Connectivity parameter");

  CLI::App* verify = app.add_subcommand("verify", "Cross-check against the oracle");
  add_input(verify, o);
  verify->add_option("--theorem", o.theorem, "Also check this construction");
  verify->add_option("--tree", o.tree, "Tree spec");
  verify->add_option("--tree2", o.tree2, "Second tree spec");
  verify->add_option("-k", o.k, "Connectivity parameter");

  CLI::App* gen = app.add_subcommand("gen", "Generate cographs");
  gen->add_option("--tight", o.tight, "KIND:K,M");
  gen->add_option("--random", o.random, "N,SEED");
  gen->add_option("--join-bias", o.join_bias, "Probability of a join root")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--dsl", o.dsl, "Print only the expression");

  for (CLI::App* cmd : {recognize, analyze, embed, verify}) {
    cmd->allow_extras(false);
  }
  for (CLI::App* cmd : {recognize, analyze, embed, verify, gen}) {
    cmd->add_flag("--pretty", o.pretty, "Human-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    std::cout << Json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }

  try {
    if (recognize->parsed()) return run_recognize(o);
    if (analyze->parsed()) return run_analyze(o);
    if (embed->parsed()) return run_embed(o);
    if (verify->parsed()) return run_verify(o);
    return run_gen(o);
  } catch (const Failure& f) {
    emit(f.report, o.pretty);
    return f.exit_code;
  } catch (const std::exception& e) {
    emit(Json{{"error", "InternalError"}, {"message", e.what()}}, o.pretty);
    return 4;
  }
}
