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

#ifndef COKEEP_SRC_SERIALIZE_HPP_
#define COKEEP_SRC_SERIALIZE_HPP_

#include <exception>
#include <string>
#include <vector>

#include "cokeep/analysis.hpp"
#include "cokeep/embed.hpp"
#include "cokeep/generators.hpp"
#include "json.hpp"

namespace cokeep::serialize {

using Json = nlohmann::ordered_json;

Json analysis(const AnalysisReport& r);
Json recognition(const Graph& g);
// Full analysis when the residual is a cograph, flow invariants otherwise.
Json residual(const Graph& g);
Json embedding(Theorem th, const Graph& g,
               const std::vector<TreeShape>& shapes,
               const std::vector<Embedding>& trees);
Json tight(const TightExample& ex);
Json error(const std::exception& e);

struct VerifyOptions {
  int embedding_cap = 14;
  int cut_cap = 16;
  std::string theorem;  // empty: invariants only
  std::string tree;
  std::string tree2;
  int k = 1;
};

VerifyOptions parse_verify_options(const std::string& text);
Json verify(const Graph& g, const VerifyOptions& options);

}  // namespace cokeep::serialize

#endif  // COKEEP_SRC_SERIALIZE_HPP_
