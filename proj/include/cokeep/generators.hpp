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

#ifndef COKEEP_GENERATORS_HPP_
#define COKEEP_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cokeep/cotree.hpp"
#include "cokeep/tree_shape.hpp"

namespace cokeep {

enum class TightKind {
  kTh1Case1,
  kTh1Case2,
  kTh1Case3,
  kTh1Case4,
  kTh2Tight,
  kMaxEdgeKeepTight,
  kSuperKeepTight,
};

// Lower-case names: "th1case1", ..., "th2tight", "maxedgekeeptight",
// "superkeeptight".
std::string_view tight_kind_name(TightKind kind);
// Errors: kBadSpec.
TightKind parse_tight_kind(std::string_view name);

struct TightExample {
  TightKind kind;
  int k = 0;
  int m = 0;
  Cotree cotree;
  int claimed_kappa = 0;
  int claimed_delta = 0;
};

// Extremal graph for the given kind and parameters. The claimed (kappa,
// delta) are checked against the cotree before returning.
// Errors: kParamViolation naming the violated side condition.
TightExample tight_example(TightKind kind, int k, int m);

// Random cotree on labels 0..n-1, deterministic per seed. The root is a
// join with probability at least join_bias.
// Errors: kInvalidArgument (n < 1, join_bias outside [0,1]).
Cotree random_cotree(int n, std::uint64_t seed, double join_bias);

// Uniform random labeled tree via a Pruefer sequence. Errors: kBadSpec.
TreeShape random_tree(int m, std::uint64_t seed);
TreeShape tree_from_prufer(const std::vector<int>& sequence);

// "path:m" | "star:m" | "prufer:a1,...,a_{m-2}" | "edges:u-v,...".
// Errors: kBadSpec.
TreeShape named_tree(std::string_view spec);

}  // namespace cokeep

#endif  // COKEEP_GENERATORS_HPP_
