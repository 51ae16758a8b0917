// Copyright 2026 The Transor Authors
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

#ifndef TRANSOR_CLI_H_
#define TRANSOR_CLI_H_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "transor/graph.h"

namespace transor::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;          // negative verdict (check, verify)
inline constexpr int kDisagreement = 2;   // oracle-compare found a mismatch
inline constexpr int kInputError = 64;    // usage, parse or domain error
inline constexpr int kOracleScale = 65;   // brute force refused
inline constexpr int kInternalError = 70;

// Runs one command. `args` excludes the program name. Input is read from
// the named file, or from `in` when the path is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Description of the first disagreement between the fast paths and the
// brute-force oracle on g, or an empty string.
std::string oracle_disagreement(const Graph& g);

// Greedily deletes vertices, then edges, while `fails` keeps holding.
Graph shrink_counterexample(const Graph& g, const std::function<bool(const Graph&)>& fails);

}  // namespace transor::cli

#endif  // TRANSOR_CLI_H_
