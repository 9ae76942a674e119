// Copyright 2026 The hdconc Authors.
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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "hdconc/bound_result.hpp"

namespace hdconc {

/// Evaluates a named bound from textual key=value arguments. Every evaluator
/// checks that it received exactly its own keys (optional ones aside).
/// Scalar quantities (ball volume, a0, jl_dimension, ...) come back wrapped in
/// a BoundResult with valid=true.
BoundResult evaluate_bound(const std::string& name,
                           const std::map<std::string, std::string>& args);

/// Registered names, sorted.
std::vector<std::string> bound_names();

/// Parses "k=v" tokens and comma lists "k=v,k2=v2" into a map.
std::map<std::string, std::string> parse_bound_args(
    const std::vector<std::string>& tokens);

}  // namespace hdconc
