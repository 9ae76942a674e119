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
#include <utility>

namespace hdconc {

/// A closed-form bound evaluation. The raw formula value is kept unclamped;
/// `valid` says whether it is non-trivial and its preconditions hold.
struct BoundResult {
  std::string name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  bool valid = false;
  std::string note;
};

/// Values within this margin of the trivial level count as trivial.
inline constexpr double kTrivialityMargin = 1e-12;

/// Upper bounds on probabilities/fractions are informative below 1.
inline bool informative_upper(double value) {
  return value < 1.0 - kTrivialityMargin;
}

/// Lower bounds on probabilities/fractions are informative above 0.
inline bool informative_lower(double value) {
  return value > kTrivialityMargin;
}

}  // namespace hdconc
