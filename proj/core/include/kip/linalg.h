// Copyright 2026 The kip Authors
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

#ifndef KIP_LINALG_H_
#define KIP_LINALG_H_

#include <optional>
#include <vector>

#include "kip/rat.h"

namespace kip {

using RatMatrix = std::vector<std::vector<Rat>>;

// Solves the square system a * x = b by Gauss-Jordan elimination over the
// rationals. Returns nullopt when a is singular.
std::optional<std::vector<Rat>> SolveLinearSystem(RatMatrix a,
                                                  std::vector<Rat> b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> Invert(RatMatrix a);

}  // namespace kip

#endif  // KIP_LINALG_H_
