// Copyright 2026 The persuade Authors
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

#ifndef PERSUASION_LINALG_HPP_
#define PERSUASION_LINALG_HPP_

#include <optional>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion::linalg {

using Matrix = std::vector<std::vector<Rat>>;

int rank(Matrix m);

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined.
std::optional<std::vector<Rat>> solve_unique(Matrix a, std::vector<Rat> b);

// True when A x = b admits at least one solution.
bool consistent(Matrix a, std::vector<Rat> b);

// A nonzero kernel vector of A, or nullopt when the kernel is trivial.
std::optional<std::vector<Rat>> kernel_vector(const Matrix& a);

}  // namespace persuasion::linalg

#endif  // PERSUASION_LINALG_HPP_
