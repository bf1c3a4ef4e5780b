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

#ifndef PERSUASION_PARALLEL_HPP_
#define PERSUASION_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace persuasion {

// Runs fn(i) for every i in [0, count). jobs <= 1 runs inline on the calling
// thread. Callers write results into preallocated slots indexed by i, so
// output never depends on scheduling. The first exception thrown by any task
// is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace persuasion

#endif  // PERSUASION_PARALLEL_HPP_
