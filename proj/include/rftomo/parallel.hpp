// Copyright 2026 The rftomo Authors
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

#include <cstddef>
#include <functional>

namespace rftomo {

/// Process-wide default worker count for embarrassingly parallel loops.
/// 0 means hardware concurrency.
void set_default_threads(int n);
int default_threads();

/// Runs body(i) for i in [0, count). Work items must be independent; results
/// must be written to disjoint slots so the outcome does not depend on the
/// interleaving. threads == 0 uses the process default.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  int threads = 0);

}  // namespace rftomo
