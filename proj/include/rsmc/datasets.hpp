// Copyright 2026 The rsmc Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "rsmc/graph.hpp"

namespace rsmc {

std::vector<std::string> builtin_dataset_names();

// "karate": Zachary's karate club, 34 vertices labeled "1".."34" (vertex i
// carries label i+1), 78 undirected unit-weight edges. Throws
// UnknownDatasetError for any other name.
Graph load_builtin_dataset(std::string_view name);

}  // namespace rsmc
