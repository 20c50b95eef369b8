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

#include <optional>
#include <string>
#include <string_view>

namespace rsmc {

// Shortest text that reads back to the same double; +inf is written as "inf".
std::string format_real(double value);

// Parses a whole token as a double ("inf" accepted). Returns nullopt on junk
// or trailing characters.
std::optional<double> parse_real(std::string_view token);

}  // namespace rsmc
