// Copyright 2026 The qaoa-reach Authors
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
#include <string_view>
#include <vector>

namespace qreach {

/// Comma-separated items, each a number or an inclusive `start:stop:step`
/// range, e.g. "0.25:5:0.25" or "0.5,1,2:4:1". Values are start + i*step,
/// rounded to 12 decimals. Throws InvalidArgument.
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);

/// Same syntax restricted to nonnegative integers.
[[nodiscard]] std::vector<std::size_t> parse_count_list(std::string_view text);

} // namespace qreach
