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

#include "qreach/instances.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qreach {

/// "p cnf n m" header followed by one 0-terminated clause per line.
[[nodiscard]] std::string write_dimacs(const SatInstance &inst);

/// Parses DIMACS CNF. Comment lines ("c ...") and a trailing "%" section are
/// skipped; clauses may span lines. Every clause must have the width of the
/// first one and name pairwise-distinct variables. Throws ParseError.
[[nodiscard]] SatInstance parse_dimacs(std::string_view text);

[[nodiscard]] SatInstance read_dimacs_file(const std::filesystem::path &path);
void write_dimacs_file(const std::filesystem::path &path, const SatInstance &inst);

} // namespace qreach
