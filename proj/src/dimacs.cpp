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

#include "qreach/dimacs.hpp"

#include "qreach/error.hpp"

#include <cctype>
#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <vector>

namespace qreach {

std::string write_dimacs(const SatInstance &inst) {
    std::string out = fmt::format("p cnf {} {}\n", inst.n, inst.m());
    for (const auto &clause : inst.clauses) {
        for (const auto &lit : clause.literals) {
            out += fmt::format("{} ", lit.dimacs());
        }
        out += "0\n";
    }
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

long long to_int(std::string_view tok, std::size_t line_no) {
    long long value = 0;
    const auto *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, fmt::format("expected an integer, got '{}'", tok));
    }
    return value;
}

} // namespace

SatInstance parse_dimacs(std::string_view text) {
    SatInstance inst;
    bool have_header = false;
    long long declared_m = 0;
    Clause current;
    std::size_t current_start = 0;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == 'c') {
            continue;
        }
        if (tokens[0] == "%") {
            break;
        }
        if (tokens[0] == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tokens.size() != 4 || tokens[1] != "cnf") {
                throw ParseError(line_no, "malformed header, expected 'p cnf <n> <m>'");
            }
            const long long n = to_int(tokens[2], line_no);
            declared_m = to_int(tokens[3], line_no);
            if (n < 1 || n > 1'000'000 || declared_m < 0) {
                throw ParseError(line_no, "header counts out of range");
            }
            inst.n = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "clause data before 'p cnf' header");
        }
        for (auto tok : tokens) {
            const long long v = to_int(tok, line_no);
            if (current.literals.empty()) {
                current_start = line_no;
            }
            if (v == 0) {
                const int width = static_cast<int>(current.width());
                if (width == 0) {
                    throw ParseError(line_no, "empty clause");
                }
                if (inst.clauses.empty()) {
                    inst.k = width;
                } else if (width != inst.k) {
                    throw ParseError(current_start,
                                     fmt::format("clause width {} differs from k = {}", width, inst.k));
                }
                inst.clauses.push_back(std::move(current));
                current = Clause{};
                continue;
            }
            const long long var = v < 0 ? -v : v;
            if (var > inst.n) {
                throw ParseError(line_no,
                                 fmt::format("literal {} out of range for n = {}", v, inst.n));
            }
            for (const auto &lit : current.literals) {
                if (lit.variable == var) {
                    throw ParseError(line_no, fmt::format("variable {} repeated in clause", var));
                }
            }
            current.literals.push_back({static_cast<int>(var), v < 0});
        }
    }
    if (!have_header) {
        throw ParseError(0, "missing 'p cnf' header");
    }
    if (!current.literals.empty()) {
        throw ParseError(current_start, "last clause is not 0-terminated");
    }
    if (static_cast<long long>(inst.m()) != declared_m) {
        throw ParseError(0, fmt::format("header declares {} clauses, found {}", declared_m,
                                        inst.m()));
    }
    return inst;
}

SatInstance read_dimacs_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument(fmt::format("cannot open '{}'", path.string()));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

void write_dimacs_file(const std::filesystem::path &path, const SatInstance &inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument(fmt::format("cannot write '{}'", path.string()));
    }
    out << write_dimacs(inst);
}

} // namespace qreach
