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

#include "qreach/ranges.hpp"

#include "qreach/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>

namespace qreach {

namespace {

double to_real(std::string_view tok, std::string_view whole) {
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) {
        tok.remove_prefix(1);
    }
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) {
        tok.remove_suffix(1);
    }
    double v = 0.0;
    const char *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (tok.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw InvalidArgument(fmt::format("bad number '{}' in '{}'", tok, whole));
    }
    return v;
}

} // namespace

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    if (text.empty()) {
        throw InvalidArgument("empty list");
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const std::string_view item = text.substr(pos, comma - pos);
        pos = comma + 1;

        const std::size_t c1 = item.find(':');
        if (c1 == std::string_view::npos) {
            out.push_back(to_real(item, text));
            continue;
        }
        const std::size_t c2 = item.find(':', c1 + 1);
        if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos) {
            throw InvalidArgument(fmt::format("range '{}' must be start:stop:step", item));
        }
        const double start = to_real(item.substr(0, c1), text);
        const double stop = to_real(item.substr(c1 + 1, c2 - c1 - 1), text);
        const double step = to_real(item.substr(c2 + 1), text);
        if (!(step > 0.0) || stop < start) {
            throw InvalidArgument(fmt::format("range '{}' needs step > 0 and stop >= start", item));
        }
        const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
        if (count > 1'000'000) {
            throw InvalidArgument(fmt::format("range '{}' is too long", item));
        }
        for (long long i = 0; i <= count; ++i) {
            out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
        }
    }
    return out;
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (double v : parse_real_list(text)) {
        if (v < 0.0 || v != std::floor(v)) {
            throw InvalidArgument(fmt::format("'{}' is not a nonnegative integer", v));
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

} // namespace qreach
