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

#include "qreach/error.hpp"
#include "qreach/ranges.hpp"

#include <gtest/gtest.h>

using namespace qreach;

TEST(ranges, CommaList) {
    EXPECT_EQ(parse_real_list("0.5,1,2"), (std::vector<double>{0.5, 1.0, 2.0}));
    EXPECT_EQ(parse_real_list(" 3 "), (std::vector<double>{3.0}));
}

TEST(ranges, InclusiveRange) {
    const auto v = parse_real_list("0.25:5:0.25");
    ASSERT_EQ(v.size(), 20u);
    EXPECT_EQ(v[2], 0.75);
    EXPECT_EQ(v.back(), 5.0);
    EXPECT_EQ(parse_real_list("0.1:0.3:0.1"), (std::vector<double>{0.1, 0.2, 0.3}));
}

TEST(ranges, Mixed) {
    EXPECT_EQ(parse_real_list("0.5,1:3:1"), (std::vector<double>{0.5, 1.0, 2.0, 3.0}));
    EXPECT_EQ(parse_count_list("1:4:1,8"), (std::vector<std::size_t>{1, 2, 3, 4, 8}));
}

TEST(ranges, Errors) {
    EXPECT_THROW((void)parse_real_list(""), InvalidArgument);
    EXPECT_THROW((void)parse_real_list("1,,2"), InvalidArgument);
    EXPECT_THROW((void)parse_real_list("1:2:0"), InvalidArgument);
    EXPECT_THROW((void)parse_real_list("3:1:1"), InvalidArgument);
    EXPECT_THROW((void)parse_real_list("abc"), InvalidArgument);
    EXPECT_THROW((void)parse_count_list("1.5"), InvalidArgument);
    EXPECT_THROW((void)parse_count_list("-1"), InvalidArgument);
}
