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
#include "qreach/instances.hpp"
#include "qreach/rng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qreach;

namespace {

bool distinct_variables(const Clause &c) {
    std::set<int> vars;
    for (const auto &l : c.literals) {
        vars.insert(l.variable);
    }
    return vars.size() == c.literals.size();
}

SatInstance from_dimacs_ints(int n, std::vector<std::vector<int>> clauses) {
    SatInstance inst;
    inst.n = n;
    inst.k = clauses.empty() ? 0 : static_cast<int>(clauses[0].size());
    for (const auto &c : clauses) {
        Clause clause;
        for (int v : c) {
            clause.literals.push_back({std::abs(v), v < 0});
        }
        inst.clauses.push_back(clause);
    }
    return inst;
}

} // namespace

TEST(instances, GenerateMatchesRequestedShape) {
    const auto inst = generate_instance(6, 12, 3, 7);
    EXPECT_EQ(inst.n, 6);
    EXPECT_EQ(inst.k, 3);
    ASSERT_EQ(inst.m(), 12u);
    EXPECT_DOUBLE_EQ(density(inst).value(), 2.0);
    EXPECT_EQ(inst.seed, 7u);
    for (const auto &c : inst.clauses) {
        EXPECT_EQ(c.width(), 3u);
        EXPECT_TRUE(distinct_variables(c));
    }
    EXPECT_NO_THROW(inst.validate());
}

TEST(instances, EmptyInstanceIsSatisfiedEverywhere) {
    const auto inst = generate_instance(6, 0, 2, 1);
    EXPECT_EQ(inst.m(), 0u);
    EXPECT_DOUBLE_EQ(density(inst).value(), 0.0);
    const auto sol = brute_force_min_violations(inst);
    EXPECT_EQ(sol.min_violations, 0u);
    EXPECT_EQ(sol.assignments.size(), 64u);
}

TEST(instances, FullWidthClauseExcludesOneAssignment) {
    const auto inst = generate_instance(3, 1, 3, 42);
    ASSERT_EQ(inst.m(), 1u);
    std::set<int> vars;
    for (const auto &l : inst.clauses[0].literals) {
        vars.insert(l.variable);
    }
    EXPECT_EQ(vars, (std::set<int>{1, 2, 3}));
    int violated = 0;
    for (std::uint64_t z = 0; z < 8; ++z) {
        violated += inst.clauses[0].satisfied_by(z) ? 0 : 1;
    }
    EXPECT_EQ(violated, 1);
}

TEST(instances, RejectsBadArguments) {
    EXPECT_THROW((void)generate_instance(2, 3, 3, 0), InvalidArgument);
    EXPECT_THROW((void)generate_instance(6, 3, 4, 0), InvalidArgument);
    EXPECT_THROW((void)generate_instance(0, 3, 2, 0), InvalidArgument);
}

TEST(instances, SameSeedSameInstance) {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xdeadbeefULL}) {
        const auto a = generate_instance(9, 40, 3, seed);
        const auto b = generate_instance(9, 40, 3, seed);
        EXPECT_TRUE(a.same_formula(b));
    }
    EXPECT_FALSE(generate_instance(9, 40, 3, 1).same_formula(generate_instance(9, 40, 3, 2)));
}

TEST(instances, ClausesAlwaysHaveDistinctVariables) {
    Rng pick(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = pick.coin() ? 3 : 2;
        const int n = k + static_cast<int>(pick.below(10));
        const auto m = static_cast<std::size_t>(pick.below(60));
        const auto inst = generate_instance(n, m, k, pick.next());
        for (const auto &c : inst.clauses) {
            ASSERT_EQ(c.width(), static_cast<std::size_t>(k));
            ASSERT_TRUE(distinct_variables(c));
            for (const auto &l : c.literals) {
                ASSERT_GE(l.variable, 1);
                ASSERT_LE(l.variable, n);
            }
        }
    }
}

TEST(instances, PolaritiesAreFairCoins) {
    // Chi-square with one degree of freedom; 10.83 is the 0.001 critical value.
    std::size_t negated = 0;
    std::size_t total = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = generate_instance(10, 1000, 3, seed);
        for (const auto &c : inst.clauses) {
            for (const auto &l : c.literals) {
                negated += l.negated ? 1 : 0;
                ++total;
            }
        }
    }
    ASSERT_GE(total, 10000u);
    const double expected = total / 2.0;
    const double pos = static_cast<double>(total - negated);
    const double neg = static_cast<double>(negated);
    const double chi2 = (pos - expected) * (pos - expected) / expected +
                        (neg - expected) * (neg - expected) / expected;
    EXPECT_LT(chi2, 10.83);
}

TEST(instances, VariableChoiceIsUniform) {
    // Chi-square over 8 variables (7 dof); 24.32 is the 0.001 critical value.
    std::vector<double> hits(9, 0.0);
    const auto inst = generate_instance(8, 20000, 2, 5);
    for (const auto &c : inst.clauses) {
        for (const auto &l : c.literals) {
            hits[l.variable] += 1.0;
        }
    }
    const double expected = 40000.0 / 8.0;
    double chi2 = 0.0;
    for (int v = 1; v <= 8; ++v) {
        chi2 += (hits[v] - expected) * (hits[v] - expected) / expected;
    }
    EXPECT_LT(chi2, 24.32);
}

TEST(instances, UniqueClauseMode) {
    GenerateOptions opts;
    opts.unique_clauses = true;
    // C(4,2) * 4 = 24 distinct 2-clauses over 4 variables.
    const auto inst = generate_instance(4, 24, 2, 3, opts);
    std::set<std::vector<Literal>> seen;
    for (const auto &c : inst.clauses) {
        auto lits = c.literals;
        std::sort(lits.begin(), lits.end());
        EXPECT_TRUE(seen.insert(lits).second);
    }
    EXPECT_THROW((void)generate_instance(4, 25, 2, 3, opts), InvalidArgument);
}

TEST(instances, ClausesForDensityRounds) {
    EXPECT_EQ(clauses_for_density(2.0, 6), 12u);
    EXPECT_EQ(clauses_for_density(0.25, 6), 2u); // 1.5 rounds away from zero
    EXPECT_EQ(clauses_for_density(4.5, 6), 27u);
    EXPECT_EQ(clauses_for_density(0.0, 6), 0u);
    EXPECT_THROW((void)clauses_for_density(-1.0, 6), InvalidArgument);
}

TEST(instances, DensityIsExact) {
    SatInstance a = generate_instance(6, 6, 2, 0);
    EXPECT_DOUBLE_EQ(density(a).value(), 1.0);
    SatInstance b = generate_instance(6, 27, 2, 0);
    EXPECT_DOUBLE_EQ(density(b).value(), 4.5);
    SatInstance c = generate_instance(10, 1, 2, 0);
    EXPECT_EQ(density(c), (Density{1, 10}));
    EXPECT_EQ(density(c).value(), 0.1);
    EXPECT_EQ((Density{2, 4}), (Density{1, 2}));
}

TEST(instances, BruteForceSingleClause) {
    const auto sol = brute_force_min_violations(from_dimacs_ints(2, {{1, 2}}));
    EXPECT_EQ(sol.min_violations, 0u);
    EXPECT_EQ(sol.assignments, (std::vector<std::uint64_t>{1, 2, 3}));
}

TEST(instances, BruteForceContradictoryUnits) {
    const auto sol = brute_force_min_violations(from_dimacs_ints(1, {{1}, {-1}}));
    EXPECT_EQ(sol.min_violations, 1u);
    EXPECT_EQ(sol.assignments, (std::vector<std::uint64_t>{0, 1}));
}

TEST(instances, BruteForceFrozenInstance) {
    // Frozen from oracle::naive_violations: satisfiable with a unique model.
    const auto inst = generate_instance(6, 30, 3, 123);
    ASSERT_EQ(oracle::naive_min_violations(inst), 0);
    const auto sol = brute_force_min_violations(inst);
    EXPECT_EQ(sol.min_violations, 0u);
    EXPECT_EQ(sol.assignments, (std::vector<std::uint64_t>{18}));
}

TEST(instances, BruteForceAgreesWithNaiveEnumeration) {
    Rng pick(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = pick.coin() ? 3 : 2;
        const int n = 3 + static_cast<int>(pick.below(6));
        const auto m = static_cast<std::size_t>(pick.below(5 * n));
        const auto inst = generate_instance(n, m, k, pick.next());
        const auto v = oracle::naive_violations(inst);
        const auto sol = brute_force_min_violations(inst);
        const int mn = *std::min_element(v.begin(), v.end());
        ASSERT_EQ(static_cast<int>(sol.min_violations), mn);
        std::vector<std::uint64_t> argmins;
        for (std::uint64_t z = 0; z < v.size(); ++z) {
            if (v[z] == mn) {
                argmins.push_back(z);
            }
        }
        ASSERT_EQ(sol.assignments, argmins);
    }
}

TEST(instances, BruteForceAgreesWithTwoSatDecision) {
    Rng pick(5150);
    int sat = 0;
    int unsat = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(pick.below(7));
        const auto m = static_cast<std::size_t>(pick.below(4 * n));
        const auto inst = generate_instance(n, m, 2, pick.next());
        const bool decided = oracle::two_sat_satisfiable(inst);
        ASSERT_EQ(brute_force_min_violations(inst).min_violations == 0, decided);
        (decided ? sat : unsat)++;
    }
    // Both outcomes exercised.
    EXPECT_GT(sat, 20);
    EXPECT_GT(unsat, 20);
}

TEST(instances, BruteForceRespectsBound) {
    const auto inst = generate_instance(26, 3, 3, 0);
    EXPECT_THROW((void)brute_force_min_violations(inst), ResourceLimit);
    EXPECT_THROW((void)brute_force_min_violations(generate_instance(8, 3, 3, 0), 6), ResourceLimit);
}
