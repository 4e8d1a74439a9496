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

#include "qreach/grover.hpp"
#include "qreach/rng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qreach;
using std::numbers::pi;

namespace {

ParamVector random_params(std::size_t p, Rng &rng) {
    ParamVector params;
    for (std::size_t i = 0; i < p; ++i) {
        params.gammas.push_back(rng.uniform(0.0, 2 * pi));
        params.betas.push_back(rng.uniform(0.0, 2 * pi));
    }
    return params;
}

OptimConfig quick(std::uint64_t seed) {
    OptimConfig cfg;
    cfg.seed = seed;
    cfg.restarts = 10;
    return cfg;
}

} // namespace

TEST(grover, InitialState) {
    const auto s = grover::initial_state(4);
    EXPECT_DOUBLE_EQ(s.N, 16.0);
    EXPECT_NEAR(s.a.real(), std::sqrt(15.0 / 16.0), 1e-15);
    EXPECT_NEAR(s.b.real(), 0.25, 1e-15);
    EXPECT_NEAR(grover::energy(s), 15.0 / 16.0, 1e-15);
}

TEST(grover, ZeroAnglesAreIdentity) {
    const auto s = grover::initial_state(5);
    const auto t = grover::step(s, 0.0, 0.0);
    EXPECT_EQ(t.a, s.a);
    EXPECT_EQ(t.b, s.b);
}

TEST(grover, StepMatchesLayerMatrix) {
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        const double g = rng.uniform(0.0, 2 * pi);
        const double b = rng.uniform(0.0, 2 * pi);
        grover::TwoLevelState s{{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                {rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                std::ldexp(1.0, n)};
        const auto x = grover::step(s, g, b);
        const auto y = grover::apply(grover::layer_matrix(s.N, g, b), s);
        ASSERT_LT(std::abs(x.a - y.a), 1e-13);
        ASSERT_LT(std::abs(x.b - y.b), 1e-13);
        ASSERT_NEAR(x.norm_squared(), s.norm_squared(), 1e-12);
    }
}

TEST(grover, AlternateFormIsConjugatedWithSwappedAngles) {
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const double N = std::ldexp(1.0, 1 + static_cast<int>(rng.below(10)));
        const double g = rng.uniform(0.0, 2 * pi);
        const double b = rng.uniform(0.0, 2 * pi);
        const auto alt = grover::alternate_layer_matrix(N, g, b);
        const auto m = grover::layer_matrix(N, b, g);
        const double sign[2] = {-1.0, 1.0};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                ASSERT_LT(std::abs(alt[i][j] - sign[i] * sign[j] * m[i][j]), 1e-13);
            }
        }
    }
}

TEST(grover, MatchesFullSimulator) {
    Rng rng(3);
    for (int n = 1; n <= 10; ++n) {
        const std::uint64_t target = rng.below(std::uint64_t{1} << n);
        const auto diag = grover::target_projector(n, target);
        const auto params = random_params(1 + rng.below(5), rng);
        const auto full = ansatz(diag, DriverKind::PlusProjector, params);
        const auto two = grover::to_statevector(grover::evolve(n, params), n, target);
        double d = 0.0;
        for (std::size_t z = 0; z < full.dim(); ++z) {
            d = std::max(d, std::abs(full[z] - two[z]));
        }
        ASSERT_LT(d, 1e-10) << "n=" << n;
        ASSERT_NEAR(grover::energy(grover::evolve(n, params)),
                    1.0 - expectation(diag, full.amplitudes()), 1e-10);
    }
}

TEST(grover, EnergyIndependentOfTarget) {
    Rng rng(4);
    const int n = 6;
    const auto params = random_params(3, rng);
    const double e0 = expectation(grover::target_projector(n, 0),
                                  ansatz(grover::target_projector(n, 0), DriverKind::PlusProjector, params)
                                      .amplitudes());
    for (std::uint64_t t : {1ULL, 17ULL, 63ULL}) {
        const auto diag = grover::target_projector(n, t);
        const double e = expectation(diag, ansatz(diag, DriverKind::PlusProjector, params).amplitudes());
        EXPECT_NEAR(e, e0, 1e-12);
    }
}

TEST(grover, SingleQubitSolvedAtDepthOne) {
    const auto f = [](double g, double b) {
        return grover::energy(grover::evolve(1, ParamVector{{g}, {b}}));
    };
    const auto grid = oracle::grid_min(f, 2 * pi, 2 * pi, 200);
    EXPECT_LT(grid.value, 1e-8);
    const auto r = grover::minimize(1, 1, quick(5));
    EXPECT_GT(r.overlap, 1.0 - 1e-8);
}

TEST(grover, DepthZeroEnergy) {
    const auto r = grover::minimize(6, 0, quick(6));
    EXPECT_NEAR(r.energy, 63.0 / 64.0, 1e-15);
    EXPECT_NEAR(r.overlap, 1.0 / 64.0, 1e-15);
}

TEST(grover, OptimizedEnergyNeverBelowRotationBound) {
    // With p layers the success probability cannot exceed sin^2((2p+1) theta)
    // for sin theta = N^{-1/2}, until it saturates at 1.
    for (int n : {4, 6}) {
        const double theta = std::asin(std::pow(2.0, -n / 2.0));
        for (std::size_t p = 1; p <= 3; ++p) {
            const double angle = (2.0 * p + 1.0) * theta;
            const double bound = angle >= pi / 2 ? 1.0 : std::pow(std::sin(angle), 2);
            const auto r = grover::minimize(n, p, quick(7 + p));
            EXPECT_LE(r.overlap, bound + 1e-9);
            EXPECT_GE(r.overlap, bound - 1e-6) << "n=" << n << " p=" << p;
        }
    }
}

TEST(grover, CriticalDepthGrowsLikeSqrtN) {
    const auto s6 = grover::critical_depth(6, 1e-4, 40, quick(8));
    const auto s8 = grover::critical_depth(8, 1e-4, 40, quick(9));
    ASSERT_TRUE(s6.p_star.has_value());
    ASSERT_TRUE(s8.p_star.has_value());
    const double ratio = static_cast<double>(*s8.p_star) / static_cast<double>(*s6.p_star);
    EXPECT_GE(ratio, 1.6);
    EXPECT_LE(ratio, 2.4);
    for (std::size_t p = 1; p < s8.energy_by_depth.size(); ++p) {
        EXPECT_LE(s8.energy_by_depth[p], s8.energy_by_depth[p - 1] + 1e-12);
    }
}

TEST(grover, CriticalDepthMonotoneInN) {
    std::size_t last = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto s = grover::critical_depth(n, 1e-4, 20, quick(10 + n));
        ASSERT_TRUE(s.p_star.has_value());
        EXPECT_GE(*s.p_star, last) << "n=" << n;
        last = *s.p_star;
    }
}

TEST(grover, NormPreservedUpToTwentyQubits) {
    Rng rng(20);
    for (int n = 1; n <= 20; ++n) {
        EXPECT_NEAR(grover::initial_state(n).norm_squared(), 1.0, 1e-15);
        const auto s = grover::evolve(n, random_params(6, rng));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10) << "n=" << n;
    }
}

TEST(grover, LooseToleranceGivesDepthZero) {
    const auto s = grover::critical_depth(6, 1.0 - 1.0 / 64.0, 5, quick(21));
    ASSERT_TRUE(s.p_star.has_value());
    EXPECT_EQ(*s.p_star, 0u);
}

TEST(grover, SingleQubitCriticalDepthIsOne) {
    const auto s = grover::critical_depth(1, 1e-4, 5, quick(22));
    ASSERT_TRUE(s.p_star.has_value());
    EXPECT_EQ(*s.p_star, 1u);
}

TEST(grover, TargetReachedMeansZeroEnergy) {
    EXPECT_EQ(grover::energy({0.0, 1.0, 8.0}), 0.0);
}
