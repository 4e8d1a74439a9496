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

#include "qreach/optimizer.hpp"
#include "qreach/simulator.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace qreach::grover {

/// State in the span of |u> = (N-1)^{-1/2} sum_{x != w} |x> and the target |w>:
/// psi = a |u> + b |w>.
struct TwoLevelState {
    Complex a;
    Complex b;
    double N = 2.0; ///< search-space size 2^n

    [[nodiscard]] double norm_squared() const noexcept { return std::norm(a) + std::norm(b); }
};

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Uniform superposition: a = sqrt((N-1)/N), b = 1/sqrt(N).
[[nodiscard]] TwoLevelState initial_state(int n);

/// One layer: phase 1 + (e^{-i gamma} - 1)|w><w|, then mixer
/// 1 + (e^{-i beta} - 1)|+><+|, restricted to the (a, b) plane.
[[nodiscard]] TwoLevelState step(const TwoLevelState &s, double gamma, double beta);

/// The same layer as an explicit 2x2 matrix acting on (a, b).
[[nodiscard]] Matrix2 layer_matrix(double N, double gamma, double beta);

/// The layer matrix in an alternative form
///   [[1 + x(N-1)/N, -x(y+1)sqrt(N-1)/N], [-x sqrt(N-1)/N, (y+1)(1+x/N)]]
/// with x = e^{-i gamma}-1, y = e^{-i beta}-1. It equals
/// D layer_matrix(N, beta, gamma) D with D = diag(-1, 1): the two angle roles
/// are exchanged and |u> carries the opposite sign. Kept for comparison only;
/// `step` is the form that agrees with the full simulator.
[[nodiscard]] Matrix2 alternate_layer_matrix(double N, double gamma, double beta);

[[nodiscard]] TwoLevelState apply(const Matrix2 &m, const TwoLevelState &s) noexcept;

/// Runs `params.depth()` layers from the initial state.
[[nodiscard]] TwoLevelState evolve(int n, const ParamVector &params);

/// 1 - |b|^2
[[nodiscard]] double energy(const TwoLevelState &s) noexcept;

/// Expands the two-level state into 2^n amplitudes with the given target.
[[nodiscard]] StateVector to_statevector(const TwoLevelState &s, int n, std::uint64_t target = 0);

/// Diagonal of |w><w|: 1 on the target, 0 elsewhere. Its phase unitary is
/// exactly the layer's 1 + (e^{-i gamma} - 1)|w><w|.
[[nodiscard]] DiagonalObjective target_projector(int n, std::uint64_t target = 0);

/// Minimizes 1 - |b_p|^2 over 2p angles with the analytic recursion.
/// Both angle boxes are [0, 2 pi). `overlap` in the result is |b_p|^2.
[[nodiscard]] OptimResult minimize(int n, std::size_t p, const OptimConfig &cfg);

struct DepthScan {
    std::optional<std::size_t> p_star;
    std::vector<double> energy_by_depth; ///< index = depth, from 0
    std::vector<OptimResult> results;
};

/// Smallest p whose optimized energy is <= energy_tol, scanning p = 0, 1, ...
/// with each depth warm-started from the previous one.
[[nodiscard]] DepthScan critical_depth(int n, double energy_tol, std::size_t p_max,
                                       const OptimConfig &cfg);

} // namespace qreach::grover
