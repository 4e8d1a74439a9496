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

#include "qreach/error.hpp"
#include "qreach/rng.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace qreach::grover {

namespace {

void require_size(int n) {
    if (n < 1 || n > 62) {
        throw InvalidArgument(fmt::format("search over {} qubits is not supported", n));
    }
}

} // namespace

TwoLevelState initial_state(int n) {
    require_size(n);
    const double N = std::ldexp(1.0, n);
    return {Complex{std::sqrt((N - 1.0) / N), 0.0}, Complex{1.0 / std::sqrt(N), 0.0}, N};
}

TwoLevelState step(const TwoLevelState &s, double gamma, double beta) {
    const double N = s.N;
    const double u_weight = std::sqrt((N - 1.0) / N); // <+|u>
    const double w_weight = 1.0 / std::sqrt(N);       // <+|w>

    const Complex a = s.a;
    const Complex b = s.b * std::polar(1.0, -gamma);
    const Complex shift = (std::polar(1.0, -beta) - 1.0) * (u_weight * a + w_weight * b);
    return {a + shift * u_weight, b + shift * w_weight, N};
}

Matrix2 layer_matrix(double N, double gamma, double beta) {
    const Complex x = std::polar(1.0, -gamma) - 1.0;
    const Complex y = std::polar(1.0, -beta) - 1.0;
    const double r = std::sqrt(N - 1.0) / N;
    return {{{1.0 + y * (N - 1.0) / N, y * r * (1.0 + x)},
             {y * r, (1.0 + x) * (1.0 + y / N)}}};
}

Matrix2 alternate_layer_matrix(double N, double gamma, double beta) {
    const Complex x = std::polar(1.0, -gamma) - 1.0;
    const Complex y = std::polar(1.0, -beta) - 1.0;
    const double r = std::sqrt(N - 1.0) / N;
    return {{{1.0 + x * (N - 1.0) / N, -x * (y + 1.0) * r},
             {-x * r, (y + 1.0) * (1.0 + x / N)}}};
}

TwoLevelState apply(const Matrix2 &m, const TwoLevelState &s) noexcept {
    return {m[0][0] * s.a + m[0][1] * s.b, m[1][0] * s.a + m[1][1] * s.b, s.N};
}

TwoLevelState evolve(int n, const ParamVector &params) {
    if (!params.well_formed()) {
        throw InvalidArgument("mismatched gamma/beta lengths");
    }
    auto s = initial_state(n);
    for (std::size_t i = 0; i < params.depth(); ++i) {
        s = step(s, params.gammas[i], params.betas[i]);
    }
    return s;
}

double energy(const TwoLevelState &s) noexcept { return 1.0 - std::norm(s.b); }

StateVector to_statevector(const TwoLevelState &s, int n, std::uint64_t target) {
    require_size(n);
    const std::size_t dim = std::size_t{1} << n;
    if (target >= dim) {
        throw InvalidArgument(fmt::format("target {} outside a {}-state space", target, dim));
    }
    const Complex spread = s.a / std::sqrt(double(dim - 1));
    std::vector<Complex> amps(dim, spread);
    amps[target] = s.b;
    return StateVector(n, std::move(amps));
}

DiagonalObjective target_projector(int n, std::uint64_t target) {
    require_size(n);
    const std::size_t dim = std::size_t{1} << n;
    if (target >= dim) {
        throw InvalidArgument(fmt::format("target {} outside a {}-state space", target, dim));
    }
    std::vector<std::uint32_t> energies(dim, 0);
    energies[target] = 1;
    return DiagonalObjective(n, std::move(energies), 1, n);
}

OptimResult minimize(int n, std::size_t p, const OptimConfig &cfg) {
    require_size(n);
    const auto start = initial_state(n);
    ObjectiveFn f = [&start](std::span<const double> x) {
        const std::size_t depth = x.size() / 2;
        auto s = start;
        for (std::size_t i = 0; i < depth; ++i) {
            s = step(s, x[i], x[depth + i]);
        }
        return energy(s);
    };
    const double two_pi = 2.0 * std::numbers::pi;
    auto outcome = multi_start_minimize(f, p, {two_pi, two_pi}, cfg, 0.0);

    OptimResult result;
    result.best_params = std::move(outcome.params);
    const auto s = evolve(n, result.best_params);
    result.energy = energy(s);
    result.deficit = result.energy;
    result.overlap = std::norm(s.b);
    result.evals_used = outcome.evals;
    result.restart_index = outcome.restart_index;
    result.converged = outcome.converged;
    return result;
}

DepthScan critical_depth(int n, double energy_tol, std::size_t p_max, const OptimConfig &cfg) {
    if (!(energy_tol > 0.0)) {
        throw InvalidArgument("energy tolerance must be positive");
    }
    DepthScan out;
    OptimConfig layer_cfg = cfg;
    for (std::size_t p = 0; p <= p_max; ++p) {
        layer_cfg.seed = derive_seed(cfg.seed, {p});
        auto res = minimize(n, p, layer_cfg);
        out.energy_by_depth.push_back(res.energy);
        layer_cfg.warm_start = res.best_params;
        const bool reached = res.energy <= energy_tol;
        out.results.push_back(std::move(res));
        if (reached) {
            out.p_star = p;
            break;
        }
    }
    return out;
}

} // namespace qreach::grover
