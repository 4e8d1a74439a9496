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

#include "qreach/optimizer.hpp"

#include "qreach/error.hpp"
#include "qreach/rng.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace qreach {

void OptimConfig::validate() const {
    if (restarts < 1) {
        throw InvalidArgument(fmt::format("restarts must be >= 1, got {}", restarts));
    }
    if (!(tolerance > 0.0)) {
        throw InvalidArgument("optimizer tolerance must be positive");
    }
    if (!(initial_step > 0.0)) {
        throw InvalidArgument("initial simplex step must be positive");
    }
    if (warm_start && !warm_start->well_formed()) {
        throw InvalidArgument("warm start has mismatched gamma/beta lengths");
    }
}

MultiStartOutcome multi_start_minimize(const ObjectiveFn &f, std::size_t p, const SearchBox &box,
                                       const OptimConfig &cfg, std::optional<double> lower_bound) {
    cfg.validate();
    MultiStartOutcome best;
    if (p == 0) {
        best.value = f({});
        best.evals = 1;
        return best;
    }

    SimplexOptions opts;
    opts.initial_step = cfg.initial_step;
    opts.max_evals = cfg.evals_for_depth(p);
    opts.tolerance = cfg.tolerance;

    const bool warm = cfg.warm_start && cfg.warm_start->depth() <= p;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> x0;
        if (r == 0 && warm) {
            x0 = cfg.warm_start->padded_to(p).flatten();
            if (lower_bound) {
                const double v = f(x0);
                ++best.evals;
                if (v <= *lower_bound + 1e-12) {
                    best.params = ParamVector::from_flat(x0);
                    best.value = v;
                    best.restart_index = 0;
                    best.converged = true;
                    return best;
                }
            }
        } else {
            Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(r)}));
            x0.resize(2 * p);
            for (std::size_t i = 0; i < p; ++i) {
                x0[i] = rng.uniform(0.0, box.gamma_hi);
            }
            for (std::size_t i = 0; i < p; ++i) {
                x0[p + i] = rng.uniform(0.0, box.beta_hi);
            }
        }
        auto res = nelder_mead(f, std::move(x0), opts);
        best.evals += res.evals;
        if (!have_best || res.value < best.value) {
            have_best = true;
            best.params = ParamVector::from_flat(res.x);
            best.value = res.value;
            best.restart_index = r;
            best.converged = res.converged;
        }
    }
    return best;
}

OptimResult minimize(const DiagonalObjective &diag, DriverKind kind, std::size_t p,
                     const OptimConfig &cfg) {
    AnsatzEvaluator evaluator(diag, kind);
    ObjectiveFn f = [&evaluator](std::span<const double> x) { return evaluator.energy(x); };
    const SearchBox box{2.0 * std::numbers::pi, beta_period(kind)};
    auto outcome = multi_start_minimize(f, p, box, cfg, double(diag.ground_energy()));

    OptimResult result;
    result.best_params = std::move(outcome.params);
    // Re-derive everything from the reported parameters.
    const StateVector psi = ansatz(diag, kind, result.best_params);
    result.energy = expectation(diag, psi.amplitudes());
    result.deficit = result.energy - diag.ground_energy();
    result.overlap = overlap(psi, diag);
    result.evals_used = outcome.evals;
    result.restart_index = outcome.restart_index;
    result.converged = outcome.converged;
    return result;
}

CriticalDepth critical_depth(const DiagonalObjective &diag, DriverKind kind, double eta_threshold,
                             std::size_t p_max, const OptimConfig &cfg) {
    if (!(eta_threshold >= 0.0 && eta_threshold <= 1.0)) {
        throw InvalidArgument(fmt::format("eta threshold {} outside [0, 1]", eta_threshold));
    }
    CriticalDepth out;
    OptimConfig layer_cfg = cfg;
    for (std::size_t p = 0; p <= p_max; ++p) {
        layer_cfg.seed = derive_seed(cfg.seed, {p});
        auto res = minimize(diag, kind, p, layer_cfg);
        out.eta_by_depth.push_back(res.overlap);
        layer_cfg.warm_start = res.best_params;
        const bool reached = res.overlap >= eta_threshold;
        out.results.push_back(std::move(res));
        if (reached) {
            out.p_star = p;
            break;
        }
    }
    return out;
}

std::vector<double> finite_difference_gradient(const ObjectiveFn &f, std::span<const double> x,
                                               double h) {
    std::vector<double> point(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        point[i] = x[i] + h;
        const double up = f(point);
        point[i] = x[i] - h;
        const double down = f(point);
        point[i] = x[i];
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

} // namespace qreach
