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

#include "qreach/nelder_mead.hpp"
#include "qreach/objective.hpp"
#include "qreach/simulator.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qreach {

struct OptimConfig {
    int restarts = 20;
    /// Per-restart evaluation budget; 0 means 5000 * p.
    std::size_t max_evals = 0;
    /// Simplex energy-spread stopping threshold.
    double tolerance = 1e-8;
    std::uint64_t seed = 0;
    /// Parameters from a shallower circuit. Padded with zero layers and used
    /// as restart 0; the other restarts start uniformly in the search box.
    std::optional<ParamVector> warm_start;
    double initial_step = 0.5;

    void validate() const;
    [[nodiscard]] std::size_t evals_for_depth(std::size_t p) const noexcept {
        return max_evals != 0 ? max_evals : 5000 * p;
    }
};

struct OptimResult {
    ParamVector best_params;
    double energy = 0.0;  ///< best expectation found
    double deficit = 0.0; ///< energy - ground energy
    double overlap = 0.0; ///< ground-space probability at best_params
    std::size_t evals_used = 0;
    int restart_index = 0;
    bool converged = true;
};

/// Search box for the angles: gamma in [0, gamma_hi), beta in [0, beta_hi).
struct SearchBox {
    double gamma_hi;
    double beta_hi;
};

struct MultiStartOutcome {
    ParamVector params;
    double value = 0.0;
    std::size_t evals = 0;
    int restart_index = 0;
    bool converged = true;
};

/// Multi-start simplex descent over 2p angles (flat layout gammas, betas).
///
/// Each restart r draws its start from a sub-seed derived from (cfg.seed, r).
/// The lowest value wins; ties go to the lowest restart index. If the warm
/// start already attains `lower_bound`, it is returned without searching.
[[nodiscard]] MultiStartOutcome multi_start_minimize(const ObjectiveFn &f, std::size_t p,
                                                     const SearchBox &box, const OptimConfig &cfg,
                                                     std::optional<double> lower_bound = {});

/// Best QAOA energy at depth p for the given driver.
[[nodiscard]] OptimResult minimize(const DiagonalObjective &diag, DriverKind kind, std::size_t p,
                                   const OptimConfig &cfg);

struct CriticalDepth {
    std::optional<std::size_t> p_star; ///< empty when not reached by p_max
    std::vector<double> eta_by_depth;  ///< index = depth, starting at 0
    std::vector<OptimResult> results;
};

/// Smallest depth whose optimized state has ground overlap >= eta_threshold.
/// Depths are scanned from 0 upward, warm-starting each from the last.
[[nodiscard]] CriticalDepth critical_depth(const DiagonalObjective &diag, DriverKind kind,
                                           double eta_threshold, std::size_t p_max,
                                           const OptimConfig &cfg);

/// Central finite-difference gradient. Diagnostics only.
[[nodiscard]] std::vector<double> finite_difference_gradient(const ObjectiveFn &f,
                                                             std::span<const double> x,
                                                             double h = 1e-6);

} // namespace qreach
