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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qreach {

using ObjectiveFn = std::function<double(std::span<const double>)>;

struct SimplexOptions {
    double initial_step = 0.5;   ///< edge length of the starting simplex
    std::size_t max_evals = 5000;
    double tolerance = 1e-8;     ///< stop when f_max - f_min over the simplex drops below
    /// After a converged run the simplex is rebuilt around the best vertex
    /// and descent resumes; this bounds how many times. A rebuild that does
    /// not improve by more than `tolerance` ends the search.
    int max_rebuilds = 2;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

/// Downhill simplex minimization with dimension-adaptive coefficients
/// (reflection 1, expansion 1+2/d, contraction 0.75-1/(2d), shrink 1-1/d).
///
/// The returned value is never worse than f(x0), and it is exactly the value
/// `f` produced at the returned point.
[[nodiscard]] SimplexResult nelder_mead(const ObjectiveFn &f, std::vector<double> x0,
                                        const SimplexOptions &opts = {});

} // namespace qreach
