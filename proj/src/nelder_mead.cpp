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

#include "qreach/nelder_mead.hpp"

#include "qreach/error.hpp"

#include <algorithm>
#include <numeric>

namespace qreach {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

class Simplex {
  public:
    Simplex(const ObjectiveFn &f, const SimplexOptions &opts, std::size_t &evals)
        : f_(f), opts_(opts), evals_(evals) {}

    /// One descent from `start`; returns true when the spread criterion fired.
    bool run(Vertex &start) {
        const std::size_t d = start.x.size();
        const double dd = static_cast<double>(d);
        // Coefficients degenerate (shrink = 0) below two dimensions.
        const double da = std::max(dd, 2.0);
        const double expand = 1.0 + 2.0 / da;
        const double contract = 0.75 - 0.5 / da;
        const double shrink = 1.0 - 1.0 / da;

        std::vector<Vertex> v;
        v.reserve(d + 1);
        v.push_back(start);
        for (std::size_t i = 0; i < d && evals_ < opts_.max_evals; ++i) {
            auto x = start.x;
            x[i] += opts_.initial_step;
            v.push_back({x, eval(x)});
        }
        if (v.size() != d + 1) {
            keep_best(v, start);
            return false;
        }

        std::vector<double> centroid(d);
        std::vector<double> trial(d);
        auto point = [&](double t, const std::vector<double> &worst) {
            // centroid + t (centroid - worst)
            for (std::size_t j = 0; j < d; ++j) {
                trial[j] = centroid[j] + t * (centroid[j] - worst[j]);
            }
            return trial;
        };

        bool converged = false;
        while (true) {
            // Stable sort keeps tie order deterministic.
            std::stable_sort(v.begin(), v.end(),
                             [](const Vertex &a, const Vertex &b) { return a.f < b.f; });
            if (v.back().f - v.front().f < opts_.tolerance) {
                converged = true;
                break;
            }
            if (evals_ >= opts_.max_evals) {
                break;
            }
            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    centroid[j] += v[i].x[j];
                }
            }
            for (auto &c : centroid) {
                c /= dd;
            }
            Vertex &worst = v.back();
            const double second_worst = v[d - 1].f;

            auto xr = point(1.0, worst.x);
            const double fr = eval(xr);
            if (evals_ >= opts_.max_evals) {
                if (fr < worst.f) {
                    worst = {std::move(xr), fr};
                }
                continue;
            }
            if (fr < v.front().f) {
                auto xe = point(expand, worst.x);
                const double fe = eval(xe);
                if (fe < fr) {
                    worst = {std::move(xe), fe};
                } else {
                    worst = {std::move(xr), fr};
                }
                continue;
            }
            if (fr < second_worst) {
                worst = {std::move(xr), fr};
                continue;
            }
            // Outside contraction when the reflection beat the worst vertex,
            // inside contraction otherwise.
            const bool outside = fr < worst.f;
            auto xc = point(outside ? contract : -contract, worst.x);
            const double fc = eval(xc);
            if (fc < (outside ? fr : worst.f)) {
                worst = {std::move(xc), fc};
                continue;
            }
            for (std::size_t i = 1; i <= d && evals_ < opts_.max_evals; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    v[i].x[j] = v[0].x[j] + shrink * (v[i].x[j] - v[0].x[j]);
                }
                v[i].f = eval(v[i].x);
            }
        }
        keep_best(v, start);
        return converged;
    }

  private:
    double eval(const std::vector<double> &x) {
        ++evals_;
        return f_(x);
    }

    static void keep_best(const std::vector<Vertex> &v, Vertex &best) {
        for (const auto &vert : v) {
            if (vert.f < best.f) {
                best = vert;
            }
        }
    }

    const ObjectiveFn &f_;
    const SimplexOptions &opts_;
    std::size_t &evals_;
};

} // namespace

SimplexResult nelder_mead(const ObjectiveFn &f, std::vector<double> x0,
                          const SimplexOptions &opts) {
    if (!(opts.tolerance > 0.0)) {
        throw InvalidArgument("simplex tolerance must be positive");
    }
    SimplexResult result;
    if (x0.empty()) {
        result.value = f(x0);
        result.evals = 1;
        result.converged = true;
        result.x = std::move(x0);
        return result;
    }
    std::size_t evals = 1;
    Vertex best{x0, f(x0)};
    Simplex simplex(f, opts, evals);

    bool converged = simplex.run(best);
    for (int r = 0; converged && r < opts.max_rebuilds && evals < opts.max_evals; ++r) {
        const double before = best.f;
        converged = simplex.run(best);
        if (before - best.f <= opts.tolerance) {
            break;
        }
    }
    result.x = std::move(best.x);
    result.value = best.f;
    result.evals = evals;
    result.converged = converged;
    return result;
}

} // namespace qreach
