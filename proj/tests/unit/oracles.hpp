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

// Test-only reference implementations. They share no code with the library
// routines they check.

#include "qreach/instances.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace qreach::oracle {

/// Violated-clause count per assignment, evaluating literals as booleans.
inline std::vector<int> naive_violations(const SatInstance &inst) {
    const std::uint64_t count = std::uint64_t{1} << inst.n;
    std::vector<int> out(count, 0);
    for (std::uint64_t z = 0; z < count; ++z) {
        std::vector<bool> value(inst.n + 1);
        for (int v = 1; v <= inst.n; ++v) {
            value[v] = (z / (std::uint64_t{1} << (v - 1))) % 2 == 1;
        }
        for (const auto &c : inst.clauses) {
            bool sat = false;
            for (const auto &l : c.literals) {
                sat = sat || (l.negated ? !value[l.variable] : value[l.variable]);
            }
            out[z] += sat ? 0 : 1;
        }
    }
    return out;
}

inline int naive_min_violations(const SatInstance &inst) {
    const auto v = naive_violations(inst);
    return *std::min_element(v.begin(), v.end());
}

/// Polynomial-time 2-SAT decision via the implication graph: satisfiable iff
/// no variable shares a strongly connected component with its negation.
inline bool two_sat_satisfiable(const SatInstance &inst) {
    const int n = inst.n;
    auto node = [n](int var, bool negated) { return 2 * (var - 1) + (negated ? 1 : 0); };
    const int size = 2 * n;
    std::vector<std::vector<int>> adj(size);
    std::vector<std::vector<int>> radj(size);
    for (const auto &c : inst.clauses) {
        const auto &a = c.literals[0];
        const auto &b = c.literals[1];
        // (a or b) == (!a -> b) and (!b -> a)
        adj[node(a.variable, !a.negated)].push_back(node(b.variable, b.negated));
        adj[node(b.variable, !b.negated)].push_back(node(a.variable, a.negated));
    }
    for (int u = 0; u < size; ++u) {
        for (int v : adj[u]) {
            radj[v].push_back(u);
        }
    }
    // Kosaraju.
    std::vector<int> order;
    std::vector<bool> seen(size, false);
    std::function<void(int)> dfs1 = [&](int u) {
        seen[u] = true;
        for (int v : adj[u]) {
            if (!seen[v]) {
                dfs1(v);
            }
        }
        order.push_back(u);
    };
    for (int u = 0; u < size; ++u) {
        if (!seen[u]) {
            dfs1(u);
        }
    }
    std::vector<int> comp(size, -1);
    std::function<void(int, int)> dfs2 = [&](int u, int c) {
        comp[u] = c;
        for (int v : radj[u]) {
            if (comp[v] < 0) {
                dfs2(v, c);
            }
        }
    };
    int c = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] < 0) {
            dfs2(*it, c++);
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (comp[node(v, false)] == comp[node(v, true)]) {
            return false;
        }
    }
    return true;
}

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Dense sum_i sigma_x^(i) on n qubits.
inline CMatrix dense_sigma_x_sum(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix h = CMatrix::Zero(dim, dim);
    for (Eigen::Index z = 0; z < dim; ++z) {
        for (int q = 0; q < n; ++q) {
            h(z ^ (Eigen::Index{1} << q), z) += 1.0;
        }
    }
    return h;
}

/// exp(-i t H) for Hermitian H through its eigendecomposition.
inline CMatrix expm_hermitian(const CMatrix &h, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto &vals = es.eigenvalues();
    CVector phases(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        phases(i) = std::polar(1.0, -t * vals(i));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Dense |+><+|^{(x)n}.
inline CMatrix dense_plus_projector(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    return CMatrix::Constant(dim, dim, 1.0 / static_cast<double>(dim));
}

/// Minimum of f over an res x res grid of [0, x_hi) x [0, y_hi).
struct GridMin {
    double value;
    double x;
    double y;
};
inline GridMin grid_min(const std::function<double(double, double)> &f, double x_hi, double y_hi,
                        int res) {
    GridMin best{f(0.0, 0.0), 0.0, 0.0};
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            const double x = x_hi * i / res;
            const double y = y_hi * j / res;
            const double v = f(x, y);
            if (v < best.value) {
                best = {v, x, y};
            }
        }
    }
    return best;
}

} // namespace qreach::oracle
