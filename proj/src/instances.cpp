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

#include "qreach/instances.hpp"

#include "qreach/error.hpp"
#include "qreach/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <set>

namespace qreach {

bool Clause::satisfied_by(std::uint64_t assignment) const noexcept {
    return std::any_of(literals.begin(), literals.end(),
                       [assignment](const Literal &l) { return l.eval(assignment); });
}

void SatInstance::validate() const {
    if (n < 1) {
        throw InvalidArgument("instance needs at least one variable");
    }
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        const auto &lits = clauses[c].literals;
        if (static_cast<int>(lits.size()) != k) {
            throw InvalidArgument(
                fmt::format("clause {} has width {}, expected {}", c, lits.size(), k));
        }
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (lits[i].variable < 1 || lits[i].variable > n) {
                throw InvalidArgument(fmt::format("clause {} names variable {} outside [1, {}]",
                                                  c, lits[i].variable, n));
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (lits[i].variable == lits[j].variable) {
                    throw InvalidArgument(
                        fmt::format("clause {} repeats variable {}", c, lits[i].variable));
                }
            }
        }
    }
}

namespace {

std::vector<Literal> canonical(const Clause &c) {
    auto lits = c.literals;
    std::sort(lits.begin(), lits.end());
    return lits;
}

double distinct_clause_count(int n, int k) {
    double binom = 1.0;
    for (int i = 0; i < k; ++i) {
        binom = binom * (n - i) / (i + 1);
    }
    return binom * std::ldexp(1.0, k);
}

} // namespace

SatInstance generate_instance(int n, std::size_t m, int k, std::uint64_t seed,
                              const GenerateOptions &opts) {
    if (n < 1) {
        throw InvalidArgument("n must be positive");
    }
    if (k != 2 && k != 3) {
        throw InvalidArgument(fmt::format("k must be 2 or 3, got {}", k));
    }
    if (k > n) {
        throw InvalidArgument(fmt::format("k = {} exceeds n = {}", k, n));
    }
    if (opts.unique_clauses && static_cast<double>(m) > distinct_clause_count(n, k)) {
        throw InvalidArgument(fmt::format(
            "{} unique {}-clauses requested but only {} exist over {} variables", m, k,
            distinct_clause_count(n, k), n));
    }

    SatInstance inst;
    inst.n = n;
    inst.k = k;
    inst.seed = seed;
    inst.clauses.reserve(m);

    Rng rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::set<std::vector<Literal>> seen;

    while (inst.clauses.size() < m) {
        // Partial Fisher-Yates over a fresh identity pool.
        std::iota(pool.begin(), pool.end(), 1);
        Clause clause;
        clause.literals.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            clause.literals.push_back({pool[static_cast<std::size_t>(i)], false});
        }
        for (auto &lit : clause.literals) {
            lit.negated = rng.coin();
        }
        if (opts.unique_clauses && !seen.insert(canonical(clause)).second) {
            continue;
        }
        inst.clauses.push_back(std::move(clause));
    }
    return inst;
}

std::size_t clauses_for_density(double alpha, int n) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument(fmt::format("density must be finite and nonnegative, got {}", alpha));
    }
    return static_cast<std::size_t>(std::llround(alpha * n));
}

Density density(const SatInstance &inst) {
    if (inst.n < 1) {
        throw InvalidArgument("density of an instance with no variables");
    }
    return {inst.m(), static_cast<std::size_t>(inst.n)};
}

MaxSatSolution brute_force_min_violations(const SatInstance &inst, int max_n) {
    if (inst.n > max_n) {
        throw ResourceLimit(
            fmt::format("n = {} exceeds the enumeration bound of {}", inst.n, max_n));
    }
    MaxSatSolution best;
    best.min_violations = inst.m() + 1;
    const std::uint64_t count = std::uint64_t{1} << inst.n;
    for (std::uint64_t z = 0; z < count; ++z) {
        std::size_t violated = 0;
        for (const auto &c : inst.clauses) {
            violated += c.satisfied_by(z) ? 0 : 1;
        }
        if (violated < best.min_violations) {
            best.min_violations = violated;
            best.assignments.clear();
        }
        if (violated == best.min_violations) {
            best.assignments.push_back(z);
        }
    }
    return best;
}

} // namespace qreach
