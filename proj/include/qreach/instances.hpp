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
#include <cstdint>
#include <optional>
#include <vector>

namespace qreach {

/// Default cap on n for exhaustive enumeration and dense diagonals.
inline constexpr int kMaxEnumerationQubits = 24;

struct Literal {
    int variable = 1; ///< 1-based variable index
    bool negated = false;

    /// Truth value of the literal under `assignment`, where bit (variable-1)
    /// holds the value of the variable.
    [[nodiscard]] bool eval(std::uint64_t assignment) const noexcept {
        const bool value = ((assignment >> (variable - 1)) & 1U) != 0;
        return value != negated;
    }

    /// DIMACS integer form: +v or -v.
    [[nodiscard]] int dimacs() const noexcept { return negated ? -variable : variable; }

    friend bool operator==(const Literal &, const Literal &) = default;
    friend auto operator<=>(const Literal &, const Literal &) = default;
};

/// A disjunction of literals over pairwise-distinct variables.
struct Clause {
    std::vector<Literal> literals;

    [[nodiscard]] std::size_t width() const noexcept { return literals.size(); }
    [[nodiscard]] bool satisfied_by(std::uint64_t assignment) const noexcept;

    friend bool operator==(const Clause &, const Clause &) = default;
};

/// Exact clause density m/n.
struct Density {
    std::size_t clauses = 0;
    std::size_t variables = 1;

    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(clauses) / static_cast<double>(variables);
    }
    friend bool operator==(const Density &a, const Density &b) noexcept {
        return a.clauses * b.variables == b.clauses * a.variables;
    }
};

struct SatInstance {
    int n = 0;
    int k = 0; ///< common clause width; 0 for an empty parsed instance
    std::vector<Clause> clauses;
    std::optional<std::uint64_t> seed; ///< generator seed; absent when parsed

    [[nodiscard]] std::size_t m() const noexcept { return clauses.size(); }

    /// Throws InvalidArgument if any clause breaks the width/variable invariants.
    void validate() const;

    /// Same formula (seed is metadata and is ignored).
    [[nodiscard]] bool same_formula(const SatInstance &other) const {
        return n == other.n && k == other.k && clauses == other.clauses;
    }
};

struct GenerateOptions {
    /// Reject clauses already present in the instance (as literal sets).
    bool unique_clauses = false;
};

/// Random k-SAT instance: each clause draws k distinct variables uniformly
/// without replacement and independent fair polarities. Clauses are drawn
/// independently, so duplicates across the instance are allowed unless
/// `opts.unique_clauses` is set.
[[nodiscard]] SatInstance generate_instance(int n, std::size_t m, int k, std::uint64_t seed,
                                            const GenerateOptions &opts = {});

/// m = round(alpha * n), half away from zero.
[[nodiscard]] std::size_t clauses_for_density(double alpha, int n);

[[nodiscard]] Density density(const SatInstance &inst);

struct MaxSatSolution {
    std::size_t min_violations = 0;
    std::vector<std::uint64_t> assignments; ///< ascending
};

/// Exhaustive MAX-SAT over all 2^n assignments.
[[nodiscard]] MaxSatSolution brute_force_min_violations(const SatInstance &inst,
                                                        int max_n = kMaxEnumerationQubits);

} // namespace qreach
