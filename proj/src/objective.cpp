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

#include "qreach/objective.hpp"

#include "qreach/error.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace qreach {

DiagonalObjective::DiagonalObjective(int n, std::vector<std::uint32_t> energies,
                                     std::size_t clause_count, int clause_width)
    : n_(n), m_(clause_count), k_(clause_width), energies_(std::move(energies)) {
    if (n < 1 || n > 62 || energies_.size() != (std::size_t{1} << n)) {
        throw InvalidArgument(fmt::format("diagonal of length {} does not match n = {}",
                                          energies_.size(), n));
    }
    ground_energy_ = *std::min_element(energies_.begin(), energies_.end());
    max_energy_ = *std::max_element(energies_.begin(), energies_.end());
    for (std::uint64_t z = 0; z < energies_.size(); ++z) {
        if (energies_[z] == ground_energy_) {
            ground_set_.push_back(z);
        }
    }
}

DiagonalObjective embed(const SatInstance &inst, int max_n) {
    if (inst.n > max_n) {
        throw ResourceLimit(
            fmt::format("n = {} exceeds the statevector bound of {}", inst.n, max_n));
    }
    inst.validate();
    const std::uint64_t dim = std::uint64_t{1} << inst.n;
    std::vector<std::uint32_t> energies(dim, 0);

    for (const auto &clause : inst.clauses) {
        // The clause fails only when every literal is false: positive literals
        // need bit 0, negated literals need bit 1.
        std::uint64_t mask = 0;
        std::uint64_t pattern = 0;
        for (const auto &lit : clause.literals) {
            const std::uint64_t bit = std::uint64_t{1} << (lit.variable - 1);
            mask |= bit;
            if (lit.negated) {
                pattern |= bit;
            }
        }
        // Walk every assignment of the free bits.
        const std::uint64_t free = (dim - 1) & ~mask;
        std::uint64_t sub = 0;
        do {
            ++energies[sub | pattern];
            sub = (sub - free) & free;
        } while (sub != 0);
    }
    return DiagonalObjective(inst.n, std::move(energies), inst.m(), inst.k);
}

double expectation(const DiagonalObjective &diag,
                   std::span<const std::complex<double>> amplitudes) {
    if (amplitudes.size() != diag.dim()) {
        throw InvalidArgument(fmt::format("state of length {} does not match diagonal of length {}",
                                          amplitudes.size(), diag.dim()));
    }
    const auto energies = diag.energies();
    double total = 0.0;
    for (std::size_t z = 0; z < amplitudes.size(); ++z) {
        total += std::norm(amplitudes[z]) * energies[z];
    }
    return total;
}

} // namespace qreach
