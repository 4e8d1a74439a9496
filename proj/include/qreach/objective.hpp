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

#include "qreach/instances.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qreach {

/// Diagonal of the clause-penalty Hamiltonian in the computational basis.
///
/// Basis index z stores variable i in bit (i-1); a set bit means TRUE. Each
/// entry counts the clauses violated by that assignment.
class DiagonalObjective {
  public:
    /// Builds from raw energies (used for non-SAT diagonals such as the
    /// single-target search objective). `clause_count` bounds the energies.
    DiagonalObjective(int n, std::vector<std::uint32_t> energies, std::size_t clause_count,
                      int clause_width);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return energies_.size(); }
    [[nodiscard]] std::size_t clause_count() const noexcept { return m_; }
    [[nodiscard]] int clause_width() const noexcept { return k_; }
    [[nodiscard]] std::span<const std::uint32_t> energies() const noexcept { return energies_; }
    [[nodiscard]] std::uint32_t ground_energy() const noexcept { return ground_energy_; }
    [[nodiscard]] std::uint32_t max_energy() const noexcept { return max_energy_; }
    /// Ascending basis indices attaining the ground energy; size is the degeneracy d.
    [[nodiscard]] std::span<const std::uint64_t> ground_set() const noexcept { return ground_set_; }

  private:
    int n_;
    std::size_t m_;
    int k_;
    std::vector<std::uint32_t> energies_;
    std::uint32_t ground_energy_ = 0;
    std::uint32_t max_energy_ = 0;
    std::vector<std::uint64_t> ground_set_;
};

/// Adds 1 on every basis state matching each clause's single violating
/// local assignment (2^(n-k) states per clause).
[[nodiscard]] DiagonalObjective embed(const SatInstance &inst, int max_n = kMaxEnumerationQubits);

/// <psi|H|psi> = sum_z |psi_z|^2 energies[z].
[[nodiscard]] double expectation(const DiagonalObjective &diag,
                                 std::span<const std::complex<double>> amplitudes);

} // namespace qreach
