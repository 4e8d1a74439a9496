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

#include "qreach/objective.hpp"

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qreach {

using Complex = std::complex<double>;

/// Dense amplitude buffer over n qubits.
class StateVector {
  public:
    StateVector(int n, std::vector<Complex> amplitudes);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex &operator[](std::size_t z) noexcept { return amps_[z]; }
    const Complex &operator[](std::size_t z) const noexcept { return amps_[z]; }
    [[nodiscard]] double norm_squared() const noexcept;

  private:
    int n_;
    std::vector<Complex> amps_;
};

/// QAOA angles, stored as p phase angles followed by p mixer angles.
struct ParamVector {
    std::vector<double> gammas;
    std::vector<double> betas;

    [[nodiscard]] std::size_t depth() const noexcept { return gammas.size(); }
    [[nodiscard]] bool well_formed() const noexcept { return gammas.size() == betas.size(); }

    /// Flat layout (gamma_1..gamma_p, beta_1..beta_p).
    [[nodiscard]] std::vector<double> flatten() const;
    [[nodiscard]] static ParamVector from_flat(std::span<const double> flat);

    /// Appends (gamma, beta) = (0, 0) layers up to depth p. Zero layers are
    /// identities, so the padded circuit prepares the same state.
    [[nodiscard]] ParamVector padded_to(std::size_t p) const;

    friend bool operator==(const ParamVector &, const ParamVector &) = default;
};

enum class DriverKind {
    TransverseField, ///< sum_i sigma_x^(i)
    PlusProjector,   ///< (|+><+|)^{(x)n}
};

[[nodiscard]] std::string_view to_string(DriverKind kind) noexcept;
/// Accepts "x", "transverse", "proj", "plus", "projector". Throws InvalidArgument.
[[nodiscard]] DriverKind parse_driver(std::string_view name);

/// Upper end of the default mixer-angle search box: pi for the transverse
/// field (the energy is pi-periodic in each beta), 2*pi for the projector.
[[nodiscard]] double beta_period(DriverKind kind) noexcept;

[[nodiscard]] StateVector plus_state(int n, int max_n = kMaxEnumerationQubits);

/// psi_z <- exp(-i gamma energies[z]) psi_z
void apply_phase(StateVector &psi, const DiagonalObjective &diag, double gamma);
/// psi <- exp(-i beta H_x) psi
void apply_driver(StateVector &psi, DriverKind kind, double beta);

/// prod_{i=1..p} exp(-i beta_i H_x) exp(-i gamma_i V) |+>^n, phase first in
/// each layer.
[[nodiscard]] StateVector ansatz(const DiagonalObjective &diag, DriverKind kind,
                                 const ParamVector &params);

/// Probability mass on the ground set of `diag`.
[[nodiscard]] double overlap(const StateVector &psi, const DiagonalObjective &diag);

/// Reusable buffers for repeated ansatz evaluation on one objective. Not
/// thread-safe; give each worker its own.
class AnsatzEvaluator {
  public:
    AnsatzEvaluator(const DiagonalObjective &diag, DriverKind kind);

    /// Prepares the ansatz for flat params (gammas then betas) in the
    /// internal buffer and returns its energy.
    double energy(std::span<const double> flat_params);
    /// State left by the last `energy` call.
    [[nodiscard]] const StateVector &state() const noexcept { return psi_; }

    [[nodiscard]] const DiagonalObjective &objective() const noexcept { return diag_; }
    [[nodiscard]] DriverKind driver() const noexcept { return kind_; }

  private:
    void prepare(std::span<const double> flat_params);

    const DiagonalObjective &diag_;
    DriverKind kind_;
    StateVector psi_;
    std::vector<Complex> phase_table_;
};

} // namespace qreach
