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

#include "qreach/simulator.hpp"

#include "qreach/error.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace qreach {

namespace {

void require_same_dim(const StateVector &psi, const DiagonalObjective &diag) {
    if (psi.dim() != diag.dim()) {
        throw InvalidArgument(fmt::format("state of dimension {} does not match objective of dimension {}",
                                          psi.dim(), diag.dim()));
    }
}

void fill_phase_table(std::vector<Complex> &table, std::uint32_t max_energy, double gamma) {
    table.resize(max_energy + 1);
    for (std::uint32_t e = 0; e <= max_energy; ++e) {
        table[e] = std::polar(1.0, -gamma * e);
    }
}

void phase_kernel(std::span<Complex> amps, std::span<const std::uint32_t> energies,
                  std::span<const Complex> table) {
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] *= table[energies[z]];
    }
}

// exp(-i beta sigma_x) on every qubit. The factors commute, so order is free.
void transverse_kernel(std::span<Complex> amps, int n, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const std::size_t dim = amps.size();
    for (int q = 0; q < n; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t j = base; j < base + stride; ++j) {
                const Complex a = amps[j];
                const Complex b = amps[j + stride];
                // [[c, -is], [-is, c]]
                amps[j] = {c * a.real() + s * b.imag(), c * a.imag() - s * b.real()};
                amps[j + stride] = {s * a.imag() + c * b.real(), -s * a.real() + c * b.imag()};
            }
        }
    }
}

// psi + (e^{-i beta} - 1) <+|psi> |+>
void projector_kernel(std::span<Complex> amps, double beta) {
    Complex sum{0.0, 0.0};
    for (const auto &a : amps) {
        sum += a;
    }
    const Complex shift = (std::polar(1.0, -beta) - 1.0) * sum / static_cast<double>(amps.size());
    for (auto &a : amps) {
        a += shift;
    }
}

} // namespace

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    if (n < 0 || n > 62 || amps_.size() != (std::size_t{1} << n)) {
        throw InvalidArgument(
            fmt::format("{} amplitudes do not describe {} qubits", amps_.size(), n));
    }
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> ParamVector::flatten() const {
    std::vector<double> flat(gammas);
    flat.insert(flat.end(), betas.begin(), betas.end());
    return flat;
}

ParamVector ParamVector::from_flat(std::span<const double> flat) {
    if (flat.size() % 2 != 0) {
        throw InvalidArgument(fmt::format("odd parameter count {}", flat.size()));
    }
    const std::size_t p = flat.size() / 2;
    return {{flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p)},
            {flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end()}};
}

ParamVector ParamVector::padded_to(std::size_t p) const {
    if (p < depth()) {
        throw InvalidArgument(fmt::format("cannot pad depth {} down to {}", depth(), p));
    }
    ParamVector out = *this;
    out.gammas.resize(p, 0.0);
    out.betas.resize(p, 0.0);
    return out;
}

std::string_view to_string(DriverKind kind) noexcept {
    switch (kind) {
    case DriverKind::TransverseField:
        return "x";
    case DriverKind::PlusProjector:
        return "proj";
    }
    return "?";
}

DriverKind parse_driver(std::string_view name) {
    if (name == "x" || name == "transverse" || name == "sigma-x") {
        return DriverKind::TransverseField;
    }
    if (name == "proj" || name == "plus" || name == "projector") {
        return DriverKind::PlusProjector;
    }
    throw InvalidArgument(fmt::format("unknown driver '{}' (use x or proj)", name));
}

double beta_period(DriverKind kind) noexcept {
    return kind == DriverKind::TransverseField ? std::numbers::pi : 2.0 * std::numbers::pi;
}

StateVector plus_state(int n, int max_n) {
    if (n < 1) {
        throw InvalidArgument("plus_state needs n >= 1");
    }
    if (n > max_n) {
        throw ResourceLimit(fmt::format("n = {} exceeds the statevector bound of {}", n, max_n));
    }
    const std::size_t dim = std::size_t{1} << n;
    return StateVector(n, std::vector<Complex>(dim, Complex{1.0 / std::sqrt(double(dim)), 0.0}));
}

void apply_phase(StateVector &psi, const DiagonalObjective &diag, double gamma) {
    require_same_dim(psi, diag);
    std::vector<Complex> table;
    fill_phase_table(table, diag.max_energy(), gamma);
    phase_kernel(psi.amplitudes(), diag.energies(), table);
}

void apply_driver(StateVector &psi, DriverKind kind, double beta) {
    switch (kind) {
    case DriverKind::TransverseField:
        transverse_kernel(psi.amplitudes(), psi.n(), beta);
        break;
    case DriverKind::PlusProjector:
        projector_kernel(psi.amplitudes(), beta);
        break;
    }
}

StateVector ansatz(const DiagonalObjective &diag, DriverKind kind, const ParamVector &params) {
    if (!params.well_formed()) {
        throw InvalidArgument(fmt::format("{} gammas but {} betas", params.gammas.size(),
                                          params.betas.size()));
    }
    StateVector psi = plus_state(diag.n());
    for (std::size_t i = 0; i < params.depth(); ++i) {
        apply_phase(psi, diag, params.gammas[i]);
        apply_driver(psi, kind, params.betas[i]);
    }
    return psi;
}

double overlap(const StateVector &psi, const DiagonalObjective &diag) {
    require_same_dim(psi, diag);
    double total = 0.0;
    for (std::uint64_t z : diag.ground_set()) {
        total += std::norm(psi[z]);
    }
    return total;
}

AnsatzEvaluator::AnsatzEvaluator(const DiagonalObjective &diag, DriverKind kind)
    : diag_(diag), kind_(kind), psi_(plus_state(diag.n())) {}

void AnsatzEvaluator::prepare(std::span<const double> flat_params) {
    if (flat_params.size() % 2 != 0) {
        throw InvalidArgument(fmt::format("odd parameter count {}", flat_params.size()));
    }
    const std::size_t p = flat_params.size() / 2;
    auto amps = psi_.amplitudes();
    std::fill(amps.begin(), amps.end(), Complex{1.0 / std::sqrt(double(amps.size())), 0.0});
    for (std::size_t i = 0; i < p; ++i) {
        fill_phase_table(phase_table_, diag_.max_energy(), flat_params[i]);
        phase_kernel(amps, diag_.energies(), phase_table_);
        apply_driver(psi_, kind_, flat_params[p + i]);
    }
}

double AnsatzEvaluator::energy(std::span<const double> flat_params) {
    prepare(flat_params);
    return expectation(diag_, psi_.amplitudes());
}

} // namespace qreach
