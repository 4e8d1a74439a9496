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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace qreach {

/// Name of the generator recorded in run manifests. Changing the engine or the
/// derivation scheme below breaks reproducibility of every stored seed.
inline constexpr std::string_view kRngIdentity =
    "std::mt19937_64 (seeded directly); sub-seeds via splitmix64 mixing; "
    "bounded ints by rejection on the raw 64-bit stream; reals = top 53 bits * 2^-53";

/// One round of the splitmix64 finalizer.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministically combine a seed with a list of integer keys.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base,
                                        std::initializer_list<std::uint64_t> keys) noexcept;

/// Thin wrapper around mt19937_64 with platform-independent draws.
///
/// The standard distributions are implementation defined, so all draws here go
/// through the raw engine output.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform real in [0, 1).
    double uniform();

    /// Uniform real in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool coin() { return (next() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

} // namespace qreach
