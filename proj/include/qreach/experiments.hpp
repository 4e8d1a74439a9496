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

#include "qreach/grover.hpp"
#include "qreach/optimizer.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qreach::experiments {

/// Reference clause density for random 2-SAT, drawn on figures.
inline constexpr double kCritical2SatDensity = 1.0;

struct SweepSpec {
    int n = 6;
    int k = 3;
    DriverKind driver = DriverKind::TransverseField;
    std::vector<std::size_t> depths{1};
    std::vector<double> alphas;
    int instances_per_point = 100;
    std::uint64_t base_seed = 0;
    OptimConfig optimizer;
    double eta_threshold = 0.95;
    std::size_t p_max = 30;
    int jobs = 1;
    bool unique_clauses = false;

    void validate() const;
};

/// 0.25, 0.5, ..., 5.0
[[nodiscard]] std::vector<double> default_alpha_grid();

/// Seed of instance `index` at target density `alpha`. Independent of depth
/// and driver, so every depth and driver sees the same ensemble.
[[nodiscard]] std::uint64_t instance_seed(std::uint64_t base_seed, double alpha, int index);

struct SweepRecord {
    int n = 0;
    int k = 0;
    DriverKind driver = DriverKind::TransverseField;
    std::size_t p = 0;
    double alpha_target = 0.0;
    std::size_t m = 0;
    std::uint64_t instance_seed = 0;
    double energy = 0.0;
    std::uint32_t ground_energy = 0;
    double deficit = 0.0;
    double overlap = 0.0;
    bool converged = false;
    std::size_t evals = 0;
    /// Set when the row could not be computed; numeric fields are NaN.
    bool failed = false;

    friend bool operator==(const SweepRecord &, const SweepRecord &) = default;
};

struct AggregateRow {
    int n = 0;
    int k = 0;
    DriverKind driver = DriverKind::TransverseField;
    std::size_t p = 0;
    double alpha_target = 0.0;
    double mean_deficit = 0.0;
    double sem_deficit = 0.0;
    double mean_overlap = 0.0;
    std::size_t count = 0;
};

/// One row per (alpha, depth, instance), ordered alpha-major then depth then
/// instance. Each instance is optimized at ascending depths, warm-started
/// from its previous depth.
[[nodiscard]] std::vector<SweepRecord> run_density_sweep(const SweepSpec &spec);

/// Mean and standard error of the mean of the deficit per
/// (n, k, driver, p, alpha), skipping failed rows. Groups keep first-seen order.
[[nodiscard]] std::vector<AggregateRow> aggregate(const std::vector<SweepRecord> &records);

struct PStarRow {
    double alpha_target = 0.0;
    std::size_t m = 0;
    std::optional<std::size_t> p_star;
    std::vector<double> mean_overlap; ///< index = depth, from 0
    std::vector<double> sem_overlap;
    std::vector<double> mean_deficit;
};

struct PStarTable {
    int n = 0;
    int k = 0;
    DriverKind driver = DriverKind::TransverseField;
    std::size_t p_max = 0;
    double eta_threshold = 0.95;
    std::vector<PStarRow> rows;
};

/// Ensemble critical depth per alpha: the first p whose instance-averaged
/// ground overlap reaches spec.eta_threshold, scanning p = 0..spec.p_max.
/// Each instance is optimized for energy and warm-started across depths.
[[nodiscard]] PStarTable run_pstar_scan(const SweepSpec &spec);

struct GroverRow {
    int n = 0;
    std::optional<std::size_t> p_star;
    std::vector<double> energy_by_depth;
};

struct GroverScaling {
    double energy_tol = 1e-4;
    std::size_t p_max = 0;
    std::vector<GroverRow> rows;
    /// Least-squares slope of log p* against log N over found, nonzero p*;
    /// NaN with fewer than two such points. 0.5 is the square-root law.
    double exponent = 0.0;
};

[[nodiscard]] GroverScaling run_grover_scaling(const std::vector<int> &n_list, double energy_tol,
                                               std::size_t p_max, const OptimConfig &cfg);

/// Least-squares slope of log(y) on log(x).
[[nodiscard]] double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

// CSV I/O. Doubles use the shortest round-trip representation.

inline constexpr const char *kSweepHeader =
    "n,k,driver,p,alpha_target,m,instance_seed,energy,ground_energy,deficit,overlap,converged,evals";
inline constexpr const char *kAggregateHeader =
    "n,k,driver,p,alpha_target,mean_deficit,sem_deficit,mean_overlap,count";
inline constexpr const char *kPStarHeader = "n,k,driver,alpha_target,m,p_star,found,p_max";
inline constexpr const char *kPStarTraceHeader =
    "n,k,driver,alpha_target,p,mean_overlap,sem_overlap,mean_deficit";
inline constexpr const char *kGroverTraceHeader = "n,p,energy";
inline constexpr const char *kGroverPStarHeader = "n,N,p_star,found";

void write_sweep_csv(std::ostream &out, const std::vector<SweepRecord> &records);
void write_aggregate_csv(std::ostream &out, const std::vector<AggregateRow> &rows);
void write_pstar_csv(std::ostream &out, const PStarTable &table);
void write_pstar_trace_csv(std::ostream &out, const PStarTable &table);
void write_grover_trace_csv(std::ostream &out, const GroverScaling &scaling);
void write_grover_pstar_csv(std::ostream &out, const GroverScaling &scaling);

[[nodiscard]] std::vector<SweepRecord> read_sweep_csv(std::istream &in);
[[nodiscard]] std::vector<AggregateRow> read_aggregate_csv(std::istream &in);
[[nodiscard]] PStarTable read_pstar_csv(std::istream &in);
[[nodiscard]] GroverScaling read_grover_trace_csv(std::istream &in);
[[nodiscard]] GroverScaling read_grover_pstar_csv(std::istream &in);

// Figures. Each returns the files written; empty input writes nothing and
// logs a warning to stderr.

std::vector<std::filesystem::path> emit_deficit_figures(const std::vector<AggregateRow> &rows,
                                                        const std::filesystem::path &out_dir);
std::vector<std::filesystem::path> emit_pstar_figure(const PStarTable &table,
                                                     const std::filesystem::path &out_dir);
std::vector<std::filesystem::path> emit_grover_figures(const GroverScaling &scaling,
                                                       const std::filesystem::path &out_dir);

/// Reads any CSV written above (recognized by its header) and renders the
/// matching figures.
std::vector<std::filesystem::path> render_csv(const std::filesystem::path &csv,
                                              const std::filesystem::path &out_dir);

[[nodiscard]] nlohmann::json to_json(const SweepSpec &spec);

/// Run manifest: tool version, RNG identity, seed derivation, protocol notes,
/// and the command's parameters. Contains no timestamps, so reruns match.
[[nodiscard]] std::string run_manifest(const std::string &command,
                                       const nlohmann::json &parameters);

/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace qreach::experiments
