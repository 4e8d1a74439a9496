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

#include "qreach/experiments.hpp"

#include "qreach/error.hpp"
#include "qreach/instances.hpp"
#include "qreach/parallel.hpp"
#include "qreach/rng.hpp"
#include "qreach/svg_plot.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

namespace qreach::experiments {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MeanSem {
    double mean = kNaN;
    double sem = kNaN;
    std::size_t count = 0;
};

MeanSem mean_sem(const std::vector<double> &values) {
    MeanSem out;
    double sum = 0.0;
    for (double v : values) {
        if (std::isfinite(v)) {
            sum += v;
            ++out.count;
        }
    }
    if (out.count == 0) {
        return out;
    }
    out.mean = sum / static_cast<double>(out.count);
    if (out.count == 1) {
        out.sem = 0.0;
        return out;
    }
    double ss = 0.0;
    for (double v : values) {
        if (std::isfinite(v)) {
            ss += (v - out.mean) * (v - out.mean);
        }
    }
    const double c = static_cast<double>(out.count);
    out.sem = std::sqrt(ss / (c - 1.0) / c);
    return out;
}

OptimConfig row_config(const SweepSpec &spec, std::uint64_t inst_seed, std::size_t p) {
    OptimConfig cfg = spec.optimizer;
    cfg.seed = derive_seed(spec.optimizer.seed, {inst_seed, p});
    return cfg;
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

template <class T> T parse_field(const std::string &s, std::size_t line) {
    T value{};
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, fmt::format("bad CSV field '{}'", s));
    }
    return value;
}

/// Reads rows after checking the header; each row has the header's width.
std::vector<std::vector<std::string>> read_table(std::istream &in, const char *header) {
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw ParseError(1, fmt::format("expected header '{}'", header));
    }
    const std::size_t width = split_csv_line(header).size();
    std::vector<std::vector<std::string>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != width) {
            throw ParseError(line_no, fmt::format("expected {} fields, got {}", width, fields.size()));
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::string driver_title(DriverKind kind) {
    return kind == DriverKind::TransverseField ? "transverse-field driver" : "|+><+| projector driver";
}

} // namespace

void SweepSpec::validate() const {
    if (n < 1) {
        throw InvalidArgument("n must be positive");
    }
    if (n > kMaxEnumerationQubits) {
        throw ResourceLimit(fmt::format("n = {} exceeds the statevector bound of {}", n,
                                        kMaxEnumerationQubits));
    }
    if (k != 2 && k != 3) {
        throw InvalidArgument(fmt::format("k must be 2 or 3, got {}", k));
    }
    if (k > n) {
        throw InvalidArgument(fmt::format("k = {} exceeds n = {}", k, n));
    }
    if (instances_per_point < 1) {
        throw InvalidArgument("instances per point must be >= 1");
    }
    for (double a : alphas) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw InvalidArgument(fmt::format("density {} is not a nonnegative number", a));
        }
    }
    if (!(eta_threshold >= 0.0 && eta_threshold <= 1.0)) {
        throw InvalidArgument(fmt::format("eta threshold {} outside [0, 1]", eta_threshold));
    }
    optimizer.validate();
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) {
        grid.push_back(0.25 * i);
    }
    return grid;
}

std::uint64_t instance_seed(std::uint64_t base_seed, double alpha, int index) {
    return derive_seed(base_seed, {std::bit_cast<std::uint64_t>(alpha + 0.0),
                                   static_cast<std::uint64_t>(index)});
}

std::vector<SweepRecord> run_density_sweep(const SweepSpec &spec) {
    spec.validate();
    std::vector<std::size_t> depths = spec.depths;
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());

    const std::size_t n_alpha = spec.alphas.size();
    const auto n_inst = static_cast<std::size_t>(spec.instances_per_point);
    const std::size_t n_depth = depths.size();
    std::vector<SweepRecord> slots(n_alpha * n_inst * n_depth);

    parallel_for(n_alpha * n_inst, spec.jobs, [&](std::size_t task) {
        const std::size_t a = task / n_inst;
        const std::size_t i = task % n_inst;
        const double alpha = spec.alphas[a];
        const std::size_t m = clauses_for_density(alpha, spec.n);
        const std::uint64_t seed = instance_seed(spec.base_seed, alpha, static_cast<int>(i));
        SweepRecord *rows = &slots[task * n_depth];
        for (std::size_t d = 0; d < n_depth; ++d) {
            rows[d] = SweepRecord{spec.n, spec.k, spec.driver, depths[d], alpha, m, seed};
        }
        std::size_t d = 0;
        try {
            const auto inst = generate_instance(spec.n, m, spec.k, seed, {spec.unique_clauses});
            const auto diag = embed(inst);
            std::optional<ParamVector> warm;
            for (; d < n_depth; ++d) {
                auto cfg = row_config(spec, seed, depths[d]);
                cfg.warm_start = warm;
                const auto res = minimize(diag, spec.driver, depths[d], cfg);
                auto &row = rows[d];
                row.energy = res.energy;
                row.ground_energy = diag.ground_energy();
                row.deficit = res.deficit;
                row.overlap = res.overlap;
                row.converged = res.converged;
                row.evals = res.evals_used;
                warm = res.best_params;
            }
        } catch (const std::exception &) {
            for (; d < n_depth; ++d) {
                rows[d].energy = rows[d].deficit = rows[d].overlap = kNaN;
                rows[d].failed = true;
            }
        }
    });

    std::vector<SweepRecord> out;
    out.reserve(slots.size());
    for (std::size_t a = 0; a < n_alpha; ++a) {
        for (std::size_t d = 0; d < n_depth; ++d) {
            for (std::size_t i = 0; i < n_inst; ++i) {
                out.push_back(slots[(a * n_inst + i) * n_depth + d]);
            }
        }
    }
    return out;
}

std::vector<AggregateRow> aggregate(const std::vector<SweepRecord> &records) {
    using Key = std::tuple<int, int, int, std::size_t, std::uint64_t>;
    std::map<Key, std::size_t> index;
    std::vector<AggregateRow> rows;
    std::vector<std::vector<double>> deficits;
    std::vector<std::vector<double>> overlaps;
    for (const auto &r : records) {
        const Key key{r.n, r.k, static_cast<int>(r.driver), r.p,
                      std::bit_cast<std::uint64_t>(r.alpha_target + 0.0)};
        auto [it, inserted] = index.emplace(key, rows.size());
        if (inserted) {
            rows.push_back({r.n, r.k, r.driver, r.p, r.alpha_target});
            deficits.emplace_back();
            overlaps.emplace_back();
        }
        if (!r.failed) {
            deficits[it->second].push_back(r.deficit);
            overlaps[it->second].push_back(r.overlap);
        }
    }
    for (std::size_t g = 0; g < rows.size(); ++g) {
        const auto f = mean_sem(deficits[g]);
        const auto eta = mean_sem(overlaps[g]);
        rows[g].mean_deficit = f.mean;
        rows[g].sem_deficit = f.sem;
        rows[g].mean_overlap = eta.mean;
        rows[g].count = f.count;
    }
    return rows;
}

PStarTable run_pstar_scan(const SweepSpec &spec) {
    spec.validate();
    PStarTable table{spec.n, spec.k, spec.driver, spec.p_max, spec.eta_threshold, {}};
    const auto n_inst = static_cast<std::size_t>(spec.instances_per_point);

    for (double alpha : spec.alphas) {
        PStarRow row;
        row.alpha_target = alpha;
        row.m = clauses_for_density(alpha, spec.n);

        std::vector<std::uint64_t> seeds(n_inst);
        std::vector<std::optional<DiagonalObjective>> diags(n_inst);
        std::vector<std::optional<ParamVector>> warm(n_inst);
        parallel_for(n_inst, spec.jobs, [&](std::size_t i) {
            seeds[i] = instance_seed(spec.base_seed, alpha, static_cast<int>(i));
            try {
                diags[i] = embed(
                    generate_instance(spec.n, row.m, spec.k, seeds[i], {spec.unique_clauses}));
            } catch (const std::exception &) {
                diags[i].reset();
            }
        });

        std::vector<double> eta(n_inst);
        std::vector<double> deficit(n_inst);
        for (std::size_t p = 0; p <= spec.p_max; ++p) {
            parallel_for(n_inst, spec.jobs, [&](std::size_t i) {
                eta[i] = deficit[i] = kNaN;
                if (!diags[i]) {
                    return;
                }
                auto cfg = row_config(spec, seeds[i], p);
                cfg.warm_start = warm[i];
                try {
                    const auto res = minimize(*diags[i], spec.driver, p, cfg);
                    eta[i] = res.overlap;
                    deficit[i] = res.deficit;
                    warm[i] = res.best_params;
                } catch (const std::exception &) {
                    diags[i].reset();
                }
            });
            const auto e = mean_sem(eta);
            row.mean_overlap.push_back(e.mean);
            row.sem_overlap.push_back(e.sem);
            row.mean_deficit.push_back(mean_sem(deficit).mean);
            if (e.count > 0 && e.mean >= spec.eta_threshold) {
                row.p_star = p;
                break;
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

double log_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        return kNaN;
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    const auto count = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) {
        return kNaN;
    }
    return (count * sxy - sx * sy) / denom;
}

namespace {

double fit_exponent(const std::vector<GroverRow> &rows) {
    std::vector<double> sizes;
    std::vector<double> depths;
    for (const auto &r : rows) {
        if (r.p_star && *r.p_star > 0) {
            sizes.push_back(std::ldexp(1.0, r.n));
            depths.push_back(static_cast<double>(*r.p_star));
        }
    }
    return log_log_slope(sizes, depths);
}

} // namespace

GroverScaling run_grover_scaling(const std::vector<int> &n_list, double energy_tol,
                                 std::size_t p_max, const OptimConfig &cfg) {
    if (n_list.empty()) {
        throw InvalidArgument("empty list of search sizes");
    }
    GroverScaling out;
    out.energy_tol = energy_tol;
    out.p_max = p_max;
    for (int n : n_list) {
        OptimConfig run_cfg = cfg;
        run_cfg.seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(n)});
        auto scan = grover::critical_depth(n, energy_tol, p_max, run_cfg);
        out.rows.push_back({n, scan.p_star, std::move(scan.energy_by_depth)});
    }
    out.exponent = fit_exponent(out.rows);
    return out;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRecord> &records) {
    out << kSweepHeader << '\n';
    for (const auto &r : records) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.k, to_string(r.driver),
                           r.p, r.alpha_target, r.m, r.instance_seed, r.energy, r.ground_energy,
                           r.deficit, r.overlap, r.converged ? 1 : 0, r.evals);
    }
}

void write_aggregate_csv(std::ostream &out, const std::vector<AggregateRow> &rows) {
    out << kAggregateHeader << '\n';
    for (const auto &r : rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.n, r.k, to_string(r.driver), r.p,
                           r.alpha_target, r.mean_deficit, r.sem_deficit, r.mean_overlap, r.count);
    }
}

void write_pstar_csv(std::ostream &out, const PStarTable &table) {
    out << kPStarHeader << '\n';
    for (const auto &r : table.rows) {
        // Censored rows report p_max + 1.
        const std::size_t p = r.p_star.value_or(table.p_max + 1);
        out << fmt::format("{},{},{},{},{},{},{},{}\n", table.n, table.k, to_string(table.driver),
                           r.alpha_target, r.m, p, r.p_star ? 1 : 0, table.p_max);
    }
}

void write_pstar_trace_csv(std::ostream &out, const PStarTable &table) {
    out << kPStarTraceHeader << '\n';
    for (const auto &r : table.rows) {
        for (std::size_t p = 0; p < r.mean_overlap.size(); ++p) {
            out << fmt::format("{},{},{},{},{},{},{},{}\n", table.n, table.k,
                               to_string(table.driver), r.alpha_target, p, r.mean_overlap[p],
                               r.sem_overlap[p], r.mean_deficit[p]);
        }
    }
}

void write_grover_trace_csv(std::ostream &out, const GroverScaling &scaling) {
    out << kGroverTraceHeader << '\n';
    for (const auto &r : scaling.rows) {
        for (std::size_t p = 0; p < r.energy_by_depth.size(); ++p) {
            out << fmt::format("{},{},{}\n", r.n, p, r.energy_by_depth[p]);
        }
    }
}

void write_grover_pstar_csv(std::ostream &out, const GroverScaling &scaling) {
    out << kGroverPStarHeader << '\n';
    for (const auto &r : scaling.rows) {
        out << fmt::format("{},{},{},{}\n", r.n, std::uint64_t{1} << r.n,
                           r.p_star.value_or(scaling.p_max + 1), r.p_star ? 1 : 0);
    }
}

std::vector<SweepRecord> read_sweep_csv(std::istream &in) {
    std::vector<SweepRecord> out;
    std::size_t line = 1;
    for (const auto &f : read_table(in, kSweepHeader)) {
        ++line;
        SweepRecord r;
        r.n = parse_field<int>(f[0], line);
        r.k = parse_field<int>(f[1], line);
        r.driver = parse_driver(f[2]);
        r.p = parse_field<std::size_t>(f[3], line);
        r.alpha_target = parse_field<double>(f[4], line);
        r.m = parse_field<std::size_t>(f[5], line);
        r.instance_seed = parse_field<std::uint64_t>(f[6], line);
        r.energy = parse_field<double>(f[7], line);
        r.ground_energy = parse_field<std::uint32_t>(f[8], line);
        r.deficit = parse_field<double>(f[9], line);
        r.overlap = parse_field<double>(f[10], line);
        r.converged = f[11] == "1";
        r.evals = parse_field<std::size_t>(f[12], line);
        r.failed = std::isnan(r.energy);
        out.push_back(r);
    }
    return out;
}

std::vector<AggregateRow> read_aggregate_csv(std::istream &in) {
    std::vector<AggregateRow> out;
    std::size_t line = 1;
    for (const auto &f : read_table(in, kAggregateHeader)) {
        ++line;
        out.push_back({parse_field<int>(f[0], line), parse_field<int>(f[1], line),
                       parse_driver(f[2]), parse_field<std::size_t>(f[3], line),
                       parse_field<double>(f[4], line), parse_field<double>(f[5], line),
                       parse_field<double>(f[6], line), parse_field<double>(f[7], line),
                       parse_field<std::size_t>(f[8], line)});
    }
    return out;
}

PStarTable read_pstar_csv(std::istream &in) {
    PStarTable table;
    std::size_t line = 1;
    for (const auto &f : read_table(in, kPStarHeader)) {
        ++line;
        table.n = parse_field<int>(f[0], line);
        table.k = parse_field<int>(f[1], line);
        table.driver = parse_driver(f[2]);
        table.p_max = parse_field<std::size_t>(f[7], line);
        PStarRow row;
        row.alpha_target = parse_field<double>(f[3], line);
        row.m = parse_field<std::size_t>(f[4], line);
        if (f[6] == "1") {
            row.p_star = parse_field<std::size_t>(f[5], line);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

GroverScaling read_grover_trace_csv(std::istream &in) {
    GroverScaling out;
    std::size_t line = 1;
    for (const auto &f : read_table(in, kGroverTraceHeader)) {
        ++line;
        const int n = parse_field<int>(f[0], line);
        if (out.rows.empty() || out.rows.back().n != n) {
            out.rows.push_back({n, std::nullopt, {}});
        }
        out.rows.back().energy_by_depth.push_back(parse_field<double>(f[2], line));
    }
    out.exponent = kNaN;
    return out;
}

GroverScaling read_grover_pstar_csv(std::istream &in) {
    GroverScaling out;
    std::size_t line = 1;
    for (const auto &f : read_table(in, kGroverPStarHeader)) {
        ++line;
        GroverRow row{parse_field<int>(f[0], line), std::nullopt, {}};
        const auto p = parse_field<std::size_t>(f[2], line);
        if (f[3] == "1") {
            row.p_star = p;
        } else {
            out.p_max = std::max(out.p_max, p - 1);
        }
        out.rows.push_back(std::move(row));
    }
    out.exponent = fit_exponent(out.rows);
    return out;
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument(fmt::format("cannot write '{}'", path.string()));
    }
    out << text;
}

std::vector<std::filesystem::path> emit_deficit_figures(const std::vector<AggregateRow> &rows,
                                                        const std::filesystem::path &out_dir) {
    std::vector<std::filesystem::path> written;
    if (rows.empty()) {
        std::cerr << "warning: no sweep rows, no deficit figures written\n";
        return written;
    }
    // One chart per (n, k, driver), one series per depth.
    std::map<std::tuple<int, int, int>, std::map<std::size_t, svg::Series>> charts;
    for (const auto &r : rows) {
        auto &series = charts[{r.n, r.k, static_cast<int>(r.driver)}][r.p];
        series.label = fmt::format("p = {}", r.p);
        series.points.push_back({r.alpha_target, r.mean_deficit, r.sem_deficit, false});
    }
    for (auto &[key, by_depth] : charts) {
        const auto [n, k, driver] = key;
        const auto kind = static_cast<DriverKind>(driver);
        svg::Chart chart(fmt::format("{}-SAT, n = {}, {}", k, n, driver_title(kind)),
                         "clause density alpha = m/n", "mean deficit f (+/- SEM)");
        for (auto &[p, series] : by_depth) {
            std::sort(series.points.begin(), series.points.end(),
                      [](const svg::Point &a, const svg::Point &b) { return a.x < b.x; });
            chart.add(std::move(series));
        }
        if (k == 2) {
            chart.add_reference({kCritical2SatDensity, "alpha_c = 1"});
        }
        const auto path =
            out_dir / fmt::format("deficit_n{}_k{}_{}.svg", n, k, to_string(kind));
        write_text_file(path, chart.render());
        written.push_back(path);
    }
    return written;
}

std::vector<std::filesystem::path> emit_pstar_figure(const PStarTable &table,
                                                     const std::filesystem::path &out_dir) {
    std::vector<std::filesystem::path> written;
    if (table.rows.empty()) {
        std::cerr << "warning: empty critical-depth table, no figure written\n";
        return written;
    }
    svg::Chart chart(fmt::format("{}-SAT, n = {}, {}: critical depth (eta >= {})", table.k,
                                 table.n, driver_title(table.driver), table.eta_threshold),
                     "clause density alpha = m/n", "p* (open marker: not reached by p_max)");
    svg::Series series{"ensemble p*", {}, true, true};
    for (const auto &r : table.rows) {
        const double p = static_cast<double>(r.p_star.value_or(table.p_max + 1));
        series.points.push_back({r.alpha_target, p, 0.0, !r.p_star});
    }
    chart.add(std::move(series));
    if (table.k == 2) {
        chart.add_reference({kCritical2SatDensity, "alpha_c = 1"});
    }
    const auto path = out_dir / fmt::format("pstar_n{}_k{}_{}.svg", table.n, table.k,
                                            to_string(table.driver));
    write_text_file(path, chart.render());
    written.push_back(path);
    return written;
}

std::vector<std::filesystem::path> emit_grover_figures(const GroverScaling &scaling,
                                                       const std::filesystem::path &out_dir) {
    std::vector<std::filesystem::path> written;
    if (scaling.rows.empty()) {
        std::cerr << "warning: no search-scaling rows, no figures written\n";
        return written;
    }
    svg::Chart energy("Variational search: optimized energy vs depth", "depth p",
                      "energy 1 - |b_p|^2");
    bool any_trace = false;
    for (const auto &r : scaling.rows) {
        svg::Series s{fmt::format("n = {}", r.n), {}, true, true};
        for (std::size_t p = 0; p < r.energy_by_depth.size(); ++p) {
            s.points.push_back({static_cast<double>(p), r.energy_by_depth[p]});
        }
        any_trace = any_trace || !s.points.empty();
        energy.add(std::move(s));
    }
    if (any_trace) {
        const auto path = out_dir / "grover_energy.svg";
        write_text_file(path, energy.render());
        written.push_back(path);
    }

    svg::Chart depth("Variational search: critical depth vs n", "n (N = 2^n)", "p*");
    svg::Series measured{"p*", {}, true, true};
    for (const auto &r : scaling.rows) {
        if (r.p_star || scaling.p_max > 0) {
            measured.points.push_back({static_cast<double>(r.n),
                                       static_cast<double>(r.p_star.value_or(scaling.p_max + 1)),
                                       0.0, !r.p_star});
        }
    }
    if (std::any_of(scaling.rows.begin(), scaling.rows.end(),
                    [](const GroverRow &r) { return r.p_star.has_value(); })) {
        depth.add(std::move(measured));
        if (std::isfinite(scaling.exponent)) {
            // Fitted power law through the geometric centre of the data.
            double sum_log_n = 0.0;
            double sum_log_p = 0.0;
            int count = 0;
            for (const auto &r : scaling.rows) {
                if (r.p_star && *r.p_star > 0) {
                    sum_log_n += r.n * std::log(2.0);
                    sum_log_p += std::log(double(*r.p_star));
                    ++count;
                }
            }
            const double intercept = (sum_log_p - scaling.exponent * sum_log_n) / count;
            svg::Series fit{fmt::format("fit ~ N^{:.3f}", scaling.exponent), {}, true, false};
            int lo = scaling.rows.front().n;
            int hi = lo;
            for (const auto &r : scaling.rows) {
                lo = std::min(lo, r.n);
                hi = std::max(hi, r.n);
            }
            for (int i = 0; i <= 40; ++i) {
                const double n = lo + (hi - lo) * i / 40.0;
                fit.points.push_back({n, std::exp(intercept + scaling.exponent * n * std::log(2.0))});
            }
            depth.add(std::move(fit));
        }
        const auto path = out_dir / "grover_pstar.svg";
        write_text_file(path, depth.render());
        written.push_back(path);
    }
    return written;
}

std::vector<std::filesystem::path> render_csv(const std::filesystem::path &csv,
                                              const std::filesystem::path &out_dir) {
    std::ifstream in(csv, std::ios::binary);
    if (!in) {
        throw InvalidArgument(fmt::format("cannot open '{}'", csv.string()));
    }
    std::string header;
    std::getline(in, header);
    in.seekg(0);
    if (header == kSweepHeader) {
        return emit_deficit_figures(aggregate(read_sweep_csv(in)), out_dir);
    }
    if (header == kAggregateHeader) {
        return emit_deficit_figures(read_aggregate_csv(in), out_dir);
    }
    if (header == kPStarHeader) {
        return emit_pstar_figure(read_pstar_csv(in), out_dir);
    }
    if (header == kGroverTraceHeader) {
        return emit_grover_figures(read_grover_trace_csv(in), out_dir);
    }
    if (header == kGroverPStarHeader) {
        return emit_grover_figures(read_grover_pstar_csv(in), out_dir);
    }
    throw ParseError(1, fmt::format("unrecognized CSV header '{}'", header));
}

nlohmann::json to_json(const SweepSpec &spec) {
    nlohmann::json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["driver"] = to_string(spec.driver);
    j["depths"] = spec.depths;
    j["alphas"] = spec.alphas;
    j["instances_per_point"] = spec.instances_per_point;
    j["base_seed"] = spec.base_seed;
    j["eta_threshold"] = spec.eta_threshold;
    j["p_max"] = spec.p_max;
    j["unique_clauses"] = spec.unique_clauses;
    j["optimizer"] = {{"restarts", spec.optimizer.restarts},
                      {"max_evals_per_restart", spec.optimizer.max_evals == 0
                                                    ? nlohmann::json("5000*p")
                                                    : nlohmann::json(spec.optimizer.max_evals)},
                      {"tolerance", spec.optimizer.tolerance},
                      {"initial_step", spec.optimizer.initial_step},
                      {"seed", spec.optimizer.seed}};
    return j;
}

std::string run_manifest(const std::string &command, const nlohmann::json &parameters) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["tool"] = "qaoa-reach";
    j["version"] = QREACH_VERSION;
    j["command"] = command;
    j["rng"] = std::string(kRngIdentity);
    j["seed_derivation"] = {
        {"instance", "derive_seed(base_seed, [bits(alpha), instance_index]) -> mt19937_64"},
        {"optimizer", "derive_seed(optimizer.seed, [instance_seed, p]); restart r uses "
                      "derive_seed(that, [r])"},
        {"clause_count", "m = round(alpha * n), half away from zero"}};
    j["protocol"] = {
        {"optimizer", "multi-start Nelder-Mead; restart 0 warm-started from depth p-1 padded "
                      "with (0, 0); others uniform in gamma in [0, 2pi), beta in [0, pi) "
                      "(transverse) or [0, 2pi) (projector)"},
        {"critical_depth", "energy is minimized at each depth; overlap eta is measured at the "
                           "energy-optimal parameters"},
        {"deficit_bound", "reported deficits are best-found values, i.e. upper bounds on the "
                          "true deficit"}};
    j["parameters"] = parameters;
    return j.dump(2) + "\n";
}

} // namespace qreach::experiments
