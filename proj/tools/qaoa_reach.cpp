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

// qaoa-reach: random MAX-k-SAT instances, QAOA optimization, and the batch
// experiments built on them.

#include "qreach/dimacs.hpp"
#include "qreach/error.hpp"
#include "qreach/experiments.hpp"
#include "qreach/grover.hpp"
#include "qreach/optimizer.hpp"
#include "qreach/ranges.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace qreach;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct OptimizerFlags {
    int restarts = 20;
    std::size_t max_evals = 0;
    double tolerance = 1e-8;

    void add_to(CLI::App &cmd) {
        cmd.add_option("--restarts", restarts, "Simplex restarts per optimization")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        cmd.add_option("--max-evals", max_evals,
                       "Evaluations per restart (0 = 5000 * p)")
            ->capture_default_str();
        cmd.add_option("--simplex-tol", tolerance, "Simplex energy-spread tolerance")
            ->capture_default_str();
    }
    [[nodiscard]] OptimConfig config(std::uint64_t seed) const {
        OptimConfig cfg;
        cfg.restarts = restarts;
        cfg.max_evals = max_evals;
        cfg.tolerance = tolerance;
        cfg.seed = seed;
        return cfg;
    }
};

struct SpecFlags {
    int n = 6;
    int k = 3;
    std::string driver = "x";
    std::string depths = "1";
    std::string alphas = "0.25:5:0.25";
    int instances = 100;
    std::uint64_t seed = 0;
    std::string out_dir = "out";
    int jobs = 1;
    bool unique = false;
    bool no_figures = false;
    OptimizerFlags opt;

    void add_to(CLI::App &cmd, bool with_depths) {
        cmd.add_option("--n", n, "Variables (qubits)")->capture_default_str();
        cmd.add_option("--k", k, "Clause width, 2 or 3")->capture_default_str()->check(CLI::IsMember({2, 3}));
        cmd.add_option("--driver", driver, "Mixer: x (transverse field) or proj (|+><+| projector)")
            ->capture_default_str();
        if (with_depths) {
            cmd.add_option("--depths", depths, "Depth list, e.g. 1,2,3 or 1:8:1")->capture_default_str();
        }
        cmd.add_option("--alphas", alphas,
                       "Clause densities: comma list and/or start:stop:step ranges (inclusive)")
            ->capture_default_str();
        cmd.add_option("--instances", instances, "Random instances per density")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        cmd.add_option("--seed", seed, "Base seed for instances and optimizer")->capture_default_str();
        cmd.add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
        cmd.add_option("--jobs", jobs, "Worker threads; output does not depend on it")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        cmd.add_flag("--unique-clauses", unique, "Forbid repeated clauses within an instance");
        cmd.add_flag("--no-figures", no_figures, "Skip SVG output");
        opt.add_to(cmd);
    }

    [[nodiscard]] experiments::SweepSpec spec() const {
        experiments::SweepSpec s;
        s.n = n;
        s.k = k;
        s.driver = parse_driver(driver);
        s.depths = parse_count_list(depths);
        s.alphas = parse_real_list(alphas);
        s.instances_per_point = instances;
        s.base_seed = seed;
        s.optimizer = opt.config(seed);
        s.jobs = jobs;
        s.unique_clauses = unique;
        return s;
    }
};

template <class Fn> std::string to_text(Fn &&write) {
    std::ostringstream out;
    write(out);
    return out.str();
}

void print_written(const std::vector<fs::path> &paths) {
    for (const auto &p : paths) {
        fmt::print("wrote {}\n", p.string());
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA reachability-deficit experiments on random MAX-k-SAT"};
    app.require_subcommand(1);
    app.set_version_flag("--version", QREACH_VERSION);

    // gen
    auto *gen = app.add_subcommand("gen", "Generate a random k-SAT instance as DIMACS CNF");
    int gen_n = 0;
    std::size_t gen_m = 0;
    double gen_alpha = 0.0;
    int gen_k = 3;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    bool gen_unique = false;
    gen->add_option("--n", gen_n, "Variables")->required()->check(CLI::PositiveNumber);
    auto *m_opt = gen->add_option("--m", gen_m, "Clause count");
    auto *alpha_opt = gen->add_option("--alpha", gen_alpha, "Clause density; m = round(alpha*n)");
    m_opt->excludes(alpha_opt);
    alpha_opt->excludes(m_opt);
    gen->add_option("--k", gen_k, "Clause width, 2 or 3")->capture_default_str()->check(CLI::IsMember({2, 3}));
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output file (default: stdout)");
    gen->add_flag("--unique-clauses", gen_unique, "Forbid repeated clauses");

    // solve
    auto *solve = app.add_subcommand("solve", "Optimize a QAOA circuit on a DIMACS instance");
    std::string solve_cnf;
    std::size_t solve_p = 1;
    std::string solve_driver = "x";
    std::uint64_t solve_seed = 0;
    bool solve_json = false;
    OptimizerFlags solve_opt;
    solve->add_option("--cnf", solve_cnf, "DIMACS CNF file")->required();
    solve->add_option("--p", solve_p, "Circuit depth")->capture_default_str();
    solve->add_option("--driver", solve_driver, "Mixer: x or proj")->capture_default_str();
    solve->add_option("--seed", solve_seed, "Optimizer seed")->capture_default_str();
    solve->add_flag("--json", solve_json, "Print a JSON report instead of text");
    solve_opt.add_to(*solve);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Mean deficit vs clause density per depth");
    SpecFlags sweep_flags;
    sweep_flags.add_to(*sweep, true);

    // pstar
    auto *pstar = app.add_subcommand("pstar", "Ensemble critical depth vs clause density");
    SpecFlags pstar_flags;
    pstar_flags.alphas = "0.5,1,2,3,4";
    double pstar_eta = 0.95;
    std::size_t pstar_pmax = 30;
    pstar_flags.add_to(*pstar, false);
    pstar->add_option("--eta", pstar_eta, "Mean ground-overlap threshold")->capture_default_str();
    pstar->add_option("--p-max", pstar_pmax, "Largest depth tried")->capture_default_str();

    // grover
    auto *grover_cmd = app.add_subcommand("grover", "Variational search: critical depth vs n");
    std::string grover_ns = "6,8,10";
    double grover_tol = 1e-4;
    std::size_t grover_pmax = 60;
    std::uint64_t grover_seed = 0;
    std::string grover_out = "out";
    bool grover_no_figures = false;
    OptimizerFlags grover_opt;
    grover_cmd->add_option("--n", grover_ns, "Qubit counts, e.g. 6,8,10")->capture_default_str();
    grover_cmd->add_option("--tol", grover_tol, "Energy tolerance defining p*")->capture_default_str();
    grover_cmd->add_option("--p-max", grover_pmax, "Largest depth tried")->capture_default_str();
    grover_cmd->add_option("--seed", grover_seed, "Optimizer seed")->capture_default_str();
    grover_cmd->add_option("--out-dir", grover_out, "Output directory")->capture_default_str();
    grover_cmd->add_flag("--no-figures", grover_no_figures, "Skip SVG output");
    grover_opt.add_to(*grover_cmd);

    // render
    auto *render = app.add_subcommand("render", "Render SVG figures from experiment CSV files");
    std::vector<std::string> render_in;
    std::string render_out = "figs";
    render->add_option("--in", render_in, "CSV files written by sweep, pstar or grover")
        ->required()
        ->check(CLI::ExistingFile);
    render->add_option("--out", render_out, "Figure directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            if (m_opt->count() == 0 && alpha_opt->count() == 0) {
                std::cerr << "gen: one of --m or --alpha is required\n";
                return kExitUsage;
            }
            const std::size_t m = m_opt->count() ? gen_m : clauses_for_density(gen_alpha, gen_n);
            const auto inst = generate_instance(gen_n, m, gen_k, gen_seed, {gen_unique});
            const std::string info = fmt::format("n={} m={} k={} alpha={} seed={}\n", inst.n,
                                                 inst.m(), inst.k, density(inst).value(), gen_seed);
            if (gen_out.empty()) {
                std::cout << write_dimacs(inst);
                std::cerr << info;
            } else {
                write_dimacs_file(gen_out, inst);
                std::cout << info;
            }
            return 0;
        }

        if (*solve) {
            const auto inst = read_dimacs_file(solve_cnf);
            const auto diag = embed(inst);
            const auto kind = parse_driver(solve_driver);
            const auto res = minimize(diag, kind, solve_p, solve_opt.config(solve_seed));
            if (solve_json) {
                nlohmann::json j;
                j["schema_version"] = 1;
                j["cnf"] = solve_cnf;
                j["n"] = inst.n;
                j["m"] = inst.m();
                j["k"] = inst.k;
                j["p"] = solve_p;
                j["driver"] = to_string(kind);
                j["seed"] = solve_seed;
                j["restarts"] = solve_opt.restarts;
                j["energy"] = res.energy;
                j["ground_energy"] = diag.ground_energy();
                j["deficit"] = res.deficit;
                j["overlap"] = res.overlap;
                j["ground_degeneracy"] = diag.ground_set().size();
                j["converged"] = res.converged;
                j["evals"] = res.evals_used;
                j["restart_index"] = res.restart_index;
                j["params"] = {{"gammas", res.best_params.gammas}, {"betas", res.best_params.betas}};
                std::cout << j.dump(2) << '\n';
            } else {
                fmt::print("n={} m={} k={} p={} driver={}\n", inst.n, inst.m(), inst.k, solve_p,
                           to_string(kind));
                fmt::print("energy        {:.12f}\n", res.energy);
                fmt::print("ground_energy {}\n", diag.ground_energy());
                fmt::print("deficit       {:.12f}\n", res.deficit);
                fmt::print("overlap       {:.12f}\n", res.overlap);
                fmt::print("converged     {}\n", res.converged);
                fmt::print("gammas        {}\n", fmt::join(res.best_params.gammas, " "));
                fmt::print("betas         {}\n", fmt::join(res.best_params.betas, " "));
            }
            return 0;
        }

        if (*sweep) {
            const auto spec = sweep_flags.spec();
            const auto records = experiments::run_density_sweep(spec);
            const auto agg = experiments::aggregate(records);
            const fs::path dir = sweep_flags.out_dir;
            experiments::write_text_file(
                dir / "sweep.csv", to_text([&](auto &o) { experiments::write_sweep_csv(o, records); }));
            experiments::write_text_file(dir / "sweep_aggregate.csv", to_text([&](auto &o) {
                                             experiments::write_aggregate_csv(o, agg);
                                         }));
            experiments::write_text_file(dir / "manifest.json",
                                         experiments::run_manifest("sweep", experiments::to_json(spec)));
            fmt::print("wrote {} rows to {}\n", records.size(), (dir / "sweep.csv").string());
            if (!sweep_flags.no_figures) {
                print_written(experiments::emit_deficit_figures(agg, dir));
            }
            return 0;
        }

        if (*pstar) {
            auto spec = pstar_flags.spec();
            spec.eta_threshold = pstar_eta;
            spec.p_max = pstar_pmax;
            const auto table = experiments::run_pstar_scan(spec);
            const fs::path dir = pstar_flags.out_dir;
            experiments::write_text_file(
                dir / "pstar.csv", to_text([&](auto &o) { experiments::write_pstar_csv(o, table); }));
            experiments::write_text_file(dir / "pstar_trace.csv", to_text([&](auto &o) {
                                             experiments::write_pstar_trace_csv(o, table);
                                         }));
            experiments::write_text_file(dir / "manifest.json",
                                         experiments::run_manifest("pstar", experiments::to_json(spec)));
            for (const auto &row : table.rows) {
                fmt::print("alpha={} m={} p*={}\n", row.alpha_target, row.m,
                           row.p_star ? std::to_string(*row.p_star)
                                      : fmt::format(">{}", table.p_max));
            }
            if (!pstar_flags.no_figures) {
                print_written(experiments::emit_pstar_figure(table, dir));
            }
            return 0;
        }

        if (*grover_cmd) {
            std::vector<int> ns;
            for (auto v : parse_count_list(grover_ns)) {
                ns.push_back(static_cast<int>(v));
            }
            const auto scaling = experiments::run_grover_scaling(ns, grover_tol, grover_pmax,
                                                                 grover_opt.config(grover_seed));
            const fs::path dir = grover_out;
            experiments::write_text_file(dir / "grover_trace.csv", to_text([&](auto &o) {
                                             experiments::write_grover_trace_csv(o, scaling);
                                         }));
            experiments::write_text_file(dir / "grover_pstar.csv", to_text([&](auto &o) {
                                             experiments::write_grover_pstar_csv(o, scaling);
                                         }));
            nlohmann::json params{{"n", ns},
                                  {"energy_tol", grover_tol},
                                  {"p_max", grover_pmax},
                                  {"seed", grover_seed},
                                  {"restarts", grover_opt.restarts},
                                  {"fitted_exponent_vs_N", scaling.exponent}};
            experiments::write_text_file(dir / "manifest.json",
                                         experiments::run_manifest("grover", params));
            fmt::print("n,N,p_star\n");
            for (const auto &row : scaling.rows) {
                fmt::print("{},{},{}\n", row.n, std::uint64_t{1} << row.n,
                           row.p_star ? std::to_string(*row.p_star)
                                      : fmt::format(">{}", grover_pmax));
            }
            fmt::print("fitted exponent of p* vs N: {:.4f}\n", scaling.exponent);
            if (!grover_no_figures) {
                print_written(experiments::emit_grover_figures(scaling, dir));
            }
            return 0;
        }

        if (*render) {
            for (const auto &csv : render_in) {
                print_written(experiments::render_csv(csv, render_out));
            }
            return 0;
        }
    } catch (const ResourceLimit &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
