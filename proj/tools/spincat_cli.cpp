// Copyright 2026 The spincat authors
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

// Command-line front end: figure sweeps, single-point inspection and the
// engine/oracle verification ledger.
//
// Exit codes: 0 success, 1 verification disagreement or evaluation error,
// 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spincat/figures.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct FigureArgs {
    std::string id;
    std::string out_path;
    std::string format = "csv";
    std::vector<double> j_values;
    std::vector<int> depths;
    int steps = 0;
    std::string x_var;
    double start = 0.0;
    double stop = 1.0;
    bool range_set = false;
    int m = -1;
    double omega = 0.0;
    bool omega_set = false;
    double p_fixed = 0.5;
    std::string quantity;
};

int run_figure(const FigureArgs& args) {
    spincat::figures::SweepSpec spec = spincat::figures::figure_spec(args.id);
    spec.format = args.format == "json" ? spincat::figures::Format::Json
                                        : spincat::figures::Format::Csv;
    spec.out_path = args.out_path;
    if (!args.j_values.empty()) spec.j_values = args.j_values;
    if (!args.depths.empty()) spec.depths = args.depths;
    if (args.steps > 0) spec.steps = args.steps;
    if (args.id == "custom") {
        if (!args.x_var.empty()) spec.x_var = args.x_var;
        if (args.range_set) {
            spec.start = args.start;
            spec.stop = args.stop;
        }
        if (args.m >= 0) spec.m = args.m;
        if (args.omega_set) spec.omega = args.omega;
        spec.p_fixed = args.p_fixed;
        if (!args.quantity.empty()) spec.quantity = args.quantity;
    }
    const std::string path = spincat::figures::emit_figure_to_file(spec);
    std::cout << "wrote " << path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-cat teleportation protocol toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    FigureArgs fig;
    CLI::App* figure = app.add_subcommand("figure", "emit a figure data sweep (CSV or JSON)");
    figure->add_option("id", fig.id, "fig1, fig3a, fig3b, fig4a, fig4b, fig5a, fig5b, fig5c, custom")
        ->required();
    figure->add_option("--out", fig.out_path, "output path (default <id>.<format>)");
    figure->add_option("--format", fig.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    figure->add_option("--j", fig.j_values, "series spin values");
    figure->add_option("--depth", fig.depths, "series attempt depths");
    figure->add_option("--steps", fig.steps, "samples along the x axis")->check(CLI::Range(2, 1000000));
    figure->add_option("--var", fig.x_var, "custom sweeps: p, concurrence or omega");
    CLI::Option* start_opt = figure->add_option("--start", fig.start, "custom sweeps: x start");
    figure->add_option("--stop", fig.stop, "custom sweeps: x stop")->needs(start_opt);
    figure->add_option("--m", fig.m, "custom sweeps: parity")->check(CLI::Range(0, 1));
    CLI::Option* omega_opt = figure->add_option("--omega", fig.omega, "custom sweeps: target angle");
    figure->add_option("--p", fig.p_fixed, "custom sweeps: fixed overlap for omega sweeps")
        ->check(CLI::Range(0.0, 1.0));
    figure->add_option("--quantity", fig.quantity,
                       "custom sweeps: concurrence, f_av_max, p_success_max, f_av, p_success");

    double ins_p = 0.0;
    double ins_j = 1.0;
    int ins_m = 0;
    double ins_omega = 0.0;
    int ins_depth = 0;
    CLI::App* inspect = app.add_subcommand("inspect", "report one parameter point");
    inspect->add_option("--p", ins_p, "overlap")->required()->check(CLI::Range(0.0, 1.0));
    inspect->add_option("--j", ins_j, "spin")->required();
    inspect->add_option("--m", ins_m, "parity")->required()->check(CLI::Range(0, 1));
    inspect->add_option("--omega", ins_omega, "target angle")->required();
    inspect->add_option("--depth", ins_depth, "attempt depth")->check(CLI::Range(0, 12));

    std::string grid_path;
    std::string ledger_path = "ledger.csv";
    CLI::App* verify = app.add_subcommand("verify", "engine vs oracle vs published expressions");
    verify->add_option("--grid", grid_path, "JSON grid configuration");
    verify->add_option("--ledger", ledger_path, "ledger output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*figure) {
            fig.range_set = start_opt->count() > 0;
            fig.omega_set = omega_opt->count() > 0;
            return run_figure(fig);
        }
        if (*inspect) {
            spincat::ChannelParams params(ins_p, ins_j, ins_m);
            spincat::TargetState target = spincat::TargetState::from_angle(ins_omega);
            spincat::figures::inspect(params, target, ins_depth, std::cout);
            return kExitOk;
        }
        if (*verify) {
            spincat::oracle::AdjudicationGrid grid =
                grid_path.empty() ? spincat::oracle::AdjudicationGrid::default_grid()
                                  : spincat::figures::load_grid(grid_path);
            std::ofstream ledger(ledger_path, std::ios::binary);
            if (!ledger) {
                std::cerr << "error: cannot open ledger path '" << ledger_path << "'\n";
                return kExitFailure;
            }
            const spincat::figures::VerifySummary summary =
                spincat::figures::run_verify(grid, ledger);
            std::cout << "checked " << summary.rows << " rows: " << summary.agree << " agree, "
                      << summary.paper_differs << " published-value differences, "
                      << summary.disagree << " engine/oracle disagreements\n"
                      << "ledger: " << ledger_path << '\n';
            return summary.ok() ? kExitOk : kExitFailure;
        }
    } catch (const spincat::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
