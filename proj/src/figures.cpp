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

#include "spincat/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace spincat::figures {

namespace {

std::string num17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

struct Row {
    double series;
    double x;
    double y;
};

struct Sweep {
    std::string series_name;
    std::string x_name;
    std::string y_name;
    std::vector<Row> rows;
};

std::vector<double> axis(double start, double stop, int steps) {
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        xs.push_back(start + (stop - start) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1));
    }
    xs.back() = stop;  // land on the endpoint exactly
    return xs;
}

// Average fidelity of the primary attempt maximized over the two separable
// target angles, and the success probability at the maximizing angle.
std::pair<double, double> maximized_primary(const ChannelParams& params) {
    const double f0 = average_fidelity_closed(params, 0.0, 0);
    const double fpi = average_fidelity_closed(params, M_PI, 0);
    const double best = f0 >= fpi ? 0.0 : M_PI;
    const double f = std::max(f0, fpi);
    return {f, success_probability_closed(params, best, 0)};
}

Sweep evaluate(const SweepSpec& spec) {
    validate(spec);
    const std::vector<double> xs = axis(spec.start, spec.stop, spec.steps);
    Sweep sweep;

    auto spin_series = [&](const std::string& y_name, auto&& y_of) {
        sweep.series_name = "j";
        sweep.x_name = "p";
        sweep.y_name = y_name;
        for (double j : spec.j_values) {
            for (double x : xs) {
                sweep.rows.push_back({j, x, y_of(ChannelParams(x, j, spec.m))});
            }
        }
    };
    auto depth_series = [&](const std::string& x_name, const std::string& y_name, auto&& y_of) {
        sweep.series_name = "depth";
        sweep.x_name = x_name;
        sweep.y_name = y_name;
        for (int depth : spec.depths) {
            for (double x : xs) {
                sweep.rows.push_back({static_cast<double>(depth), x, y_of(x, depth)});
            }
        }
    };

    if (spec.quantity == "concurrence") {
        spin_series("concurrence", [](const ChannelParams& params) {
            return concurrence_analytic(params);
        });
    } else if (spec.quantity == "f_av_max") {
        spin_series("f_av_max", [](const ChannelParams& params) {
            return maximized_primary(params).first;
        });
    } else if (spec.quantity == "p_success_max") {
        spin_series("p_success", [](const ChannelParams& params) {
            return maximized_primary(params).second;
        });
    } else if (spec.quantity == "f_av") {
        if (spec.x_var == "concurrence") {
            depth_series("concurrence", "f_av", [&](double c, int depth) {
                return average_fidelity_closed_from_concurrence(c, spec.omega, depth, spec.m);
            });
        } else if (spec.x_var == "omega") {
            depth_series("omega", "f_av", [&](double w, int depth) {
                return average_fidelity_closed(
                    ChannelParams(spec.p_fixed, spec.j_values.front(), spec.m), w, depth);
            });
        } else {
            depth_series("p", "f_av", [&](double p, int depth) {
                return average_fidelity_closed(ChannelParams(p, spec.j_values.front(), spec.m),
                                               spec.omega, depth);
            });
        }
    } else if (spec.quantity == "p_success") {
        if (spec.x_var == "concurrence") {
            depth_series("concurrence", "p_success", [&](double c, int depth) {
                return success_probability_closed_from_concurrence(c, spec.omega, depth, spec.m);
            });
        } else if (spec.x_var == "omega") {
            depth_series("omega", "p_success", [&](double w, int depth) {
                return success_probability_closed(
                    ChannelParams(spec.p_fixed, spec.j_values.front(), spec.m), w, depth);
            });
        } else {
            depth_series("p", "p_success", [&](double p, int depth) {
                return success_probability_closed(
                    ChannelParams(p, spec.j_values.front(), spec.m), spec.omega, depth);
            });
        }
    } else {
        throw InvalidSpec("unknown sweep quantity '" + spec.quantity + "'");
    }
    return sweep;
}

void write_csv(const Sweep& sweep, std::ostream& out) {
    out << sweep.series_name << ',' << sweep.x_name << ',' << sweep.y_name << '\n';
    for (const Row& row : sweep.rows) {
        out << num17(row.series) << ',' << num17(row.x) << ',' << num17(row.y) << '\n';
    }
}

void write_json(const Sweep& sweep, std::ostream& out) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const Row& row : sweep.rows) {
        nlohmann::ordered_json record;
        record[sweep.series_name] = row.series;
        record[sweep.x_name] = row.x;
        record[sweep.y_name] = row.y;
        records.push_back(std::move(record));
    }
    out << records.dump(2) << '\n';
}

}  // namespace

SweepSpec figure_spec(const std::string& id) {
    SweepSpec spec;
    spec.figure = id;
    if (id == "fig1") {
        spec.x_var = "p";
        spec.j_values = {0.5, 1.0, 1.5, 2.5, 15.5};
        spec.m = 0;
        spec.quantity = "concurrence";
    } else if (id == "fig3a" || id == "fig3b") {
        spec.x_var = "p";
        spec.j_values = {1.0, 2.0, 4.0, 8.0, 15.5};
        spec.m = 0;
        spec.quantity = id == "fig3a" ? "f_av_max" : "p_success_max";
    } else if (id == "fig4a" || id == "fig4b") {
        spec.x_var = "concurrence";
        spec.depths = {0, 1, 2};
        spec.m = 0;
        spec.omega = id == "fig4a" ? M_PI : 0.0;
        spec.quantity = "f_av";
    } else if (id == "fig5a" || id == "fig5b" || id == "fig5c") {
        spec.x_var = "concurrence";
        spec.depths = {0, 1, 2};
        spec.m = id == "fig5b" ? 1 : 0;
        spec.omega = id == "fig5a" ? M_PI : 0.0;
        spec.quantity = "p_success";
    } else if (id == "custom") {
        spec.j_values = {1.0};
        spec.depths = {0};
    } else {
        throw InvalidSpec("unknown figure id '" + id + "'");
    }
    return spec;
}

void validate(const SweepSpec& spec) {
    if (spec.steps < 2) {
        throw InvalidSpec("a sweep needs at least 2 steps");
    }
    if (spec.x_var == "p" || spec.x_var == "concurrence") {
        if (spec.start < 0.0 || spec.stop > 1.0 || spec.start > spec.stop) {
            throw InvalidSpec("range for '" + spec.x_var + "' must stay within [0, 1]");
        }
    } else if (spec.x_var == "omega") {
        if (spec.start < 0.0 || spec.stop > 2.0 * M_PI || spec.start > spec.stop) {
            throw InvalidSpec("range for 'omega' must stay within [0, 2pi]");
        }
    } else {
        throw InvalidSpec("unknown sweep variable '" + spec.x_var + "'");
    }
    if (spec.m != 0 && spec.m != 1) {
        throw InvalidSpec("parity m must be 0 or 1");
    }
    const bool spin_quantity = spec.quantity == "concurrence" || spec.quantity == "f_av_max" ||
                               spec.quantity == "p_success_max";
    if (spin_quantity && spec.j_values.empty()) {
        throw InvalidSpec("spin-indexed sweeps need at least one j value");
    }
    if (!spin_quantity && spec.depths.empty()) {
        throw InvalidSpec("depth-indexed sweeps need at least one depth");
    }
    if (!spin_quantity && spec.x_var != "concurrence" && spec.j_values.empty()) {
        throw InvalidSpec("sweeps over p or omega need a j value");
    }
    for (int depth : spec.depths) {
        if (depth < 0 || (spec.quantity == "f_av" && depth > 2)) {
            throw InvalidSpec("closed-form fidelity exists for depths 0..2 only");
        }
    }
}

void emit_figure(const SweepSpec& spec, std::ostream& out) {
    const Sweep sweep = evaluate(spec);
    if (spec.format == Format::Csv) {
        write_csv(sweep, out);
    } else {
        write_json(sweep, out);
    }
}

std::string emit_figure_to_file(const SweepSpec& spec) {
    std::string path = spec.out_path;
    if (path.empty()) {
        path = spec.figure + (spec.format == Format::Csv ? ".csv" : ".json");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    emit_figure(spec, out);
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
    return path;
}

void inspect(const ChannelParams& params, const TargetState& target, int depth,
             std::ostream& out) {
    const ChannelDescriptor channel = build_channel(params);
    out << "channel: p=" << params.overlap << " j=" << params.spin << " m=" << params.parity
        << "  [" << to_string(limiting_form(params)) << "]\n";
    out << "  amplitudes |00,01,10,11> =";
    for (const cx& a : channel.state.amp) out << ' ' << a.real();
    out << "\n  concurrence = " << channel.concurrence << '\n';

    const LogicalVec logical = target_logical(target, params.overlap, params.spin);
    out << "target: omega=" << target.omega() << "  logical=(" << logical.amp[0].real() << ", "
        << logical.amp[1].real() << ")\n";

    const AttemptReport report = primary_attempt(params, target);
    out << "primary attempt (pair CA):\n";
    out << "  outcome  probability    fidelity      success  correction  conditional\n";
    for (const PairOutcome& o : report.outcomes) {
        char line[128];
        std::snprintf(line, sizeof(line), "  %-8d %-14.10g %-13.10g %-8s %-11s", o.index,
                      o.probability, o.fidelity_raw, o.success ? "yes" : "no",
                      o.correction ? to_string(*o.correction) : "-");
        out << line;
        if (o.conditional) {
            out << '(' << o.conditional->amp[0].real() << ", " << o.conditional->amp[1].real()
                << ')';
        } else {
            out << "(zero branch)";
        }
        out << '\n';
    }
    out << "  f_av = " << report.f_av << "   p_success = " << report.p_success << '\n';

    if (depth > 0) {
        const std::vector<CumulativeStats> stats = run_repeated(params, target, depth);
        out << "cumulative stats (depth: p_success  f_av_accrued  f_av_all):\n";
        double accrued0 = 0.0;
        for (const PairOutcome& o : report.outcomes) {
            if (o.success) accrued0 += o.probability * o.fidelity_raw;
        }
        char line[128];
        std::snprintf(line, sizeof(line), "  %-6d %-12.10g %-13.10g %-12.10g\n", 0,
                      report.p_success, accrued0, report.f_av);
        out << line;
        for (const CumulativeStats& s : stats) {
            std::snprintf(line, sizeof(line), "  %-6d %-12.10g %-13.10g %-12.10g\n", s.n,
                          s.p_success, s.f_av_accrued, s.f_av_all);
            out << line;
        }
    }
}

VerifySummary run_verify(const oracle::AdjudicationGrid& grid, std::ostream& ledger) {
    const std::vector<oracle::ComparisonReport> reports = oracle::adjudicate(grid);
    oracle::write_ledger(reports, ledger);
    VerifySummary summary;
    summary.rows = reports.size();
    for (const oracle::ComparisonReport& report : reports) {
        switch (report.verdict) {
            case oracle::Verdict::Agree: ++summary.agree; break;
            case oracle::Verdict::EngineOracleAgreePaperDiffers: ++summary.paper_differs; break;
            case oracle::Verdict::Disagree: ++summary.disagree; break;
        }
    }
    return summary;
}

oracle::AdjudicationGrid load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidSpec("cannot read grid file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("malformed grid file '" + path + "': " + e.what());
    }
    oracle::AdjudicationGrid grid = oracle::AdjudicationGrid::default_grid();
    try {
        if (doc.contains("p")) grid.p = doc.at("p").get<std::vector<double>>();
        if (doc.contains("j")) grid.j = doc.at("j").get<std::vector<double>>();
        if (doc.contains("omega")) grid.omega = doc.at("omega").get<std::vector<double>>();
        if (doc.contains("m")) grid.m = doc.at("m").get<std::vector<int>>();
        if (doc.contains("max_depth")) grid.max_depth = doc.at("max_depth").get<int>();
        if (doc.contains("engine_oracle_tol")) {
            grid.engine_oracle_tol = doc.at("engine_oracle_tol").get<double>();
        }
        if (doc.contains("paper_tol")) grid.paper_tol = doc.at("paper_tol").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("grid file '" + path + "' has wrong field types: " + e.what());
    }
    return grid;
}

}  // namespace spincat::figures
