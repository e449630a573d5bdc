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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "spincat/figures.hpp"

using namespace spincat;
using figures::SweepSpec;

namespace {

std::string emit_to_string(const SweepSpec& spec) {
    std::ostringstream out;
    figures::emit_figure(spec, out);
    return out.str();
}

std::vector<std::array<std::string, 3>> parse_csv(const std::string& text) {
    std::vector<std::array<std::string, 3>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        const size_t c1 = line.find(',');
        const size_t c2 = line.find(',', c1 + 1);
        rows.push_back({line.substr(0, c1), line.substr(c1 + 1, c2 - c1 - 1),
                        line.substr(c2 + 1)});
    }
    return rows;
}

}  // namespace

TEST_CASE("every figure emits byte-identical output across runs") {
    for (const char* id : {"fig1", "fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b", "fig5c"}) {
        const SweepSpec spec = figures::figure_spec(id);
        CHECK(emit_to_string(spec) == emit_to_string(spec));
    }
}

TEST_CASE("fig1 content") {
    const std::string text = emit_to_string(figures::figure_spec("fig1"));
    CHECK(text.rfind("j,p,concurrence\n", 0) == 0);
    const auto rows = parse_csv(text);
    CHECK(rows.size() == 5 * 201);
    for (const auto& row : rows) {
        if (row[1] == "0") CHECK(row[2] == "1");  // maximal entanglement at p = 0
        if (row[1] == "1") CHECK(row[2] == "0");  // separable at p = 1
    }
}

TEST_CASE("fig3a reaches unit fidelity at p = 1 for every spin") {
    const std::string text = emit_to_string(figures::figure_spec("fig3a"));
    const auto rows = parse_csv(text);
    size_t endpoint_rows = 0;
    for (const auto& row : rows) {
        if (row[1] == "1") {
            CHECK(row[2] == "1");
            ++endpoint_rows;
        }
    }
    CHECK(endpoint_rows == 5);
}

TEST_CASE("fig3a and fig3b report the same maximizing angle") {
    const auto f_rows = parse_csv(emit_to_string(figures::figure_spec("fig3a")));
    const auto p_rows = parse_csv(emit_to_string(figures::figure_spec("fig3b")));
    REQUIRE(f_rows.size() == p_rows.size());
    for (size_t i = 0; i < f_rows.size(); ++i) {
        // For m = 0 the maximizing angle is omega = 0, where the primary
        // average fidelity and success probability coincide.
        CHECK(f_rows[i][2] == p_rows[i][2]);
        const ChannelParams params(std::stod(f_rows[i][1]), std::stod(f_rows[i][0]), 0);
        CHECK(std::stod(f_rows[i][2]) ==
              doctest::Approx(success_probability_closed(params, 0.0, 0)).epsilon(1e-14));
    }
}

TEST_CASE("fig5b series are the dyadic constants") {
    const auto rows = parse_csv(emit_to_string(figures::figure_spec("fig5b")));
    CHECK(rows.size() == 3 * 201);
    for (const auto& row : rows) {
        if (row[0] == "0") CHECK(row[2] == "0.5");
        if (row[0] == "1") CHECK(row[2] == "0.75");
        if (row[0] == "2") CHECK(row[2] == "0.875");
    }
}

TEST_CASE("fig4 sweeps follow the closed fidelity forms") {
    const auto rows = parse_csv(emit_to_string(figures::figure_spec("fig4a")));
    CHECK(rows.size() == 3 * 201);
    for (const auto& row : rows) {
        const int depth = std::stoi(row[0]);
        const double c = std::stod(row[1]);
        const double expected = average_fidelity_closed_from_concurrence(c, M_PI, depth, 0);
        CHECK(std::stod(row[2]) == doctest::Approx(expected).epsilon(1e-14));
    }
    // at full entanglement and omega = pi the ladder is 1/2, 3/4, 7/8 again
    const auto last = rows.back();
    CHECK(last[0] == "2");
    CHECK(last[1] == "1");
}

TEST_CASE("JSON output mirrors the CSV records") {
    SweepSpec spec = figures::figure_spec("fig1");
    spec.steps = 11;
    spec.format = figures::Format::Json;
    const nlohmann::json doc = nlohmann::json::parse(emit_to_string(spec));
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 5 * 11);
    CHECK(doc[0].contains("j"));
    CHECK(doc[0].contains("p"));
    CHECK(doc[0].contains("concurrence"));
    CHECK(doc[0]["p"].get<double>() == 0.0);
    CHECK(doc[0]["concurrence"].get<double>() == 1.0);

    spec.format = figures::Format::Csv;
    CHECK(parse_csv(emit_to_string(spec)).size() == doc.size());
}

TEST_CASE("custom sweeps expose the spare parameters") {
    SweepSpec spec;
    spec.figure = "custom";
    spec.x_var = "omega";
    spec.start = 0.0;
    spec.stop = 2.0 * M_PI;
    spec.steps = 9;
    spec.quantity = "p_success";
    spec.depths = {0};
    spec.j_values = {2.0};
    spec.m = 0;
    spec.p_fixed = 0.5;
    const auto rows = parse_csv(emit_to_string(spec));
    CHECK(rows.size() == 9);
    const ChannelParams params(0.5, 2.0, 0);
    CHECK(std::stod(rows[0][2]) ==
          doctest::Approx(success_probability_closed(params, 0.0, 0)).epsilon(1e-14));
    CHECK(std::stod(rows[4][2]) ==
          doctest::Approx(success_probability_closed(params, M_PI, 0)).epsilon(1e-14));
}

TEST_CASE("sweep validation") {
    SweepSpec spec = figures::figure_spec("fig1");
    spec.steps = 1;
    CHECK_THROWS_AS(figures::validate(spec), InvalidSpec);
    spec = figures::figure_spec("fig1");
    spec.stop = 1.5;
    CHECK_THROWS_AS(figures::validate(spec), InvalidSpec);
    spec = figures::figure_spec("fig4a");
    spec.depths = {0, 3};
    CHECK_THROWS_AS(figures::validate(spec), InvalidSpec);
    CHECK_THROWS_AS(figures::figure_spec("fig9"), InvalidSpec);

    SweepSpec custom;
    custom.quantity = "nonsense";
    CHECK_THROWS_AS(emit_to_string(custom), InvalidSpec);
}

TEST_CASE("inspect renders the outcome table") {
    std::ostringstream out;
    figures::inspect(ChannelParams(0.5, 1.0, 0), TargetState::from_angle(M_PI / 2.0), 2, out);
    const std::string text = out.str();
    CHECK(text.find("concurrence = 0.6") != std::string::npos);
    CHECK(text.find("p_success = 0.5") != std::string::npos);
    CHECK(text.find("0.4375") != std::string::npos);  // depth-2 accrued fidelity

    std::ostringstream zero;
    figures::inspect(ChannelParams(1.0, 1.0, 0), TargetState::from_angle(0.0), 0, zero);
    CHECK(zero.str().find("(zero branch)") != std::string::npos);
}

TEST_CASE("verify summary and grid loading") {
    oracle::AdjudicationGrid grid;
    grid.p = {0.0, 0.5};
    grid.j = {1.0};
    grid.omega = {0.0, M_PI / 2.0};
    grid.m = {0, 1};
    grid.max_depth = 2;
    std::ostringstream ledger;
    const figures::VerifySummary summary = figures::run_verify(grid, ledger);
    CHECK(summary.ok());
    CHECK(summary.rows > 0);
    CHECK(summary.agree + summary.paper_differs + summary.disagree == summary.rows);
    CHECK(ledger.str().find("AGREE") != std::string::npos);

    const std::string good_path = "test_grid_ok.json";
    {
        std::ofstream out(good_path);
        out << R"({"p": [0.0, 0.25], "j": [1.0], "omega": [0.0], "m": [0], "max_depth": 1})";
    }
    const oracle::AdjudicationGrid loaded = figures::load_grid(good_path);
    CHECK(loaded.p.size() == 2);
    CHECK(loaded.max_depth == 1);
    CHECK(loaded.engine_oracle_tol == 1e-10);
    std::remove(good_path.c_str());

    const std::string bad_path = "test_grid_bad.json";
    {
        std::ofstream out(bad_path);
        out << "{not json";
    }
    CHECK_THROWS_AS(figures::load_grid(bad_path), InvalidSpec);
    std::remove(bad_path.c_str());
    CHECK_THROWS_AS(figures::load_grid("no_such_file.json"), InvalidSpec);
}
