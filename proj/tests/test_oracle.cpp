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

#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "spincat/oracle.hpp"
#include "spincat/teleport.hpp"

using namespace spincat;

namespace {

LogicalVec random_logical(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    LogicalVec v{{cx(gauss(rng), gauss(rng)), cx(gauss(rng), gauss(rng))}};
    return v.normalized();
}

}  // namespace

TEST_CASE("coherent basis change round trip") {
    std::mt19937_64 rng(5);
    for (double p : {0.0, 0.3, 0.7}) {
        for (int trial = 0; trial < 20; ++trial) {
            const LogicalVec v = random_logical(rng);
            const oracle::CoherentVec coh = oracle::to_coherent(v, p, 1.0);
            const LogicalVec back = oracle::from_coherent(coh);
            CHECK(std::abs(back.amp[0] - v.amp[0]) <= 1e-12);
            CHECK(std::abs(back.amp[1] - v.amp[1]) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(oracle::to_coherent(LogicalVec{{1.0, 0.0}}, 1.0, 0.5), SingularBasis);
    CHECK_THROWS_AS(oracle::from_coherent(oracle::CoherentVec{{1.0, 0.0}, 1.0}), SingularBasis);
}

TEST_CASE("Gram inner products match logical inner products") {
    std::mt19937_64 rng(17);
    for (double p : {0.0, 0.3, 0.7}) {
        for (int trial = 0; trial < 20; ++trial) {
            const LogicalVec u = random_logical(rng);
            const LogicalVec v = random_logical(rng);
            const cx direct = inner(u, v);
            const cx through_gram =
                oracle::gram_inner(oracle::to_coherent(u, p, 1.5), oracle::to_coherent(v, p, 1.5));
            CHECK(std::abs(direct - through_gram) <= 1e-12);
        }
    }
}

TEST_CASE("named coherent-basis examples") {
    const oracle::CoherentVec coh = oracle::to_coherent(LogicalVec{{1.0, 0.0}}, 0.0, 0.5);
    CHECK(coh.coeff[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(coh.coeff[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    // A bare branch maps to the weight pair (A, B).
    const double q = 0.5;
    const LogicalVec branch = oracle::from_coherent(oracle::CoherentVec{{1.0, 0.0}, q});
    CHECK(branch.amp[0].real() == doctest::Approx(std::sqrt((1.0 + q) / 2.0)).epsilon(1e-15));
    CHECK(branch.amp[1].real() == doctest::Approx(std::sqrt((1.0 - q) / 2.0)).epsilon(1e-15));
    CHECK(branch.squared_norm() == doctest::Approx(1.0).epsilon(1e-14));

    // Gram norm of the even superposition reproduces the cat normalization.
    const oracle::CoherentVec even{{1.0, 1.0}, 0.5};
    const double gram_norm = std::sqrt(oracle::gram_inner(even, even).real());
    CHECK(gram_norm == doctest::Approx(1.0 / cat_normalization(ChannelParams(0.5, 0.5, 0)))
                           .epsilon(1e-14));
}

TEST_CASE("spin-1/2 overlap factorizes into the pair overlap") {
    for (cx eta : {cx(0.3, 0.0), cx(0.0, 0.8), cx(0.5, 0.5)}) {
        const cx single = oracle::spin_half_overlap(eta);
        CHECK(std::abs(single.imag()) <= 1e-15);
        CHECK(std::abs(single.real() - overlap_from_eta(eta)) <= 1e-15);
        const double p = std::abs(overlap_from_eta(eta));
        for (int factors = 1; factors <= 8; ++factors) {
            cx product = 1.0;
            for (int i = 0; i < factors; ++i) product *= single;
            CHECK(std::abs(std::abs(product.real()) - std::pow(p, factors)) <= 1e-12);
        }
    }
}

TEST_CASE("inverted branch weights normalize through the Gram form") {
    for (double p : {0.0, 0.3, 0.7, 0.99}) {
        for (double j : {1.0, 2.0, 4.0}) {
            for (double omega : {0.0, 0.9, M_PI / 2.0, 2.4, M_PI}) {
                const auto [a, b] = oracle::branch_weights_for_angle(omega, p, j);
                CHECK(std::abs(a * a + b * b - 1.0) <= 1e-12);

                const double q = pow_overlap(p, j);
                oracle::CoherentVec coh{{a, b}, q};
                const double norm2 = oracle::gram_inner(coh, coh).real();
                CHECK(norm2 > 0.0);
                coh.coeff[0] /= std::sqrt(norm2);
                coh.coeff[1] /= std::sqrt(norm2);
                CHECK(oracle::gram_inner(coh, coh).real() == doctest::Approx(1.0).epsilon(1e-12));

                const LogicalVec logical = oracle::from_coherent(coh);
                CHECK(std::abs(logical.amp[0].real() - std::cos(omega / 2.0)) <= 1e-12);
                CHECK(std::abs(logical.amp[1].real() - std::sin(omega / 2.0)) <= 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(oracle::branch_weights_for_angle(1.0, 1.0, 1.0), SingularBasis);
}

TEST_CASE("oracle tree quoted values") {
    const std::vector<CumulativeStats> odd =
        oracle::oracle_tree(ChannelParams(0.4, 2.0, 1), TargetState::from_angle(1.2), 1);
    CHECK(std::abs(odd[0].p_success - 0.75) <= 5e-15);

    const oracle::OracleEvaluation even =
        oracle::oracle_evaluate(ChannelParams(0.5, 1.0, 0), TargetState::from_angle(0.0), 0);
    CHECK(std::abs(even.stats[0].p_success - 0.9) <= 1e-12);

    double total = 0.0;
    for (double prob : even.primary_probability) total += prob;
    CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("oracle agrees with the engine pointwise") {
    for (double p : {0.0, 0.35, 0.8}) {
        for (int m : {0, 1}) {
            const ChannelParams params(p, 2.0, m);
            const TargetState target = TargetState::from_angle(1.9);
            const AttemptReport report = primary_attempt(params, target);
            const oracle::OracleEvaluation eval = oracle::oracle_evaluate(params, target, 3);
            for (int k = 0; k < 4; ++k) {
                CHECK(std::abs(report.outcomes[k].probability - eval.primary_probability[k]) <=
                      1e-10);
                CHECK(std::abs(report.outcomes[k].fidelity_raw - eval.primary_fidelity[k]) <=
                      1e-10);
            }
            const std::vector<CumulativeStats> tree = run_repeated(params, target, 3);
            for (int depth = 1; depth <= 3; ++depth) {
                CHECK(std::abs(tree[depth - 1].p_success - eval.stats[depth].p_success) <= 1e-10);
                CHECK(std::abs(tree[depth - 1].f_av_accrued - eval.stats[depth].f_av_accrued) <=
                      1e-10);
                CHECK(std::abs(tree[depth - 1].f_av_all - eval.stats[depth].f_av_all) <= 1e-10);
            }
        }
    }
}

TEST_CASE("as-printed outcome probabilities carry the prefactor defect") {
    const ChannelParams params(0.0, 1.0, 0);
    const auto [a, b] = oracle::branch_weights_for_angle(1.0, 0.0, 1.0);
    const std::array<double, 4> printed = oracle::as_printed::outcome_probabilities(params, a, b);
    const oracle::OracleEvaluation eval =
        oracle::oracle_evaluate(params, TargetState::from_angle(1.0), 0);
    // At p = 0 the true probabilities are uniform at 1/4; the literal
    // transcription gives sqrt(2)/4 on outcomes 0 and 3 and sqrt(2)/2 on 1
    // and 2, and does not even normalize.
    double printed_total = 0.0;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(eval.primary_probability[k] - 0.25) <= 1e-12);
        const double expected = (k == 0 || k == 3) ? std::sqrt(2.0) / 4.0 : std::sqrt(2.0) / 2.0;
        CHECK(std::abs(printed[k] - expected) <= 1e-12);
        printed_total += printed[k];
    }
    CHECK(std::abs(printed_total - 3.0 / std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("as-printed second-attempt form differs away from the half angle") {
    const ChannelParams params(0.5, 1.0, 0);
    const double consistent_half = average_fidelity_closed(params, M_PI / 2.0, 2);
    const double printed_half = oracle::as_printed::second_attempt_average_fidelity(params, M_PI / 2.0);
    CHECK(std::abs(consistent_half - printed_half) <= 1e-12);

    const double consistent_zero = average_fidelity_closed(params, 0.0, 2);
    const double printed_zero = oracle::as_printed::second_attempt_average_fidelity(params, 0.0);
    CHECK(std::abs(consistent_zero - printed_zero) > 1e-3);
}

TEST_CASE("adjudication on a compact grid") {
    oracle::AdjudicationGrid grid;
    grid.p = {0.0, 0.5, 0.9};
    grid.j = {1.0, 2.0};
    grid.omega = {0.0, M_PI / 2.0, M_PI};
    grid.m = {0, 1};
    grid.max_depth = 2;

    const std::vector<oracle::ComparisonReport> reports = oracle::adjudicate(grid);
    CHECK(oracle::all_engine_oracle_agree(reports));

    bool saw_prose_row = false;
    bool saw_printed_difference = false;
    for (const oracle::ComparisonReport& report : reports) {
        CHECK(report.verdict != oracle::Verdict::Disagree);
        if (report.quantity == "f_av_accrued_prose") {
            saw_prose_row = true;
            CHECK(report.verdict == oracle::Verdict::EngineOracleAgreePaperDiffers);
            CHECK(*report.paper == 0.75);
            CHECK(std::abs(report.engine - 0.375) <= 1e-12);
        }
        if (report.quantity.rfind("P_", 0) == 0 &&
            report.verdict == oracle::Verdict::EngineOracleAgreePaperDiffers) {
            saw_printed_difference = true;
        }
    }
    CHECK(saw_prose_row);
    CHECK(saw_printed_difference);
}

TEST_CASE("ledger serialization format") {
    oracle::ComparisonReport report;
    report.p = 0.1;
    report.j = 2.0;
    report.m = 1;
    report.omega = M_PI;
    report.depth = 2;
    report.quantity = "p_success";
    report.engine = 0.875;
    report.oracle = 0.875;
    report.deviation = 0.0;
    report.verdict = oracle::Verdict::Agree;

    std::ostringstream out;
    oracle::write_ledger({report}, out);
    CHECK(out.str() ==
          "0.10000000000000001,2,1,3.1415926535897931,2,p_success,0.875,0.875,,0,AGREE\n");

    report.paper = 1.0 / 3.0;
    report.verdict = oracle::Verdict::EngineOracleAgreePaperDiffers;
    std::ostringstream with_paper;
    oracle::write_ledger({report}, with_paper);
    CHECK(with_paper.str().find(",0.33333333333333331,") != std::string::npos);
    CHECK(with_paper.str().find("ENGINE_ORACLE_AGREE_PAPER_DIFFERS") != std::string::npos);
}

TEST_CASE("grid validation") {
    oracle::AdjudicationGrid grid = oracle::AdjudicationGrid::default_grid();
    CHECK(grid.point_count() >= 500);
    grid.p.push_back(1.0);
    CHECK_THROWS_AS(oracle::adjudicate(grid), InvalidSpec);
    oracle::AdjudicationGrid deep = oracle::AdjudicationGrid::default_grid();
    deep.max_depth = 0;
    CHECK_THROWS_AS(oracle::adjudicate(deep), InvalidSpec);
}
