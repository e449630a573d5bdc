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

#include "spincat/oracle.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <cstdio>
#include <ostream>

#include "spincat/channel.hpp"

namespace spincat::oracle {

namespace {

using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Vec8 = Eigen::Matrix<cx, 8, 1>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<cx, 8, 8>;

// Branch weights of |eta>^(2s) in the logical basis at branch overlap q.
struct Weights {
    double sym;
    double antisym;
};

Weights weights_at(double q) {
    return {std::sqrt((1.0 + q) / 2.0), std::sqrt((1.0 - q) / 2.0)};
}

// Per-party Gram matrix of the nonorthogonal branch basis.
Mat2 gram_matrix(double q) {
    Mat2 g;
    g << 1.0, q, q, 1.0;
    return g;
}

// Per-party change of basis, coherent coefficients -> logical amplitudes.
// Satisfies T^dagger T = Gram, so Gram-normalized vectors map to unit ones.
Mat2 basis_change(double q) {
    const Weights w = weights_at(q);
    Mat2 t;
    t << w.sym, w.sym, w.antisym, -w.antisym;
    return t;
}

// The oracle's own copy of the measurement vectors.
Vec4 ghz_vector(int k) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (k) {
        case 0: return Vec4(r, 0.0, 0.0, r);
        case 1: return Vec4(0.0, r, r, 0.0);
        case 2: return Vec4(0.0, r, -r, 0.0);
        default: return Vec4(r, 0.0, 0.0, -r);
    }
}

// |g_k><g_k| on the measured pair, embedded into C (x) A (x) B.
Mat8 projector(int k, MeasuredPair pair) {
    const Vec4 g = ghz_vector(k);
    const Mat4 p4 = g * g.adjoint();
    Mat8 p8 = Mat8::Zero();
    if (pair == MeasuredPair::CA) {
        p8 = Eigen::kroneckerProduct(p4, Mat2::Identity());
    } else {
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int cc = 0; cc < 2; ++cc)
                        for (int bb = 0; bb < 2; ++bb)
                            p8(4 * c + 2 * a + b, 4 * cc + 2 * a + bb) =
                                p4(2 * c + b, 2 * cc + bb);
    }
    return p8;
}

// |g_k on the pair> (x) |t on the remaining party>, for fidelity overlaps
// against projected states.
Vec8 embed_with_remainder(int k, MeasuredPair pair, const Vec2& t) {
    const Vec4 g = ghz_vector(k);
    Vec8 w = Vec8::Zero();
    for (int c = 0; c < 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const int pair_slot = pair == MeasuredPair::CA ? 2 * c + a : 2 * c + b;
                const int rest_slot = pair == MeasuredPair::CA ? b : a;
                w(4 * c + 2 * a + b) = g(pair_slot) * t(rest_slot);
            }
        }
    }
    return w;
}

struct Scene {
    Vec8 state;       // unit logical tripartite state
    Vec2 target;      // unit logical target
    double a = 0.0;   // branch weights actually used
    double b = 0.0;
};

// Raw branch weights of the target, inverting the angle substitution when
// the target was specified by omega.
std::pair<double, double> target_branches(const ChannelParams& params, const TargetState& target) {
    if (target.from_angle_ctor()) {
        return branch_weights_for_angle(target.omega(), params.overlap, params.spin);
    }
    return {target.branch_plus(), target.branch_minus()};
}

// Rebuild the combined state from raw coherent-branch coefficients: tensor
// the three parties, normalize through the Gram form, change basis.
Scene build_scene(const ChannelParams& params, const TargetState& target) {
    if (params.overlap >= 1.0) {
        throw SingularBasis("the coherent-branch basis degenerates at p = 1");
    }
    const double q = params.split_overlap();
    const auto [a, b] = target_branches(params, target);
    const double channel_sign = params.parity == 0 ? 1.0 : -1.0;

    Vec8 raw = Vec8::Zero();
    for (int c = 0; c < 2; ++c) {
        const double tc = c == 0 ? a : b;
        raw(4 * c + 0) += tc;                 // |eta eta> on (A, B)
        raw(4 * c + 3) += tc * channel_sign;  // |-eta -eta>
    }
    const Mat2 g = gram_matrix(q);
    const Mat8 gram8 = Eigen::kroneckerProduct(g, Eigen::kroneckerProduct(g, g).eval()).eval();
    const double norm2 = (raw.adjoint() * gram8 * raw).value().real();
    if (norm2 <= 0.0) {
        throw DegenerateTarget("combined coherent superposition has vanishing norm");
    }
    raw /= std::sqrt(norm2);

    const Mat2 t = basis_change(q);
    const Mat8 change = Eigen::kroneckerProduct(t, Eigen::kroneckerProduct(t, t).eval()).eval();

    Vec2 target_raw(a, b);
    const double target_norm2 = (target_raw.adjoint() * g * target_raw).value().real();
    if (target_norm2 <= 0.0) {
        throw DegenerateTarget("target coherent superposition has vanishing norm");
    }

    Scene scene;
    scene.state = change * raw;
    scene.target = (t * target_raw) / std::sqrt(target_norm2);
    scene.a = a;
    scene.b = b;
    return scene;
}

}  // namespace

cx gram_inner(const CoherentVec& lhs, const CoherentVec& rhs) {
    const double q = lhs.branch_overlap;
    cx sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            sum += std::conj(lhs.coeff[i]) * (i == k ? 1.0 : q) * rhs.coeff[k];
        }
    }
    return sum;
}

CoherentVec to_coherent(const LogicalVec& vec, double p, double half_spin) {
    if (p >= 1.0) {
        throw SingularBasis("basis change undefined at p = 1");
    }
    const double q = pow_overlap(p, 2.0 * half_spin);
    const Weights w = weights_at(q);
    const cx u = vec.amp[0] / w.sym;
    const cx v = vec.amp[1] / w.antisym;
    return CoherentVec{{(u + v) / 2.0, (u - v) / 2.0}, q};
}

LogicalVec from_coherent(const CoherentVec& vec) {
    if (vec.branch_overlap >= 1.0) {
        throw SingularBasis("basis change undefined at p = 1");
    }
    const Weights w = weights_at(vec.branch_overlap);
    return LogicalVec{{w.sym * (vec.coeff[0] + vec.coeff[1]),
                       w.antisym * (vec.coeff[0] - vec.coeff[1])}};
}

cx spin_half_overlap(cx eta) {
    // Amplitudes of |eta> over {down, up} are (1, eta)/sqrt(1 + |eta|^2).
    const double denom = 1.0 + std::norm(eta);
    return (1.0 + std::conj(eta) * (-eta)) / denom;
}

std::pair<double, double> branch_weights_for_angle(double omega, double p, double j) {
    if (p >= 1.0) {
        throw SingularBasis("no coherent-branch preimage of a general target at p = 1");
    }
    const double q = pow_overlap(p, j);
    const double u = std::cos(omega / 2.0);
    const double v = std::sin(omega / 2.0);
    const double sym2 = (1.0 + q) / 2.0;
    const double antisym2 = (1.0 - q) / 2.0;
    const double k = u * u / sym2 - v * v / antisym2;
    const double ab = k / (4.0 - 2.0 * k * q);
    const double scale = std::sqrt(1.0 + 2.0 * ab * q);
    const double sum = u * scale / std::sqrt(sym2);
    const double diff = v * scale / std::sqrt(antisym2);
    return {(sum + diff) / 2.0, (sum - diff) / 2.0};
}

OracleEvaluation oracle_evaluate(const ChannelParams& params, const TargetState& target, int n) {
    return oracle_evaluate(params, target, n, SuccessPolicy::for_parity(params.parity));
}

OracleEvaluation oracle_evaluate(const ChannelParams& params, const TargetState& target, int n,
                                 const SuccessPolicy& policy) {
    if (n < 0) {
        throw std::invalid_argument("attempt depth must be nonnegative");
    }
    if (n > kMaxAttempts) {
        throw TreeTooDeep("attempt depth " + std::to_string(n) + " exceeds the guard of " +
                          std::to_string(kMaxAttempts));
    }
    const Scene scene = build_scene(params, target);
    const int rounds = n + 1;

    OracleEvaluation eval;
    eval.concurrence = oracle_concurrence(params);

    struct Branch {
        Vec8 state;
        double probability;
    };
    std::vector<Branch> frontier{{scene.state, 1.0}};

    std::vector<double> success_prob(rounds + 1, 0.0);
    std::vector<double> success_fid(rounds + 1, 0.0);
    std::vector<double> frontier_fid(rounds + 1, 0.0);  // failure leaves per round

    for (int round = 1; round <= rounds && !frontier.empty(); ++round) {
        const MeasuredPair pair = round % 2 == 1 ? MeasuredPair::CA : MeasuredPair::CB;
        const std::array<bool, 4>& success = policy.flags(round);
        std::array<Mat8, 4> proj;
        std::array<Vec8, 4> reference;
        for (int k = 0; k < 4; ++k) {
            proj[k] = projector(k, pair);
            reference[k] = embed_with_remainder(k, pair, scene.target);
        }
        std::vector<Branch> next;
        for (const Branch& parent : frontier) {
            for (int k = 0; k < 4; ++k) {
                const Vec8 projected = proj[k] * parent.state;
                const double conditional_prob = projected.squaredNorm();
                const double joint = parent.probability * conditional_prob;
                if (round == 1) {
                    eval.primary_probability[k] = conditional_prob;
                }
                if (joint < kBranchFloor || conditional_prob < kBranchFloor) {
                    continue;  // pruned: contributes nothing beyond its ~0 mass
                }
                const Vec8 post = projected / std::sqrt(conditional_prob);
                const double fid = std::norm(reference[k].dot(post));
                if (round == 1) {
                    eval.primary_fidelity[k] = fid;
                }
                if (success[k]) {
                    success_prob[round] += joint;
                    success_fid[round] += joint * fid;
                } else {
                    frontier_fid[round] += joint * fid;
                    if (round < rounds) {
                        next.push_back({post, joint});
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    eval.stats.reserve(static_cast<size_t>(rounds));
    double cum_prob = 0.0;
    double cum_fid = 0.0;
    for (int depth = 0; depth < rounds; ++depth) {
        cum_prob += success_prob[depth + 1];
        cum_fid += success_fid[depth + 1];
        CumulativeStats stats;
        stats.n = depth;
        stats.p_success = cum_prob;
        stats.f_av_accrued = cum_fid;
        stats.f_av_all = cum_fid + frontier_fid[depth + 1];
        eval.stats.push_back(stats);
    }
    return eval;
}

std::vector<CumulativeStats> oracle_tree(const ChannelParams& params, const TargetState& target,
                                         int n) {
    if (n < 1) {
        throw std::invalid_argument("repeated protocol needs n >= 1 attempts");
    }
    OracleEvaluation eval = oracle_evaluate(params, target, n);
    return {eval.stats.begin() + 1, eval.stats.end()};
}

double oracle_concurrence(const ChannelParams& params) {
    if (params.overlap >= 1.0) {
        throw SingularBasis("the coherent-branch basis degenerates at p = 1");
    }
    const double q = params.split_overlap();
    const double channel_sign = params.parity == 0 ? 1.0 : -1.0;
    Vec4 raw(1.0, 0.0, 0.0, channel_sign);
    const Mat2 g = gram_matrix(q);
    const Mat4 gram4 = Eigen::kroneckerProduct(g, g);
    const double norm2 = (raw.adjoint() * gram4 * raw).value().real();
    raw /= std::sqrt(norm2);
    const Mat2 t = basis_change(q);
    const Vec4 logical = Eigen::kroneckerProduct(t, t) * raw;
    return 2.0 * std::abs(logical(0) * logical(3) - logical(1) * logical(2));
}

namespace as_printed {

namespace {
double square(double x) { return x * x; }
}  // namespace

std::array<double, 4> outcome_probabilities(const ChannelParams& params, double a, double b) {
    const double q = params.split_overlap();
    const double sign = params.parity == 0 ? 1.0 : -1.0;
    const double A = std::sqrt((1.0 + q) / 2.0);
    const double B = std::sqrt((1.0 - q) / 2.0);
    const double nm = 1.0 / std::sqrt(2.0 + 2.0 * params.pair_overlap() * sign);
    const double nt = 1.0 / std::sqrt(1.0 + 2.0 * a * b * q);
    const double bp = 1.0 + sign;
    const double bm = 1.0 - sign;
    const double k = square(nt * nm) / 2.0;
    // Transcribed literally: the leading A and B weights appear to the
    // first power even though the projective route squares them.
    return {
        k * (A * square(A * A * (a + b) * bp + B * B * (a - b) * bm) +
             B * square(A * A * (a + b) * bm + B * B * (a - b) * bp)),
        k * (B * A * A * square((a + b) * bm + (a - b) * bp) +
             A * B * B * square((a + b) * bp + (a - b) * bm)),
        k * (B * A * A * square((a + b) * bm - (a - b) * bp) +
             A * B * B * square((a + b) * bp - (a - b) * bm)),
        k * (A * square(A * A * (a + b) * bp - B * B * (a - b) * bm) +
             B * square(A * A * (a + b) * bm - B * B * (a - b) * bp)),
    };
}

std::array<double, 4> outcome_fidelities(const ChannelParams& params, double a, double b) {
    const double q = params.split_overlap();
    const double sign = params.parity == 0 ? 1.0 : -1.0;
    const double A = std::sqrt((1.0 + q) / 2.0);
    const double B = std::sqrt((1.0 - q) / 2.0);
    const double nm = 1.0 / std::sqrt(2.0 + 2.0 * params.pair_overlap() * sign);
    const double nt = 1.0 / std::sqrt(1.0 + 2.0 * a * b * q);
    const double k2 = square(nt * nt * nm);
    const std::array<double, 4> prob = outcome_probabilities(params, a, b);

    std::array<double, 4> fid{};
    if (prob[0] > 0.0) {
        fid[0] = k2 / (2.0 * prob[0]) *
                 square(square(A * A * (a + b) + B * B * (a - b)) +
                        sign * square(A * A * (a + b) - B * B * (a - b)));
    }
    if (prob[1] > 0.0) {
        fid[1] = 2.0 * k2 / prob[1] *
                 square(B * A * A * A * (a + b) * (a - b * sign) +
                        A * B * B * B * (a - b) * (a + b * sign));
    }
    if (prob[2] > 0.0) {
        fid[2] = 2.0 * k2 / prob[2] *
                 square(B * A * A * A * (a + b) * (b - a * sign) +
                        A * B * B * B * (a - b) * (b + a * sign));
    }
    if (prob[3] > 0.0) {
        fid[3] = k2 / (2.0 * prob[3]) *
                 square((square(A * A * (a + b)) - square(B * B * (a - b))) * (1.0 + sign));
    }
    return fid;
}

double second_attempt_average_fidelity(const ChannelParams& params, double omega) {
    const double u = std::cos(omega);
    const double c = concurrence_analytic(params);
    const double lo = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double hi = std::sqrt(1.0 + c * c);
    const double increment = (square(hi - lo * u) + square(lo - hi * u)) / 32.0;
    return average_fidelity_closed(params, omega, 1) + increment;
}

}  // namespace as_printed

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Agree: return "AGREE";
        case Verdict::EngineOracleAgreePaperDiffers: return "ENGINE_ORACLE_AGREE_PAPER_DIFFERS";
        case Verdict::Disagree: return "DISAGREE";
    }
    return "?";
}

AdjudicationGrid AdjudicationGrid::default_grid() {
    AdjudicationGrid grid;
    grid.p = {0.0, 0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
    grid.j = {1.0, 2.0, 3.0, 4.0};
    grid.omega = {0.0, M_PI / 3.0, M_PI / 2.0, 2.0 * M_PI / 3.0, M_PI};
    grid.m = {0, 1};
    return grid;
}

size_t AdjudicationGrid::point_count() const {
    return p.size() * j.size() * omega.size() * m.size();
}

namespace {

Verdict classify(double engine, double oracle, std::optional<double> paper, double eo_tol,
                 double paper_tol) {
    if (std::abs(engine - oracle) > eo_tol) return Verdict::Disagree;
    if (paper && std::abs(engine - *paper) > paper_tol) {
        return Verdict::EngineOracleAgreePaperDiffers;
    }
    return Verdict::Agree;
}

}  // namespace

std::vector<ComparisonReport> adjudicate(const AdjudicationGrid& grid) {
    if (grid.max_depth < 1 || grid.max_depth > kMaxAttempts) {
        throw InvalidSpec("adjudication depth must lie in [1, " + std::to_string(kMaxAttempts) +
                          "]");
    }
    for (double p : grid.p) {
        if (!(p >= 0.0 && p < 1.0)) {
            throw InvalidSpec("adjudication grid requires 0 <= p < 1 (coherent basis)");
        }
    }
    std::vector<ComparisonReport> reports;

    for (double p : grid.p) {
        for (double j : grid.j) {
            for (int m : grid.m) {
                for (double omega : grid.omega) {
                    const ChannelParams params(p, j, m);
                    const TargetState target = TargetState::from_angle(omega);

                    const ChannelDescriptor channel = build_channel(params);
                    const AttemptReport primary = primary_attempt(params, target);
                    const std::vector<CumulativeStats> tree =
                        run_repeated(params, target, grid.max_depth);
                    const OracleEvaluation oracle =
                        oracle_evaluate(params, target, grid.max_depth);
                    const auto [a, b] = branch_weights_for_angle(omega, p, j);
                    const std::array<double, 4> printed_p =
                        as_printed::outcome_probabilities(params, a, b);
                    const std::array<double, 4> printed_f =
                        as_printed::outcome_fidelities(params, a, b);

                    auto push = [&](int depth, const std::string& quantity, double engine,
                                    double oracle_value, std::optional<double> paper) {
                        ComparisonReport report;
                        report.p = p;
                        report.j = j;
                        report.m = m;
                        report.omega = omega;
                        report.depth = depth;
                        report.quantity = quantity;
                        report.engine = engine;
                        report.oracle = oracle_value;
                        report.paper = paper;
                        report.deviation = std::abs(engine - oracle_value);
                        if (paper) {
                            report.deviation =
                                std::max(report.deviation, std::abs(engine - *paper));
                        }
                        report.verdict = classify(engine, oracle_value, paper,
                                                  grid.engine_oracle_tol, grid.paper_tol);
                        reports.push_back(std::move(report));
                    };

                    push(0, "concurrence", channel.concurrence, oracle.concurrence,
                         concurrence_analytic(params));
                    for (int k = 0; k < 4; ++k) {
                        push(0, "P_" + std::to_string(k), primary.outcomes[k].probability,
                             oracle.primary_probability[k], printed_p[k]);
                    }
                    for (int k = 0; k < 4; ++k) {
                        push(0, "F_" + std::to_string(k), primary.outcomes[k].fidelity_raw,
                             oracle.primary_fidelity[k], printed_f[k]);
                    }

                    double accrued0 = 0.0;
                    for (const PairOutcome& out : primary.outcomes) {
                        if (out.success) accrued0 += out.probability * out.fidelity_raw;
                    }
                    push(0, "f_av_all", primary.f_av, oracle.stats[0].f_av_all,
                         average_fidelity_closed(params, omega, 0));
                    push(0, "f_av_accrued", accrued0, oracle.stats[0].f_av_accrued, std::nullopt);
                    push(0, "p_success", primary.p_success, oracle.stats[0].p_success,
                         success_probability_closed(params, omega, 0));

                    for (int depth = 1; depth <= grid.max_depth; ++depth) {
                        const CumulativeStats& engine_stats = tree[depth - 1];
                        const CumulativeStats& oracle_stats = oracle.stats[depth];
                        push(depth, "p_success", engine_stats.p_success, oracle_stats.p_success,
                             success_probability_closed(params, omega, depth));
                        push(depth, "f_av_accrued", engine_stats.f_av_accrued,
                             oracle_stats.f_av_accrued,
                             depth <= 2 ? std::optional<double>(
                                              average_fidelity_closed(params, omega, depth))
                                        : std::nullopt);
                        push(depth, "f_av_all", engine_stats.f_av_all, oracle_stats.f_av_all,
                             std::nullopt);
                    }

                    if (grid.max_depth >= 2 && m == 0) {
                        push(2, "f_av_accrued_asprinted", tree[1].f_av_accrued,
                             oracle.stats[2].f_av_accrued,
                             as_printed::second_attempt_average_fidelity(params, omega));
                    }
                    if (std::abs(omega - M_PI / 2.0) < 1e-9 && m == 0) {
                        push(1, "f_av_accrued_prose", tree[0].f_av_accrued,
                             oracle.stats[1].f_av_accrued,
                             as_printed::first_attempt_half_angle_prose);
                    }
                }
            }
        }
    }
    return reports;
}

bool all_engine_oracle_agree(const std::vector<ComparisonReport>& reports) {
    for (const ComparisonReport& report : reports) {
        if (report.verdict == Verdict::Disagree) return false;
    }
    return true;
}

void write_ledger(const std::vector<ComparisonReport>& reports, std::ostream& out) {
    char buf[64];
    auto num = [&buf](double value) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return std::string(buf);
    };
    for (const ComparisonReport& r : reports) {
        out << num(r.p) << ',' << num(r.j) << ',' << r.m << ',' << num(r.omega) << ',' << r.depth
            << ',' << r.quantity << ',' << num(r.engine) << ',' << num(r.oracle) << ','
            << (r.paper ? num(*r.paper) : std::string()) << ',' << num(r.deviation) << ','
            << to_string(r.verdict) << '\n';
    }
}

}  // namespace spincat::oracle
