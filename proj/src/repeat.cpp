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

#include "spincat/repeat.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spincat {

SuccessPolicy SuccessPolicy::for_parity(int parity) {
    return SuccessPolicy{{success_flags(parity)}};
}

const std::array<bool, 4>& SuccessPolicy::flags(int round) const {
    if (per_round.empty()) {
        throw std::invalid_argument("success policy has no entries");
    }
    const size_t i = static_cast<size_t>(round - 1);
    return per_round[i < per_round.size() ? i : per_round.size() - 1];
}

TripartiteState post_measurement_state(const PairOutcome& outcome,
                                       const std::array<cx, 4>& basis_vector, MeasuredPair pair) {
    if (!outcome.conditional || outcome.probability < kBranchFloor) {
        throw ZeroBranch("no conditional state on a branch of probability " +
                         std::to_string(outcome.probability));
    }
    const LogicalVec& rest = *outcome.conditional;
    TripartiteState state;
    for (int c = 0; c < 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const int pair_slot = pair == MeasuredPair::CA ? 2 * c + a : 2 * c + b;
                const int rest_slot = pair == MeasuredPair::CA ? b : a;
                state.amp[4 * c + 2 * a + b] = basis_vector[pair_slot] * rest.amp[rest_slot];
            }
        }
    }
    return state;
}

AttemptTree build_attempt_tree(const ChannelParams& params, const TargetState& target, int rounds,
                               const SuccessPolicy& policy) {
    if (rounds < 1) {
        throw std::invalid_argument("at least one measurement round is required");
    }
    const ChannelDescriptor channel = build_channel(params);
    const LogicalVec wanted = target_logical(target, params.overlap, params.spin);

    AttemptTree tree{params, wanted, compose_tripartite(wanted, channel.state), rounds, {}};

    struct Frontier {
        TripartiteState state;
        double probability;
        std::vector<int> path;
    };
    std::vector<Frontier> frontier{{tree.root, 1.0, {}}};

    const GhzBasis& basis = GhzBasis::standard();
    for (int round = 1; round <= rounds && !frontier.empty(); ++round) {
        const MeasuredPair pair = round % 2 == 1 ? MeasuredPair::CA : MeasuredPair::CB;
        const std::array<bool, 4>& success = policy.flags(round);
        std::vector<Frontier> next;
        for (const Frontier& parent : frontier) {
            const std::array<PairOutcome, 4> outcomes = measure_pair(parent.state, pair);
            for (const PairOutcome& out : outcomes) {
                TreeNode node;
                node.round = round;
                node.path = parent.path;
                node.path.push_back(out.index);
                node.probability = parent.probability * out.probability;
                node.success = success[out.index];
                node.pruned = node.probability < kBranchFloor || !out.conditional;
                if (!node.pruned) {
                    node.conditional = out.conditional;
                    node.fidelity_raw = fidelity_raw(*out.conditional, wanted);
                    if (!node.success) {
                        node.post_state =
                            post_measurement_state(out, basis.vectors[out.index], pair);
                        if (round < rounds) {
                            next.push_back({*node.post_state, node.probability, node.path});
                        }
                    }
                }
                tree.nodes.push_back(std::move(node));
            }
        }
        frontier = std::move(next);
    }
    return tree;
}

CumulativeStats cumulative_stats(const AttemptTree& tree, int depth) {
    if (depth < 0 || depth >= tree.rounds) {
        throw std::invalid_argument("attempt depth " + std::to_string(depth) +
                                    " outside the enumerated tree");
    }
    const int last_round = depth + 1;
    CumulativeStats stats;
    stats.n = depth;
    for (const TreeNode& node : tree.nodes) {
        if (node.round > last_round) continue;
        if (node.success) {
            stats.p_success += node.probability;
            stats.f_av_accrued += node.probability * node.fidelity_raw;
        } else if (node.round == last_round || node.pruned) {
            // Live failure frontier at the truncation depth, plus any dead
            // (pruned) failure branches above it.
            stats.f_av_all += node.probability * node.fidelity_raw;
        }
    }
    stats.f_av_all += stats.f_av_accrued;
    return stats;
}

std::vector<CumulativeStats> run_repeated(const ChannelParams& params, const TargetState& target,
                                          int n) {
    return run_repeated(params, target, n, SuccessPolicy::for_parity(params.parity));
}

std::vector<CumulativeStats> run_repeated(const ChannelParams& params, const TargetState& target,
                                          int n, const SuccessPolicy& policy) {
    if (n < 1) {
        throw std::invalid_argument("repeated protocol needs n >= 1 attempts");
    }
    if (n > kMaxAttempts) {
        throw TreeTooDeep("attempt depth " + std::to_string(n) + " exceeds the guard of " +
                          std::to_string(kMaxAttempts));
    }
    const AttemptTree tree = build_attempt_tree(params, target, n + 1, policy);
    std::vector<CumulativeStats> stats;
    stats.reserve(static_cast<size_t>(n));
    for (int depth = 1; depth <= n; ++depth) {
        stats.push_back(cumulative_stats(tree, depth));
    }
    return stats;
}

double average_fidelity_closed(const ChannelParams& params, double omega, int attempts) {
    if (attempts < 0 || attempts > 2) {
        throw UnsupportedDepth("no closed-form average fidelity at attempt depth " +
                               std::to_string(attempts));
    }
    const double u = std::cos(omega);
    if (params.parity == 1) {
        if (attempts == 0) return 0.5;
        const double first = 3.0 / 8.0 * (1.0 + u * u);
        return attempts == 1 ? first : 7.0 / 6.0 * first;
    }
    if (attempts == 0) {
        const double q = params.split_overlap();
        const double q2 = params.pair_overlap();
        return 0.25 *
               (((q + u) * (q + u) + (1.0 + q * u) * (1.0 + q * u)) / (1.0 + q2) + 1.0 - u * u);
    }
    const double c = concurrence_analytic(params);
    return average_fidelity_closed_from_concurrence(c, omega, attempts, params.parity);
}

double average_fidelity_closed_from_concurrence(double concurrence, double omega, int attempts,
                                                int parity) {
    if (attempts < 0 || attempts > 2) {
        throw UnsupportedDepth("no closed-form average fidelity at attempt depth " +
                               std::to_string(attempts));
    }
    const double u = std::cos(omega);
    if (parity == 1) {
        if (attempts == 0) return 0.5;
        const double first = 3.0 / 8.0 * (1.0 + u * u);
        return attempts == 1 ? first : 7.0 / 6.0 * first;
    }
    const double lo = std::sqrt(std::max(0.0, 1.0 - concurrence));
    const double hi = std::sqrt(1.0 + concurrence);
    const double cross = lo * hi;  // sqrt(1 - C^2)
    if (attempts == 0) {
        const double t0 = lo + hi * u;
        const double t1 = hi + lo * u;
        return (t0 * t0 + t1 * t1 + 2.0 * (1.0 - u * u)) / 8.0;
    }
    const double first = (3.0 * (1.0 + u * u) + 2.0 * cross * u) / 8.0;
    if (attempts == 1) return first;
    return first + (1.0 + u * u) / 16.0 - u * cross / 8.0;
}

double success_probability_closed(const ChannelParams& params, double omega, int attempts) {
    if (attempts < 0) {
        throw std::invalid_argument("attempt depth must be nonnegative");
    }
    const double scale = std::exp2(static_cast<double>(attempts + 1));
    double value = (scale - 1.0) / scale;
    if (params.parity == 0) {
        const double q = params.split_overlap();
        value += 2.0 * q * std::cos(omega) / ((1.0 + params.pair_overlap()) * scale);
    }
    return value;
}

double success_probability_closed_from_concurrence(double concurrence, double omega, int attempts,
                                                   int parity) {
    if (attempts < 0) {
        throw std::invalid_argument("attempt depth must be nonnegative");
    }
    const double scale = std::exp2(static_cast<double>(attempts + 1));
    double value = (scale - 1.0) / scale;
    if (parity == 0) {
        value += std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence)) * std::cos(omega) /
                 scale;
    }
    return value;
}

double repetitions_required(double p, double j, double omega) {
    const double q = pow_overlap(p, j);
    const double q2 = q * q;
    const double denom = q2 + 2.0 * q * std::cos(omega) + 1.0;
    if (denom <= 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + q2)) {
        throw InfiniteRepetitions("success probability vanishes at p = 1, omega = pi");
    }
    return 4.0 * (1.0 + q2) / denom;
}

}  // namespace spincat
