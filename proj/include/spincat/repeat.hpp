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

/**
 * @file
 * The repeated-measurement protocol: on a failure outcome the GHZ
 * measurement is repeated on the alternate pair (CA, CB, CA, ...) until a
 * success-flagged outcome terminates the branch. The whole branching tree
 * is enumerated exactly -- probability-weighted, never sampled.
 *
 * Depth convention: attempt depth 0 is the primary measurement; attempt
 * depth d adds d repetitions (d + 1 measurement rounds in total).
 *
 * Tree construction is single-writer per tree; independent trees may be
 * built concurrently. A finished tree is read-only.
 */

#pragma once

#include <vector>

#include "spincat/teleport.hpp"

namespace spincat {

/// Enumeration guard: at most 12 repeated attempts (13 rounds).
inline constexpr int kMaxAttempts = 12;

/// Success outcome indices per measurement round, table-driven so the
/// per-round sets stay auditable and can be overridden in experiments.
/// Round r (1-based) uses entry min(r-1, size-1).
struct SuccessPolicy {
    std::vector<std::array<bool, 4>> per_round;

    /// Default protocol policy: {0, 3} at every round for m = 0,
    /// {1, 2} at every round for m = 1.
    static SuccessPolicy for_parity(int parity);

    const std::array<bool, 4>& flags(int round) const;
};

/// One measured outcome in the tree. Failure nodes that are not pruned
/// carry the reassembled post-measurement state their children are
/// measured from.
struct TreeNode {
    int round = 0;                 ///< 1-based; pair CA when odd, CB when even
    std::vector<int> path;         ///< outcome indices, rounds 1..round
    double probability = 0.0;      ///< joint branch probability
    bool success = false;
    bool pruned = false;           ///< probability below kBranchFloor
    std::optional<LogicalVec> conditional;  ///< remaining-party state
    double fidelity_raw = 0.0;     ///< vs the target; 0 when pruned
    std::optional<TripartiteState> post_state;  ///< failure nodes only
};

struct AttemptTree {
    ChannelParams params;
    LogicalVec target;
    TripartiteState root;
    int rounds = 0;
    std::vector<TreeNode> nodes;   ///< breadth-first, deterministic order
};

/// Aggregates at one attempt depth.
///   p_success     -- probability mass of success leaves at depth <= n
///   f_av_accrued  -- probability-weighted raw fidelity over those leaves
///   f_av_all      -- f_av_accrued plus the live failure leaves at depth n
///                    treated as terminal (the all-outcomes average; equal
///                    to the primary-attempt f_av at depth 0)
struct CumulativeStats {
    int n = 0;
    double p_success = 0.0;
    double f_av_all = 0.0;
    double f_av_accrued = 0.0;
};

/// Reassemble |basis vector on the measured pair> (x) |conditional on the
/// remaining party> in C (x) A (x) B order. Throws ZeroBranch when the
/// outcome carries no conditional state.
TripartiteState post_measurement_state(const PairOutcome& outcome,
                                       const std::array<cx, 4>& basis_vector, MeasuredPair pair);

AttemptTree build_attempt_tree(const ChannelParams& params, const TargetState& target, int rounds,
                               const SuccessPolicy& policy);

/// Aggregates for attempt depth 0 <= depth <= rounds - 1.
CumulativeStats cumulative_stats(const AttemptTree& tree, int depth);

/// Exact enumeration through attempt depth n >= 1; entry d-1 holds the
/// depth-d aggregates. Throws TreeTooDeep above kMaxAttempts.
std::vector<CumulativeStats> run_repeated(const ChannelParams& params, const TargetState& target,
                                          int n);
std::vector<CumulativeStats> run_repeated(const ChannelParams& params, const TargetState& target,
                                          int n, const SuccessPolicy& policy);

/// Closed-form average fidelity at attempt depth 0, 1 or 2 (no closed form
/// exists deeper; throws UnsupportedDepth). Depths 1-2 follow the accrued
/// (success leaves only) semantics.
double average_fidelity_closed(const ChannelParams& params, double omega, int attempts);

/// Same closed forms written directly in terms of the concurrence, as the
/// fidelity-versus-entanglement figures use them.
double average_fidelity_closed_from_concurrence(double concurrence, double omega, int attempts,
                                                int parity);

/// Closed-form cumulative success probability at any attempt depth n >= 0:
/// (2^{n+1} - 1)/2^{n+1} for m = 1, plus 2 p^j cos(omega) / (2^{n+1}
/// (1 + p^{2j})) for m = 0.
double success_probability_closed(const ChannelParams& params, double omega, int attempts);

double success_probability_closed_from_concurrence(double concurrence, double omega, int attempts,
                                                   int parity);

/// Expected number of protocol runs for one success of the primary attempt,
/// 4 (1 + p^{2j}) / (p^{2j} + 2 p^j cos(omega) + 1). Throws
/// InfiniteRepetitions where the denominator vanishes (p = 1, omega = pi).
double repetitions_required(double p, double j, double omega);

}  // namespace spincat
