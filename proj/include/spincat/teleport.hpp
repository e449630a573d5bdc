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
 * Projective measurements in the four-vector GHZ basis on a chosen pair of
 * the tripartite state, and single-attempt teleportation statistics.
 *
 * Party ordering is C (x) A (x) B throughout: amplitude index 4c + 2a + b.
 * Pure functions over immutable values; safe for concurrent sweeps.
 */

#pragma once

#include <array>
#include <optional>
#include <utility>

#include "spincat/channel.hpp"
#include "spincat/core.hpp"

namespace spincat {

/// Amplitudes of the combined state, index = 4c + 2a + b.
struct TripartiteState {
    std::array<cx, 8> amp{};

    double squared_norm() const;
};

/// Which pair of parties the GHZ measurement acts on. The first slot of the
/// measured pair is always C.
enum class MeasuredPair { CA, CB };

/// Party left unmeasured: B for a CA measurement, A for a CB one.
constexpr int remaining_party(MeasuredPair pair) { return pair == MeasuredPair::CA ? 2 : 1; }

constexpr MeasuredPair other_pair(MeasuredPair pair) {
    return pair == MeasuredPair::CA ? MeasuredPair::CB : MeasuredPair::CA;
}

/// The four orthonormal measurement vectors over two logical qubits:
///   0: (|00> + |11>)/sqrt(2)    1: (|01> + |10>)/sqrt(2)
///   2: (|01> - |10>)/sqrt(2)    3: (|00> - |11>)/sqrt(2)
struct GhzBasis {
    std::array<std::array<cx, 4>, 4> vectors;

    static const GhzBasis& standard();
};

enum class PauliLabel { I, X, Z, ZX };

const char* to_string(PauliLabel label);

/// One measurement result on a pair. The conditional state of the remaining
/// party is absent on branches of probability below kBranchFloor, whose
/// fidelity contribution is 0. success/fidelity/correction are filled by the
/// protocol layer (they depend on the channel parity and the target), not by
/// measure_pair itself.
struct PairOutcome {
    int index = 0;
    double probability = 0.0;
    std::optional<LogicalVec> conditional;
    double fidelity_raw = 0.0;
    bool success = false;
    std::optional<PauliLabel> correction;
};

/// Tensor product target (x) channel in C (x) A (x) B order.
TripartiteState compose_tripartite(const LogicalVec& target, const TwoQubitLogical& channel);

/// Projective GHZ measurement on the chosen pair. Outcome probabilities sum
/// to 1 and each conditional is unit-norm where defined.
std::array<PairOutcome, 4> measure_pair(const TripartiteState& state, MeasuredPair pair);

/// |<target|conditional>|^2, the uncorrected teleportation fidelity.
double fidelity_raw(const LogicalVec& conditional, const LogicalVec& target);

/// Best of {I, X, Z, ZX} applied to the conditional, ties resolved in that
/// order. This is an extension beyond the raw figure of merit: the averaged
/// statistics below never apply it.
std::pair<PauliLabel, double> best_correction(const LogicalVec& conditional,
                                              const LogicalVec& target);

/// Success outcome indices for a given parity: {0, 3} for m = 0 and
/// {1, 2} for m = 1.
std::array<bool, 4> success_flags(int parity);

/// Single-attempt statistics: per-outcome probability and raw fidelity,
/// f_av = sum_i P_i F_i over all four outcomes, p_success = probability
/// mass of the success-flagged outcomes.
struct AttemptReport {
    std::array<PairOutcome, 4> outcomes;
    double f_av = 0.0;
    double p_success = 0.0;
};

/// Compose the tripartite state and measure the CA pair.
AttemptReport primary_attempt(const ChannelParams& params, const TargetState& target);

}  // namespace spincat
