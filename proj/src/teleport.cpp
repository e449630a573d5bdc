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

#include "spincat/teleport.hpp"

#include <cmath>

namespace spincat {

namespace {

// Amplitude index of (c, a, b).
constexpr int idx(int c, int a, int b) { return 4 * c + 2 * a + b; }

// Index of the measured-pair basis slot and of the remaining party for a
// given (c, a, b) assignment.
inline int pair_slot(MeasuredPair pair, int c, int a, int b) {
    return pair == MeasuredPair::CA ? 2 * c + a : 2 * c + b;
}

inline int rest_slot(MeasuredPair pair, int a, int b) {
    return pair == MeasuredPair::CA ? b : a;
}

LogicalVec apply_pauli(PauliLabel label, const LogicalVec& v) {
    switch (label) {
        case PauliLabel::I: return v;
        case PauliLabel::X: return LogicalVec{{v.amp[1], v.amp[0]}};
        case PauliLabel::Z: return LogicalVec{{v.amp[0], -v.amp[1]}};
        case PauliLabel::ZX: return LogicalVec{{v.amp[1], -v.amp[0]}};
    }
    return v;
}

}  // namespace

double TripartiteState::squared_norm() const {
    double s = 0.0;
    for (const cx& a : amp) s += std::norm(a);
    return s;
}

const GhzBasis& GhzBasis::standard() {
    static const GhzBasis basis = [] {
        const double r = 1.0 / std::sqrt(2.0);
        GhzBasis b;
        b.vectors[0] = {r, 0.0, 0.0, r};
        b.vectors[1] = {0.0, r, r, 0.0};
        b.vectors[2] = {0.0, r, -r, 0.0};
        b.vectors[3] = {r, 0.0, 0.0, -r};
        return b;
    }();
    return basis;
}

const char* to_string(PauliLabel label) {
    switch (label) {
        case PauliLabel::I: return "I";
        case PauliLabel::X: return "X";
        case PauliLabel::Z: return "Z";
        case PauliLabel::ZX: return "ZX";
    }
    return "?";
}

TripartiteState compose_tripartite(const LogicalVec& target, const TwoQubitLogical& channel) {
    TripartiteState state;
    for (int c = 0; c < 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                state.amp[idx(c, a, b)] = target.amp[c] * channel.amp[2 * a + b];
            }
        }
    }
    return state;
}

std::array<PairOutcome, 4> measure_pair(const TripartiteState& state, MeasuredPair pair) {
    const GhzBasis& basis = GhzBasis::standard();
    std::array<PairOutcome, 4> outcomes;
    for (int k = 0; k < 4; ++k) {
        LogicalVec projected;
        for (int c = 0; c < 2; ++c) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    projected.amp[rest_slot(pair, a, b)] +=
                        std::conj(basis.vectors[k][pair_slot(pair, c, a, b)]) *
                        state.amp[idx(c, a, b)];
                }
            }
        }
        PairOutcome& out = outcomes[k];
        out.index = k;
        out.probability = projected.squared_norm();
        if (out.probability >= kBranchFloor) {
            out.conditional = projected.normalized();
        }
    }
    return outcomes;
}

double fidelity_raw(const LogicalVec& conditional, const LogicalVec& target) {
    return std::norm(inner(target, conditional));
}

std::pair<PauliLabel, double> best_correction(const LogicalVec& conditional,
                                              const LogicalVec& target) {
    PauliLabel best = PauliLabel::I;
    double best_fidelity = -1.0;
    for (PauliLabel label : {PauliLabel::I, PauliLabel::X, PauliLabel::Z, PauliLabel::ZX}) {
        const double f = fidelity_raw(apply_pauli(label, conditional), target);
        if (f > best_fidelity) {
            best_fidelity = f;
            best = label;
        }
    }
    return {best, best_fidelity};
}

std::array<bool, 4> success_flags(int parity) {
    return parity == 0 ? std::array<bool, 4>{true, false, false, true}
                       : std::array<bool, 4>{false, true, true, false};
}

AttemptReport primary_attempt(const ChannelParams& params, const TargetState& target) {
    const ChannelDescriptor channel = build_channel(params);
    const LogicalVec wanted = target_logical(target, params.overlap, params.spin);
    const TripartiteState state = compose_tripartite(wanted, channel.state);

    AttemptReport report;
    report.outcomes = measure_pair(state, MeasuredPair::CA);
    const std::array<bool, 4> success = success_flags(params.parity);
    for (PairOutcome& out : report.outcomes) {
        out.success = success[out.index];
        if (out.conditional) {
            out.fidelity_raw = fidelity_raw(*out.conditional, wanted);
            out.correction = best_correction(*out.conditional, wanted).first;
        }
        report.f_av += out.probability * out.fidelity_raw;
        if (out.success) report.p_success += out.probability;
    }
    return report;
}

}  // namespace spincat
