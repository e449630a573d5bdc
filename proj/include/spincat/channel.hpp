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
 * The shared two-logical-qubit resource state and its entanglement,
 * both in closed form and from the state amplitudes.
 */

#pragma once

#include <array>

#include "spincat/core.hpp"

namespace spincat {

/// Amplitudes over {|00>, |01>, |10>, |11>} of logical parties A (x) B.
struct TwoQubitLogical {
    std::array<cx, 4> amp{};

    double squared_norm() const;
};

struct ChannelDescriptor {
    ChannelParams params;
    TwoQubitLogical state;
    double concurrence;
};

/// Shared resource in the logical basis. For m=0 the state is proportional
/// to A^2|00> + B^2|11>; for m=1 it is exactly (|01> + |10>)/sqrt(2).
/// Requires a physical spin (positive integer j) and, for m=1, p < 1.
ChannelDescriptor build_channel(const ChannelParams& params);

/// (1 - p^{2j}) / (1 + p^{2j} cos m pi). For m=1 this is identically 1
/// for p < 1; the p = 1 value is the continuity limit 1 even though the
/// state itself is not constructible there.
double concurrence_analytic(const ChannelParams& params);

/// Wootters concurrence 2|a00 a11 - a01 a10| of a normalized pure state.
double concurrence_numeric(const TwoQubitLogical& state);

}  // namespace spincat
