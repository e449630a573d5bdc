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

#include "spincat/channel.hpp"

#include <cmath>

namespace spincat {

double TwoQubitLogical::squared_norm() const {
    double s = 0.0;
    for (const cx& a : amp) s += std::norm(a);
    return s;
}

ChannelDescriptor build_channel(const ChannelParams& params) {
    if (!params.physical()) {
        throw std::invalid_argument(
            "state construction needs a positive integer spin j so the equal split is valid");
    }
    const double norm = cat_normalization(params);  // rejects m=1 with p=1
    TwoQubitLogical state;
    if (params.parity == 1) {
        // N_1 * 2AB * (|01> + |10>) collapses to (|01> + |10>)/sqrt(2) identically.
        const double r = 1.0 / std::sqrt(2.0);
        state.amp = {0.0, r, r, 0.0};
    } else {
        const CatCoefficients cc = cat_coefficients(params.overlap, params.spin / 2.0, 1.0, 0.0);
        state.amp[0] = 2.0 * norm * cc.sym * cc.sym;
        state.amp[3] = 2.0 * norm * cc.antisym * cc.antisym;
    }
    return ChannelDescriptor{params, state, concurrence_numeric(state)};
}

double concurrence_analytic(const ChannelParams& params) {
    const double q2 = params.pair_overlap();
    if (params.parity == 1) {
        return 1.0;  // (1 - q2)/(1 - q2) for p < 1, and the limit at p = 1
    }
    return (1.0 - q2) / (1.0 + q2);
}

double concurrence_numeric(const TwoQubitLogical& state) {
    return 2.0 * std::abs(state.amp[0] * state.amp[3] - state.amp[1] * state.amp[2]);
}

}  // namespace spincat
