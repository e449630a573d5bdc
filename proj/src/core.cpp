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

#include "spincat/core.hpp"

#include <cmath>
#include <string>

namespace spincat {

double pow_overlap(double p, double exponent) {
    if (p == 0.0) return exponent > 0.0 ? 0.0 : 1.0;
    return std::pow(p, exponent);
}

double LogicalVec::squared_norm() const {
    return std::norm(amp[0]) + std::norm(amp[1]);
}

LogicalVec LogicalVec::normalized() const {
    const double n = std::sqrt(squared_norm());
    return LogicalVec{{amp[0] / n, amp[1] / n}};
}

cx inner(const LogicalVec& lhs, const LogicalVec& rhs) {
    return std::conj(lhs.amp[0]) * rhs.amp[0] + std::conj(lhs.amp[1]) * rhs.amp[1];
}

ChannelParams::ChannelParams(double p, double j, int m) : overlap(p), spin(j), parity(m) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("overlap p must lie in [0, 1], got " + std::to_string(p));
    }
    if (!(j > 0.0)) {
        throw std::invalid_argument("spin j must be positive, got " + std::to_string(j));
    }
    if (m != 0 && m != 1) {
        throw std::invalid_argument("parity m must be 0 or 1, got " + std::to_string(m));
    }
}

double ChannelParams::pair_overlap() const { return pow_overlap(overlap, 2.0 * spin); }

double ChannelParams::split_overlap() const { return pow_overlap(overlap, spin); }

bool ChannelParams::physical() const {
    return spin > 0.0 && std::abs(spin - std::round(spin)) < 1e-9;
}

double overlap_from_eta(cx eta) {
    const double mag2 = std::norm(eta);
    return (1.0 - mag2) / (1.0 + mag2);
}

double cat_normalization(const ChannelParams& params) {
    const double q2 = params.pair_overlap();
    if (params.parity == 1 && q2 == 1.0) {
        throw DegenerateCat("odd cat state with p^2j = 1 has divergent normalization");
    }
    const double sign = params.parity == 0 ? 1.0 : -1.0;
    return 1.0 / std::sqrt(2.0 + 2.0 * q2 * sign);
}

CatCoefficients cat_coefficients(double p, double half_spin, double a, double b) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("overlap p must lie in [0, 1]");
    }
    if (!(half_spin > 0.0)) {
        throw std::invalid_argument("half-spin s must be positive");
    }
    const double branch = pow_overlap(p, 2.0 * half_spin);
    const double norm_sq = 1.0 + 2.0 * a * b * branch;
    if (norm_sq <= 0.0) {
        throw DegenerateTarget("superposition a|eta..> + b|-eta..> is unnormalizable");
    }
    return CatCoefficients{std::sqrt((1.0 + branch) / 2.0), std::sqrt((1.0 - branch) / 2.0),
                           1.0 / std::sqrt(norm_sq), half_spin};
}

TargetState TargetState::from_angle(double omega) {
    TargetState t;
    t.omega_ = omega;
    t.angle_authoritative_ = true;
    return t;
}

TargetState TargetState::from_branch_weights(double a, double b, double p, double j) {
    const double scale = std::sqrt(a * a + b * b);
    if (scale == 0.0) {
        throw DegenerateTarget("branch weights (0, 0) carry no state");
    }
    TargetState t;
    t.a_ = a / scale;
    t.b_ = b / scale;
    t.angle_authoritative_ = false;
    const LogicalVec v = target_logical(t, p, j);
    // Sign canonicalization in target_logical keeps the sine component
    // nonnegative, so omega/2 = atan2(...) lands in [0, pi].
    t.omega_ = 2.0 * std::atan2(v.amp[1].real(), v.amp[0].real());
    return t;
}

LogicalVec target_logical(const TargetState& target, double p, double j) {
    if (target.from_angle_ctor()) {
        return LogicalVec{{std::cos(target.omega() / 2.0), std::sin(target.omega() / 2.0)}};
    }
    const double a = target.branch_plus();
    const double b = target.branch_minus();
    const CatCoefficients cc = cat_coefficients(p, j / 2.0, a, b);
    double u = cc.norm * cc.sym * (a + b);
    double v = cc.norm * cc.antisym * (a - b);
    const double norm2 = u * u + v * v;
    if (norm2 < 1e-12) {
        // a = -b at coincident branches: the superposition vanishes.
        throw DegenerateTarget("branch weights cancel at this overlap");
    }
    u /= std::sqrt(norm2);
    v /= std::sqrt(norm2);
    // States are rays; fix the global sign so the antisymmetric component
    // is nonnegative (and the symmetric one when it vanishes).
    if (v < 0.0 || (v == 0.0 && u < 0.0)) {
        u = -u;
        v = -v;
    }
    return LogicalVec{{u, v}};
}

LimitingForm limiting_form(const ChannelParams& params) {
    if (params.overlap == 0.0) return LimitingForm::GhzType;
    if (params.overlap == 1.0) {
        return params.parity == 0 ? LimitingForm::GroundType : LimitingForm::WType;
    }
    return LimitingForm::Generic;
}

const char* to_string(LimitingForm form) {
    switch (form) {
        case LimitingForm::GhzType: return "GHZ-type";
        case LimitingForm::GroundType: return "ground";
        case LimitingForm::WType: return "W-type";
        case LimitingForm::Generic: return "generic";
    }
    return "unknown";
}

}  // namespace spincat
