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
 * Coherent-state scalar algebra: branch overlap, cat-state normalization,
 * logical-basis coefficients and the parameterization of the state to be
 * teleported.
 *
 * Everything here is a pure function of its inputs; values are immutable
 * after construction and safe to use from any number of threads.
 */

#pragma once

#include <array>
#include <complex>

#include "spincat/errors.hpp"

namespace spincat {

using cx = std::complex<double>;

/// Absolute tolerance used for scalar identities throughout the library.
inline constexpr double kScalarTol = 1e-12;

/// Branches with squared amplitude below this are treated as unrealized.
inline constexpr double kBranchFloor = 1e-15;

/// p^j with the p = 0 case handled exactly for j > 0.
double pow_overlap(double p, double exponent);

/// Amplitude pair over one logical qubit {|0>, |1>}.
struct LogicalVec {
    std::array<cx, 2> amp{};

    double squared_norm() const;
    LogicalVec normalized() const;
};

/// <lhs|rhs> with the conventional conjugation on the left argument.
cx inner(const LogicalVec& lhs, const LogicalVec& rhs);

/// Shared-resource parameters: branch overlap p, spin j and parity m.
///
/// Closed-form evaluators accept any real j > 0. Constructing states
/// additionally requires j to be a positive integer so the equal split
/// into two spin-j/2 halves is itself a valid spin; see physical().
struct ChannelParams {
    double overlap;  ///< p in [0, 1]
    double spin;     ///< j > 0
    int parity;      ///< m in {0, 1}

    ChannelParams(double p, double j, int m);

    /// p^{2j}: overlap of the full spin-j branches.
    double pair_overlap() const;
    /// p^j: overlap of each half of the equal split.
    double split_overlap() const;
    /// True when the equal split exists (j a positive integer).
    bool physical() const;
};

/// Weights of one coherent branch in the orthonormal logical basis, plus
/// the normalizer of a two-branch superposition:
///   sym     = sqrt((1 + p^{2s}) / 2)
///   antisym = sqrt((1 - p^{2s}) / 2)
///   norm    = (1 + 2 a b p^{2s})^{-1/2}
struct CatCoefficients {
    double sym;
    double antisym;
    double norm;
    double half_spin;  ///< s; the protocol path always uses s = j/2
};

/// Overlap <eta|-eta> of opposite-phase spin-1/2 coherent states.
/// Total function; the result lies in (-1, 1] and is real for complex eta.
double overlap_from_eta(cx eta);

/// (2 + 2 p^{2j} cos m pi)^{-1/2}. Throws DegenerateCat for m=1 with
/// coincident branches (p^{2j} = 1).
double cat_normalization(const ChannelParams& params);

/// Branch weights and superposition normalizer for a general half-spin s.
/// Throws DegenerateTarget when 1 + 2 a b p^{2s} <= 0.
CatCoefficients cat_coefficients(double p, double half_spin, double a, double b);

/// The state handed to the protocol, either as the angle omega of its unit
/// logical vector (cos(omega/2), sin(omega/2)) or as real amplitudes (a, b)
/// on the coherent branches. Exactly one encoding is authoritative.
class TargetState {
public:
    static TargetState from_angle(double omega);

    /// a|eta...> + b|-eta...> at the given channel point. (a, b) is scaled
    /// to unit Euclidean norm first; the global sign is fixed so the
    /// logical sine component is nonnegative and omega lands in [0, 2pi).
    static TargetState from_branch_weights(double a, double b, double p, double j);

    double omega() const { return omega_; }
    bool from_angle_ctor() const { return angle_authoritative_; }
    double branch_plus() const { return a_; }    ///< weight on |eta...>
    double branch_minus() const { return b_; }   ///< weight on |-eta...>

private:
    TargetState() = default;
    double omega_ = 0.0;
    double a_ = 0.0;
    double b_ = 0.0;
    bool angle_authoritative_ = true;
};

/// Unit logical vector of the target at channel point (p, j).
/// Angle-built targets are (cos(omega/2), sin(omega/2)) regardless of p, j;
/// branch-built targets are re-expressed with coefficients at s = j/2.
LogicalVec target_logical(const TargetState& target, double p, double j);

enum class LimitingForm { GhzType, GroundType, WType, Generic };

/// Classification of the shared resource at the exact endpoints of p.
LimitingForm limiting_form(const ChannelParams& params);

const char* to_string(LimitingForm form);

}  // namespace spincat
