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

#include <doctest.h>

#include "spincat/channel.hpp"

using namespace spincat;

TEST_CASE("build_channel limiting states") {
    const double r = 1.0 / std::sqrt(2.0);

    const ChannelDescriptor bell = build_channel(ChannelParams(0.0, 1.0, 0));
    CHECK(bell.state.amp[0].real() == doctest::Approx(r).epsilon(1e-15));
    CHECK(bell.state.amp[1] == cx(0.0));
    CHECK(bell.state.amp[2] == cx(0.0));
    CHECK(bell.state.amp[3].real() == doctest::Approx(r).epsilon(1e-15));

    const ChannelDescriptor ground = build_channel(ChannelParams(1.0, 2.0, 0));
    CHECK(ground.state.amp[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(ground.state.amp[3]) == 0.0);

    for (double p : {0.0, 0.3, 0.8, 0.999}) {
        const ChannelDescriptor odd = build_channel(ChannelParams(p, 2.0, 1));
        CHECK(odd.state.amp[0] == cx(0.0));
        CHECK(odd.state.amp[1].real() == r);
        CHECK(odd.state.amp[2].real() == r);
        CHECK(odd.state.amp[3] == cx(0.0));
    }
}

TEST_CASE("build_channel at p = 1/2, j = 1") {
    const ChannelDescriptor channel = build_channel(ChannelParams(0.5, 1.0, 0));
    CHECK(channel.state.amp[0].real() == doctest::Approx(3.0 / std::sqrt(10.0)).epsilon(1e-14));
    CHECK(channel.state.amp[3].real() == doctest::Approx(1.0 / std::sqrt(10.0)).epsilon(1e-14));
    CHECK(channel.concurrence == doctest::Approx(0.6).epsilon(1e-14));

    // 4 N0^2 (A^4 + B^4) = 1 closes the normalization.
    const CatCoefficients cc = cat_coefficients(0.5, 0.5, 1.0, 0.0);
    const double n0 = cat_normalization(ChannelParams(0.5, 1.0, 0));
    const double a4 = std::pow(cc.sym, 4);
    const double b4 = std::pow(cc.antisym, 4);
    CHECK(4.0 * n0 * n0 * (a4 + b4) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("channel state is normalized and symmetric under party swap") {
    for (double p : {0.0, 0.25, 0.6, 0.95, 1.0}) {
        for (int m : {0, 1}) {
            if (m == 1 && p == 1.0) continue;
            const ChannelDescriptor channel = build_channel(ChannelParams(p, 3.0, m));
            CHECK(channel.state.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(channel.state.amp[1] == channel.state.amp[2]);
        }
    }
}

TEST_CASE("concurrence closed form equals the Wootters value") {
    for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.1) {
        const double pc = std::min(p, 1.0);
        for (double j : {1.0, 2.0, 3.0, 5.0}) {
            for (int m : {0, 1}) {
                if (m == 1 && pc == 1.0) continue;
                const ChannelParams params(pc, j, m);
                const ChannelDescriptor channel = build_channel(params);
                CHECK(std::abs(concurrence_numeric(channel.state) - concurrence_analytic(params)) <=
                      1e-12);
            }
        }
        // closed-form only at the half-integer spin used for the plots
        const double c = concurrence_analytic(ChannelParams(pc, 15.5, 0));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}

TEST_CASE("concurrence spot values") {
    CHECK(concurrence_analytic(ChannelParams(0.0, 4.0, 0)) == 1.0);
    CHECK(concurrence_analytic(ChannelParams(1.0, 2.0, 0)) == 0.0);
    CHECK(concurrence_analytic(ChannelParams(0.5, 1.0, 0)) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(concurrence_analytic(ChannelParams(0.5, 1.0, 1)) == 1.0);
    CHECK(concurrence_analytic(ChannelParams(1.0, 1.0, 1)) == 1.0);  // continuity limit
    CHECK(concurrence_numeric(build_channel(ChannelParams(0.0, 1.0, 0)).state) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(concurrence_numeric(build_channel(ChannelParams(1.0, 1.0, 0)).state) == 0.0);
}

TEST_CASE("concurrence decreases with p and grows with j") {
    for (double j : {1.0, 2.0, 5.0}) {
        double prev = 1.1;
        for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.05) {
            const double c = concurrence_analytic(ChannelParams(std::min(p, 1.0), j, 0));
            CHECK(c < prev + 1e-15);
            prev = c;
        }
    }
    for (double p : {0.3, 0.7}) {
        double prev = -1.0;
        for (double j : {1.0, 2.0, 3.0, 5.0, 15.5}) {
            const double c = concurrence_analytic(ChannelParams(p, j, 0));
            CHECK(c > prev);
            prev = c;
        }
    }
}

TEST_CASE("build_channel rejections") {
    CHECK_THROWS_AS(build_channel(ChannelParams(1.0, 1.0, 1)), DegenerateCat);
    CHECK_THROWS_AS(build_channel(ChannelParams(0.5, 1.5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(build_channel(ChannelParams(0.5, 15.5, 0)), std::invalid_argument);
}
