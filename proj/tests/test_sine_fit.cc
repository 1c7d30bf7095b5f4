// Copyright 2026 The RQST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rqst/sine_fit.h"

#include <gtest/gtest.h>

#include <random>

#include "rqst/errors.h"

using namespace rqst;

namespace {

std::vector<double> grid() {
    return uniform_time_grid(61, 30.0);
}

std::vector<double> sinusoid(const std::vector<double> &t, double a, double w, double psi, double o) {
    std::vector<double> y;
    for (double ti : t) {
        y.push_back(o + a * std::cos(w * ti + psi));
    }
    return y;
}

}  // namespace

TEST(fit_sine, exact_model) {
    double w = kTwoPi * 0.1;
    std::vector<double> t = grid();
    std::vector<double> y = sinusoid(t, 0.15, w, 1.0, 0.7);
    SineFit f = fit_sine(t, y);
    EXPECT_TRUE(f.converged);
    EXPECT_FALSE(f.phase_undefined);
    EXPECT_NEAR(f.amplitude, 0.15, 1e-8);
    EXPECT_NEAR(f.phase, 1.0, 1e-8);
    EXPECT_NEAR(f.frequency, w, 1e-8);
    EXPECT_NEAR(f.offset, 0.7, 1e-8);
    EXPECT_LT(f.residual_rms, 1e-10);
    EXPECT_NEAR(f.evaluate(3.3), 0.7 + 0.15 * std::cos(w * 3.3 + 1.0), 1e-8);
}

TEST(fit_sine, phase_wraps_and_off_grid_frequency) {
    std::vector<double> t = grid();
    for (double psi : {0.0, 3.0, 5.9, 6.28}) {
        for (double w : {0.5, 0.6283, 0.9}) {
            SineFit f = fit_sine(t, sinusoid(t, 0.2, w, psi, 0.1));
            EXPECT_NEAR(f.amplitude, 0.2, 1e-8);
            EXPECT_NEAR(angular_distance(f.phase, psi), 0.0, 1e-8);
            EXPECT_NEAR(f.frequency, w, 1e-8);
            EXPECT_GE(f.phase, 0.0);
            EXPECT_LT(f.phase, kTwoPi);
        }
    }
}

TEST(fit_sine, fixed_frequency) {
    std::vector<double> t = grid();
    FitOptions opts;
    opts.fixed_frequency = 0.6;
    SineFit f = fit_sine(t, sinusoid(t, 0.1, 0.6, 2.0, 0.5), opts);
    EXPECT_EQ(f.frequency, 0.6);
    EXPECT_NEAR(f.amplitude, 0.1, 1e-10);
    EXPECT_NEAR(f.phase, 2.0, 1e-10);
}

TEST(fit_sine, flat_trace_has_undefined_phase) {
    std::vector<double> t = grid();
    std::vector<double> y(t.size(), 0.85);
    SineFit f = fit_sine(t, y);
    EXPECT_LT(f.amplitude, 1e-10);
    EXPECT_TRUE(f.phase_undefined);
    EXPECT_NEAR(f.offset, 0.85, 1e-12);
}

TEST(fit_sine, decay_envelope) {
    std::vector<double> t = grid();
    std::vector<double> y;
    for (double ti : t) {
        y.push_back(0.6 + 0.2 * std::cos(0.7 * ti + 0.4) * std::exp(-ti / 12.0));
    }
    FitOptions opts;
    opts.fit_decay = true;
    SineFit f = fit_sine(t, y, opts);
    ASSERT_TRUE(f.decay_time.has_value());
    EXPECT_NEAR(*f.decay_time, 12.0, 1e-6);
    EXPECT_NEAR(f.amplitude, 0.2, 1e-8);
    EXPECT_NEAR(f.phase, 0.4, 1e-8);
}

TEST(fit_sine, errors) {
    std::vector<double> t = {0, 1, 2};
    std::vector<double> y = {1, 2, 3};
    EXPECT_THROW(fit_sine(t, y), FitError);
    std::vector<double> t2 = grid();
    std::vector<double> y2 = sinusoid(t2, 0.1, 0.6, 0.0, 0.0);
    y2[4] = std::nan("");
    EXPECT_THROW(fit_sine(t2, y2), FitError);
    std::vector<double> y3(t2.size() - 1, 0.0);
    EXPECT_THROW(fit_sine(t2, y3), FitError);
    std::vector<double> t4 = t2;
    std::swap(t4[1], t4[2]);
    EXPECT_THROW(fit_sine(t4, sinusoid(t4, 0.1, 0.6, 0.0, 0.0)), FitError);
}

TEST(canonicalize_amplitude_phase, sign_fold) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int k = 0; k < 500; ++k) {
        double a = u(rng);
        double psi = u(rng);
        auto p = canonicalize_amplitude_phase(a, psi);
        auto q = canonicalize_amplitude_phase(-a, psi + kPi);
        EXPECT_GE(p.first, 0.0);
        EXPECT_NEAR(p.first, q.first, 1e-15);
        EXPECT_NEAR(angular_distance(p.second, q.second), 0.0, 1e-12);
        EXPECT_GE(p.second, 0.0);
        EXPECT_LT(p.second, kTwoPi);
    }
}

// Monte-Carlo check of the reported amplitude error: the truth should lie
// within three standard errors in at least 99% of noisy realisations.
TEST(fit_sine, amplitude_error_coverage) {
    std::vector<double> t = grid();
    std::vector<double> clean = sinusoid(t, 0.15, kTwoPi * 0.1, 1.0, 0.7);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> noise(0.0, 0.01);
        std::vector<double> y = clean;
        for (double &v : y) {
            v += noise(rng);
        }
        SineFit f = fit_sine(t, y);
        covered += std::abs(f.amplitude - 0.15) <= 3.0 * f.errors.amplitude ? 1 : 0;
    }
    EXPECT_GE(covered, 990);
}

TEST(fit_sine_shared, common_frequency) {
    std::vector<double> t = grid();
    double w = 0.63;
    RabiTrace a{t, sinusoid(t, 0.1, w, 0.3, 0.8), default_rabi_config(), "a"};
    RabiTrace b{t, sinusoid(t, 0.05, w, 4.0, 0.8), default_rabi_config(), "b"};
    RabiTrace c{t, sinusoid(t, 0.15, w, 0.0, 0.7), default_rabi_config(), "c"};
    std::vector<SineFit> fits = fit_sine_shared({&a, &b, &c});
    ASSERT_EQ(fits.size(), 3u);
    for (const SineFit &f : fits) {
        EXPECT_NEAR(f.frequency, w, 1e-9);
        EXPECT_TRUE(f.converged);
    }
    EXPECT_NEAR(fits[1].amplitude, 0.05, 1e-9);
    EXPECT_NEAR(fits[1].phase, 4.0, 1e-9);
    EXPECT_NEAR(fits[2].offset, 0.7, 1e-9);
}
