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

#include "rqst/rabi_sim.h"

#include <gtest/gtest.h>

#include "rqst/errors.h"
#include "test_util.h"

using namespace rqst;

namespace {

RabiConfig clean_config(double axis = kXRabiAxis, double contrast = 1.0, double offset = 0.0) {
    RabiConfig cfg = default_rabi_config();
    cfg.axis_phase = axis;
    cfg.contrast = contrast;
    cfg.offset = offset;
    return cfg;
}

/// Per-point |0> population after rotating the state: built from a 2x2
/// exponential of the drive generator, independent of subspace_rotation.
double brute_force_p0(const DensityMatrix &rho, double axis, double angle) {
    ComplexMatrix h = 0.5 * (std::cos(axis) * pauli_x() + std::sin(axis) * pauli_y());
    ComplexMatrix u = rqst::testing::expm_hermitian(h, angle);
    return (u * rho.matrix() * u.adjoint())(0, 0).real();
}

}  // namespace

TEST(rabi_config, defaults_and_validation) {
    RabiConfig cfg = default_rabi_config();
    EXPECT_EQ(cfg.time_grid.size(), 61u);
    EXPECT_DOUBLE_EQ(cfg.time_grid.back(), 3 * kTwoPi / cfg.rabi_frequency);
    EXPECT_EQ(cfg.contrast, 0.3);
    EXPECT_EQ(cfg.offset, 0.7);
    EXPECT_FALSE(cfg.decay_time.has_value());
    EXPECT_NO_THROW(validate(cfg));

    RabiConfig bad = cfg;
    bad.time_grid.resize(7);
    EXPECT_THROW(validate(bad), ConfigError);
    bad = cfg;
    std::swap(bad.time_grid[3], bad.time_grid[4]);
    EXPECT_THROW(validate(bad), ConfigError);
    bad = cfg;
    bad.contrast = 0.0;
    EXPECT_THROW(validate(bad), ConfigError);
    bad = cfg;
    bad.noise_sigma = -1e-3;
    EXPECT_THROW(validate(bad), ConfigError);
    EXPECT_THROW(electron_rabi_trace(DensityMatrix::basis(2, 0), bad), ConfigError);
}

TEST(electron_rabi_trace, eigenstate_reference) {
    RabiTrace trace = electron_rabi_trace(DensityMatrix::basis(2, 0), clean_config());
    for (size_t i = 0; i < trace.times.size(); ++i) {
        double c = std::cos(0.5 * trace.config.rabi_frequency * trace.times[i]);
        EXPECT_NEAR(trace.signal[i], c * c, 1e-14);
    }
    RabiSignature sig = ideal_rabi_signature({0, 0, 1}, kXRabiAxis);
    EXPECT_NEAR(sig.amplitude, 0.5, 1e-15);
    EXPECT_NEAR(sig.phase, 0.0, 1e-15);
}

TEST(electron_rabi_trace, axis_fixed_point_is_flat) {
    RabiTrace trace = electron_rabi_trace(bloch_to_density({1, 0, 0}), clean_config());
    for (double s : trace.signal) {
        EXPECT_NEAR(s, 0.5, 1e-14);
    }
    EXPECT_NEAR(ideal_rabi_signature({1, 0, 0}, kXRabiAxis).amplitude, 0.0, 1e-15);
}

TEST(electron_rabi_trace, matches_closed_form_and_brute_force) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 50; ++k) {
        StateAngles a = rqst::testing::random_angles(rng);
        BlochVector n = angles_to_bloch(a);
        DensityMatrix rho = bloch_to_density(n);
        for (double axis : {kXRabiAxis, kYRabiAxis}) {
            RabiConfig cfg = clean_config(axis, 0.3, 0.7);
            RabiTrace trace = electron_rabi_trace(rho, cfg);
            RabiSignature sig = ideal_rabi_signature(n, axis);
            double transverse = axis == kXRabiAxis ? n.ny : n.nx;
            EXPECT_NEAR(sig.amplitude, 0.5 * std::hypot(transverse, n.nz), 1e-14);
            for (size_t i = 0; i < trace.times.size(); ++i) {
                double angle = cfg.rabi_frequency * trace.times[i];
                double closed = 0.7 + 0.3 * (0.5 + sig.amplitude * std::cos(angle + sig.phase));
                double brute = 0.7 + 0.3 * brute_force_p0(rho, axis, angle);
                EXPECT_NEAR(trace.signal[i], closed, 1e-10);
                EXPECT_NEAR(trace.signal[i], brute, 1e-12);
            }
        }
    }
}

TEST(electron_rabi_trace, phase_sign_convention) {
    StateAngles a = StateAngles::from_degrees(58, 249);
    BlochVector n = angles_to_bloch(a);
    RabiSignature x = ideal_rabi_signature(n, kXRabiAxis);
    RabiSignature y = ideal_rabi_signature(n, kYRabiAxis);
    EXPECT_NEAR(angular_distance(x.phase, std::atan2(-n.ny, n.nz)), 0.0, 1e-14);
    EXPECT_NEAR(angular_distance(y.phase, std::atan2(n.nx, n.nz)), 0.0, 1e-14);
    // Tomography phases after applying the sign constants.
    double alpha = kXRabiPhaseSign * x.phase;
    double beta = kYRabiPhaseSign * y.phase;
    EXPECT_NEAR(std::tan(alpha), n.ny / n.nz, 1e-12);
    EXPECT_NEAR(std::tan(beta), n.nx / n.nz, 1e-12);
}

TEST(electron_rabi_trace, seeded_noise_is_reproducible) {
    RabiConfig cfg = default_rabi_config();
    cfg.noise_sigma = 0.01;
    cfg.seed = 42;
    DensityMatrix rho = bloch_to_density({0.6, 0.0, 0.8});
    RabiTrace a = electron_rabi_trace(rho, cfg);
    RabiTrace b = electron_rabi_trace(rho, cfg);
    EXPECT_EQ(a.signal, b.signal);
    cfg.stream = 1;
    RabiTrace c = electron_rabi_trace(rho, cfg);
    EXPECT_NE(a.signal, c.signal);

    double sum = 0.0;
    double sum_sq = 0.0;
    RabiConfig clean = cfg;
    clean.noise_sigma = 0.0;
    RabiTrace ideal = electron_rabi_trace(rho, clean);
    int n = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        cfg.stream = s;
        RabiTrace t = electron_rabi_trace(rho, cfg);
        for (size_t i = 0; i < t.signal.size(); ++i) {
            double d = t.signal[i] - ideal.signal[i];
            sum += d;
            sum_sq += d * d;
            ++n;
        }
    }
    EXPECT_NEAR(sum / n, 0.0, 5e-4);
    EXPECT_NEAR(std::sqrt(sum_sq / n), 0.01, 3e-4);
}

TEST(electron_rabi_trace, drift_scales_contrast_linearly) {
    RabiConfig cfg = clean_config(kXRabiAxis, 0.3, 0.7);
    cfg.drift = 0.05;
    RabiTrace t = electron_rabi_trace(DensityMatrix::basis(2, 0), cfg);
    double span = t.times.back() - t.times.front();
    for (size_t i = 0; i < t.times.size(); ++i) {
        double c = 0.3 * (1.0 - 0.05 * (t.times[i] - t.times.front()) / span);
        double p0 = std::pow(std::cos(0.5 * cfg.rabi_frequency * t.times[i]), 2);
        EXPECT_NEAR(t.signal[i], 0.7 + c * p0, 1e-14);
    }
}

TEST(electron_rabi_trace, decay_relaxes_towards_half) {
    RabiConfig cfg = clean_config();
    cfg.decay_time = 10.0;
    RabiTrace t = electron_rabi_trace(DensityMatrix::basis(2, 0), cfg);
    for (size_t i = 0; i < t.times.size(); ++i) {
        double expected = 0.5 + 0.5 * std::cos(cfg.rabi_frequency * t.times[i]) * std::exp(-t.times[i] / 10.0);
        EXPECT_NEAR(t.signal[i], expected, 1e-14);
    }
}

TEST(nuclear_rabi_trace, poles) {
    RabiConfig cfg = clean_config(kXRabiAxis, 0.3, 0.7);
    RabiTrace north = nuclear_rabi_trace({0.0, 0.0}, cfg);
    RabiTrace south = nuclear_rabi_trace({kPi, 0.0}, cfg);
    for (size_t i = 0; i < north.times.size(); ++i) {
        double c = std::cos(0.5 * cfg.rabi_frequency * north.times[i]);
        EXPECT_NEAR(north.signal[i], 0.7 + 0.3 * c * c, 1e-13);
        EXPECT_NEAR(south.signal[i], 0.7 + 0.3 * (1 - c * c), 1e-13);
    }
}

TEST(nuclear_rabi_trace, matches_electron_path_and_is_periodic) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        StateAngles a = rqst::testing::random_angles(rng);
        for (double axis : {kXRabiAxis, kYRabiAxis}) {
            RabiConfig cfg = clean_config(axis, 0.3, 0.7);
            RabiTrace nuc = nuclear_rabi_trace(a, cfg);
            RabiTrace ele = electron_rabi_trace(PureState::from_angles(a.theta, a.phi).projector(), cfg);
            for (size_t i = 0; i < nuc.times.size(); ++i) {
                EXPECT_NEAR(nuc.signal[i], ele.signal[i], 1e-12);
            }
        }
        // One period holds 20 samples of the default grid.
        RabiTrace t = nuclear_rabi_trace(a, clean_config());
        for (size_t i = 0; i + 20 < t.times.size(); ++i) {
            EXPECT_NEAR(t.signal[i], t.signal[i + 20], 1e-10);
        }
    }
}

TEST(readout, examples) {
    auto basis = [](int m_s, int m_i) { return HybridState(PureState::basis(kHybridDim, hybrid_index(m_s, m_i))); };
    EXPECT_NEAR(readout(basis(0, 0)), 1.0, 1e-15);
    EXPECT_NEAR(readout(basis(-1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(readout(basis(0, -1), 0.3, 0.7), 1.0, 1e-15);
    auto snaps = nuclear_circuit_snapshots(StateAngles::from_degrees(90, 0), 0.0);
    EXPECT_EQ(snaps.size(), 5u);
    EXPECT_EQ(snaps.front().after, "start");
    EXPECT_NEAR(readout(snaps.back().state), 0.5, 1e-12);
}

TEST(run_init_sequence, examples) {
    HybridState ground(PureState::basis(kHybridDim, hybrid_index(0, 0)));
    EXPECT_NEAR(run_init_sequence(ground).population(hybrid_index(0, 0)), 1.0, 1e-12);
    HybridState mixed(DensityMatrix::maximally_mixed(kHybridDim));
    HybridState out = run_init_sequence(mixed);
    EXPECT_NEAR(out.population(hybrid_index(0, 0)), 1.0, 1e-12);
    EXPECT_TRUE(out.is_valid());
    HybridState corner(PureState::basis(kHybridDim, hybrid_index(1, -1)));
    for (U3Variant v : {U3Variant::kCorrected, U3Variant::kLiteral}) {
        EXPECT_NEAR(run_init_sequence(corner, v).trace(), 1.0, 1e-12);
    }
    auto snaps = init_sequence_snapshots(mixed);
    ASSERT_EQ(snaps.size(), 7u);
    EXPECT_EQ(snaps[0].after, "start");
    EXPECT_EQ(snaps[1].after, "laser");
    EXPECT_EQ(snaps[6].after, "U5");
}

// The literal U3 drops the m_S = 0 block and doubles the m_S = -1 block.
TEST(run_init_sequence, literal_u3_characterization) {
    HybridState mixed(DensityMatrix::maximally_mixed(kHybridDim));
    HybridState out = run_init_sequence(mixed, U3Variant::kLiteral);
    EXPECT_NEAR(out.trace(), 5.0 / 3.0, 1e-12);
    EXPECT_NEAR(out.population(hybrid_index(0, 0)), 5.0 / 3.0, 1e-12);
    HybridState ground(PureState::basis(kHybridDim, hybrid_index(0, 0)));
    EXPECT_NEAR(run_init_sequence(ground, U3Variant::kLiteral).trace(), 0.0, 1e-12);
}
