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

#ifndef RQST_RABI_SIM_H
#define RQST_RABI_SIM_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rqst/gates.h"
#include "rqst/spin_core.h"

namespace rqst {

/// Drive phase of an x-Rabi and a y-Rabi experiment.
inline constexpr double kXRabiAxis = 0.0;
inline constexpr double kYRabiAxis = kPi / 2;

/// With the trace model O + A cos(W t + psi), the gate algebra gives
/// psi_x = atan2(-n_y, n_z) and psi_y = atan2(n_x, n_z). The tomography
/// phases are alpha = kXRabiPhaseSign * psi_x and beta = kYRabiPhaseSign * psi_y,
/// so that tan(alpha) = n_y / n_z and tan(beta) = n_x / n_z.
inline constexpr double kXRabiPhaseSign = -1.0;
inline constexpr double kYRabiPhaseSign = 1.0;

struct RabiConfig {
    /// Drive axis phase zeta (rad). 0 is x-Rabi, pi/2 is y-Rabi.
    double axis_phase = kXRabiAxis;
    /// Rabi angular frequency W (rad/us); nutation angle is W t.
    double rabi_frequency = kTwoPi * 0.1;
    /// Sample times (us), strictly increasing.
    std::vector<double> time_grid;
    double contrast = 0.3;
    double offset = 0.7;
    /// Exponential relaxation of the oscillation toward 1/2 (us).
    std::optional<double> decay_time;
    /// Standard deviation of additive Gaussian noise, signal units.
    double noise_sigma = 0.0;
    /// Fractional linear contrast loss from first to last sample.
    double drift = 0.0;
    std::uint64_t seed = 1;
    /// Independent random stream index within one seed (trace index).
    std::uint64_t stream = 0;
};

std::vector<double> uniform_time_grid(int points, double t_end);

/// 61 points over three Rabi periods, C = 0.3, O = 0.7, no decay, no noise.
RabiConfig default_rabi_config();

/// Throws ConfigError describing the first violated invariant.
void validate(const RabiConfig &cfg);

/// Random stream for (seed, stream); same inputs give the same sequence.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

struct RabiTrace {
    std::vector<double> times;
    std::vector<double> signal;
    RabiConfig config;
    std::string prepared_state;
};

/// Population of |0> oscillation for a unit-contrast readout:
/// p0(t) = 1/2 + amplitude * cos(W t + phase).
struct RabiSignature {
    double amplitude;
    double phase;
};

/// Closed form of the noiseless trace for Bloch vector n under drive axis phase zeta.
RabiSignature ideal_rabi_signature(const BlochVector &n, double axis_phase);

/// Drive a 2-level state by subspace_rotation(0, 1, zeta, W t) for each sample and
/// record O + C(t) [1/2 + (p0(t) - 1/2) e^{-t/T}] + noise.
RabiTrace electron_rabi_trace(const DensityMatrix &state, const RabiConfig &cfg);

/// Per sample: |0,0> -> V1 -> V2(prep) -> V3(W t, zeta) -> V4 -> readout.
RabiTrace nuclear_rabi_trace(const StateAngles &prep, const RabiConfig &cfg);

/// Laser reset followed by U1..U5.
HybridState run_init_sequence(const HybridState &input, U3Variant variant = U3Variant::kCorrected);

/// O + C * (population of m_S = 0, summed over m_I). No noise.
double readout(const HybridState &state, double contrast = 1.0, double offset = 0.0);

struct CircuitSnapshot {
    std::string after;
    HybridState state;
};

std::vector<CircuitSnapshot> init_sequence_snapshots(const HybridState &input,
                                                     U3Variant variant = U3Variant::kCorrected);
std::vector<CircuitSnapshot> nuclear_circuit_snapshots(const StateAngles &prep, double rabi_angle,
                                                       double zeta = kXRabiAxis);

}  // namespace rqst

#endif
