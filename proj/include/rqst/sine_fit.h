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

#ifndef RQST_SINE_FIT_H
#define RQST_SINE_FIT_H

#include <optional>
#include <span>
#include <vector>

#include "rqst/rabi_sim.h"

namespace rqst {

struct SineFitErrors {
    double amplitude = 0.0;
    double phase = 0.0;
    double frequency = 0.0;
    double offset = 0.0;
    std::optional<double> decay_time;
};

/// y(t) = offset + amplitude * cos(frequency * t + phase) [* exp(-t / decay_time)].
/// amplitude >= 0, phase in [0, 2pi), frequency > 0.
struct SineFit {
    double amplitude = 0.0;
    double phase = 0.0;
    double frequency = 0.0;
    double offset = 0.0;
    std::optional<double> decay_time;
    double residual_rms = 0.0;
    SineFitErrors errors;
    bool converged = false;
    bool phase_undefined = false;
    int iterations = 0;

    double evaluate(double t) const;
};

struct FitOptions {
    std::optional<double> fixed_frequency;
    bool fit_decay = false;
    int max_iterations = 200;
    double relative_tolerance = 1e-10;
    /// Spectral scan points per Fourier resolution step 2pi / span.
    int oversampling = 10;
};

/// Folds (A, psi) into A >= 0, psi in [0, 2pi).
std::pair<double, double> canonicalize_amplitude_phase(double amplitude, double phase);

SineFit fit_sine(std::span<const double> times, std::span<const double> signal, const FitOptions &opts = {});
SineFit fit_sine(const RabiTrace &trace, const FitOptions &opts = {});

/// Joint fit with one frequency (and decay time, if enabled) shared by every
/// trace; offsets, amplitudes and phases are per trace.
std::vector<SineFit> fit_sine_shared(const std::vector<const RabiTrace *> &traces, const FitOptions &opts = {});

}  // namespace rqst

#endif
