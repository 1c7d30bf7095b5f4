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

#ifndef RQST_TOMOGRAPHY_H
#define RQST_TOMOGRAPHY_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rqst/sine_fit.h"
#include "rqst/spin_core.h"

namespace rqst {

enum class Method { kRaqst, kRpqst, kStandard };

std::string to_string(Method m);
Method method_from_string(const std::string &name);

struct Diagnostics {
    /// Signs chosen for (n_x, n_y, n_z).
    std::array<int, 3> octant_signs{1, 1, 1};
    /// A squared coordinate fell in [-1e-6, 0) or (1, 1 + 1e-6] and was snapped.
    bool snapped = false;
    /// A squared coordinate lay outside the tolerance window and was clamped
    /// (clamping mode only; strict mode throws instead).
    bool clamped = false;
    /// Both Rabi phases sit at +-pi/2: phi is only known to the quadrant.
    bool equatorial = false;
    /// The two phases disagree on the sign of n_z.
    bool hemisphere_conflict = false;
    /// Standard QST vector too far from unit length to normalize.
    bool non_pure = false;
    bool phi_undefined = false;
};

struct TomographyResult {
    Method method;
    BlochVector bloch;
    StateAngles angles;
    DensityMatrix rho;
    std::optional<double> fidelity_vs_target;
    Diagnostics diagnostics;
};

/// Rabi phases in the tomography convention, each on (-pi, pi]:
/// tan(alpha) = n_y / n_z and tan(beta) = n_x / n_z.
struct RabiPhases {
    double alpha;
    double beta;
};

RabiPhases rabi_phases(const SineFit &x_rabi, const SineFit &y_rabi);

struct RaqstOptions {
    /// Clamp inconsistent squared coordinates into [0, 1] and flag, instead of throwing.
    bool clamp_inconsistent = false;
    /// Allowed relative frequency mismatch between the three fits.
    double frequency_tolerance = 0.01;
};

/// Amplitude tomography from x-, y- and reference Rabi fits.
TomographyResult raqst(const SineFit &x_rabi, const SineFit &y_rabi, const SineFit &reference,
                       const RaqstOptions &opts = {});

/// Core of raqst on amplitude ratios A_x / A_ref, A_y / A_ref and phases.
TomographyResult raqst_from_ratios(double ratio_x, double ratio_y, const RabiPhases &phases,
                                   const RaqstOptions &opts = {});

/// Phase tomography from x- and y-Rabi fits; no reference needed.
TomographyResult rpqst(const SineFit &x_rabi, const SineFit &y_rabi);

/// Core of rpqst on the two phases.
TomographyResult rpqst_from_phases(const RabiPhases &phases);

/// One-argument arctangent evaluation of the phase relations:
/// phi = pi - atan(tan(beta)/tan(alpha)) - sgn(sin(alpha)) pi/2 and
/// theta = sgn(cos(alpha)) [|atan(t / cos(phi))| - pi/2] + pi/2, where t is
/// tan(beta), or tan(alpha) when theta_from_alpha is set (that variant does
/// not invert the forward map).
StateAngles rpqst_single_arctan(const RabiPhases &phases, bool theta_from_alpha = false);

/// Standard QST from three |0> populations: p_z without rotation, p_x after
/// the quarter-turn y-Rabi pulse (reads -n_x), p_y after the quarter-turn
/// x-Rabi pulse (reads +n_y).
TomographyResult standard_qst(double p_z, double p_x, double p_y);

/// Standard QST from the fitted curves evaluated at Rabi angles 0 and pi/2,
/// contrast normalized by the reference fit.
TomographyResult standard_from_fits(const SineFit &x_rabi, const SineFit &y_rabi, const SineFit &reference);

/// Bar-plot row: one density-matrix entry, experiment vs theory.
struct MatrixBar {
    int row;
    int col;
    double re_exp;
    double im_exp;
    double re_th;
    double im_th;
};

struct Report {
    DensityMatrix rho_exp;
    DensityMatrix rho_th;
    double fidelity;
    double delta_theta;
    double delta_phi;
    std::vector<MatrixBar> bars;
};

Report reconstruct_report(const TomographyResult &result, const StateAngles &target);

/// Copy of result with fidelity_vs_target filled in.
TomographyResult with_target(TomographyResult result, const StateAngles &target);

struct FittedTraces {
    SineFit x;
    SineFit y;
    std::optional<SineFit> reference;
};

/// Fits the trace set, by default with one frequency shared across all traces.
FittedTraces fit_traces(const RabiTrace &x_rabi, const RabiTrace &y_rabi, const RabiTrace *reference,
                        const FitOptions &opts = {}, bool shared_frequency = true);

}  // namespace rqst

#endif
