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

#include "rqst/tomography.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rqst {

namespace {

int sign_of(double v) {
    return v >= 0.0 ? 1 : -1;
}

TomographyResult make_result(Method method, const BlochVector &unit, Diagnostics diag) {
    AngleConversion conv = bloch_to_angles(unit);
    diag.phi_undefined = conv.phi_undefined;
    PureState psi = PureState::from_angles(conv.angles.theta, conv.angles.phi);
    return TomographyResult{method, unit, conv.angles, psi.projector(), std::nullopt, diag};
}

// Snaps a squared coordinate into [0, 1]. Returns false when it lies outside
// the tolerance window.
bool settle_square(double &q, Diagnostics &diag) {
    if (q < 0.0) {
        bool inside = q >= -kTol.amplitude_clamp;
        diag.snapped |= inside;
        q = 0.0;
        return inside;
    }
    if (q > 1.0) {
        bool inside = q <= 1.0 + kTol.amplitude_clamp;
        diag.snapped |= inside;
        q = 1.0;
        return inside;
    }
    return true;
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::kRaqst:
            return "raqst";
        case Method::kRpqst:
            return "rpqst";
        case Method::kStandard:
            return "standard";
    }
    return "unknown";
}

Method method_from_string(const std::string &name) {
    if (name == "raqst") {
        return Method::kRaqst;
    }
    if (name == "rpqst") {
        return Method::kRpqst;
    }
    if (name == "standard") {
        return Method::kStandard;
    }
    throw ConfigError("unknown tomography method '" + name + "'");
}

RabiPhases rabi_phases(const SineFit &x_rabi, const SineFit &y_rabi) {
    return {wrap_pi(kXRabiPhaseSign * x_rabi.phase), wrap_pi(kYRabiPhaseSign * y_rabi.phase)};
}

TomographyResult raqst_from_ratios(double ratio_x, double ratio_y, const RabiPhases &phases,
                                   const RaqstOptions &opts) {
    double rx2 = ratio_x * ratio_x;
    double ry2 = ratio_y * ratio_y;
    double nz2 = rx2 + ry2 - 1.0;
    double nx2 = ry2 - nz2;
    double ny2 = rx2 - nz2;

    Diagnostics diag;
    std::array<double *, 3> squares{&nx2, &ny2, &nz2};
    const char *names[] = {"n_x^2", "n_y^2", "n_z^2"};
    for (int i = 0; i < 3; ++i) {
        double before = *squares[i];
        if (!settle_square(*squares[i], diag)) {
            if (!opts.clamp_inconsistent) {
                std::ostringstream msg;
                msg << "inconsistent Rabi amplitudes: " << names[i] << " = " << before
                    << " (A_x/A_ref = " << ratio_x << ", A_y/A_ref = " << ratio_y << ")";
                throw InconsistentAmplitudesError(msg.str());
            }
            diag.clamped = true;
        }
    }

    // Both Rabi cosines carry the sign of n_z; weight by amplitude.
    double z_vote = ratio_x * std::cos(phases.alpha) + ratio_y * std::cos(phases.beta);
    diag.octant_signs = {sign_of(std::sin(phases.beta)), sign_of(std::sin(phases.alpha)), sign_of(z_vote)};
    BlochVector n{diag.octant_signs[0] * std::sqrt(nx2), diag.octant_signs[1] * std::sqrt(ny2),
                  diag.octant_signs[2] * std::sqrt(nz2)};
    return make_result(Method::kRaqst, n.normalized(), diag);
}

TomographyResult raqst(const SineFit &x_rabi, const SineFit &y_rabi, const SineFit &reference,
                       const RaqstOptions &opts) {
    if (!(reference.amplitude > 0.0) || reference.phase_undefined) {
        throw InconsistentAmplitudesError("reference Rabi amplitude is zero");
    }
    for (const SineFit *f : {&x_rabi, &y_rabi}) {
        if (std::abs(f->frequency - reference.frequency) > opts.frequency_tolerance * reference.frequency) {
            std::ostringstream msg;
            msg << "Rabi frequencies differ: " << f->frequency << " vs reference " << reference.frequency;
            throw FitError(msg.str());
        }
    }
    return raqst_from_ratios(x_rabi.amplitude / reference.amplitude, y_rabi.amplitude / reference.amplitude,
                             rabi_phases(x_rabi, y_rabi), opts);
}

TomographyResult rpqst_from_phases(const RabiPhases &phases) {
    double ca = std::cos(phases.alpha);
    double cb = std::cos(phases.beta);
    double sa = std::sin(phases.alpha);
    double sb = std::sin(phases.beta);

    Diagnostics diag;
    diag.equatorial = std::abs(ca) < 1e-12 && std::abs(cb) < 1e-12;
    diag.hemisphere_conflict = ca * cb < 0.0;

    // n_y = r_x sin(alpha), n_z = r_x cos(alpha), n_x = r_y sin(beta), n_z = r_y cos(beta),
    // so n is a positive multiple of (sin b |cos a|, sin a |cos b|, cos a |cos b|).
    BlochVector w{sb * std::abs(ca), sa * std::abs(cb), ca * std::abs(cb)};
    if (w.norm() == 0.0) {
        w = {sb, sa, 0.0};
    }
    if (w.norm() == 0.0) {
        throw AmbiguousStateError("n_x, n_y", "both Rabi phases vanish on the equator");
    }
    diag.octant_signs = {sign_of(w.nx), sign_of(w.ny), sign_of(w.nz)};
    return make_result(Method::kRpqst, w.normalized(), diag);
}

TomographyResult rpqst(const SineFit &x_rabi, const SineFit &y_rabi) {
    double threshold = 1e-6 * std::max({std::abs(x_rabi.offset), std::abs(y_rabi.offset), x_rabi.amplitude,
                                        y_rabi.amplitude});
    if (x_rabi.phase_undefined || x_rabi.amplitude <= threshold) {
        throw AmbiguousStateError("n_y", "x-Rabi trace is flat, its phase is undefined");
    }
    if (y_rabi.phase_undefined || y_rabi.amplitude <= threshold) {
        throw AmbiguousStateError("n_x", "y-Rabi trace is flat, its phase is undefined");
    }
    return rpqst_from_phases(rabi_phases(x_rabi, y_rabi));
}

StateAngles rpqst_single_arctan(const RabiPhases &phases, bool theta_from_alpha) {
    auto sgn = [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
    double ta = std::tan(phases.alpha);
    double tb = std::tan(phases.beta);
    StateAngles a;
    a.phi = kPi - std::atan(tb / ta) - sgn(std::sin(phases.alpha)) * kPi / 2;
    double t = theta_from_alpha ? ta : tb;
    a.theta = sgn(std::cos(phases.alpha)) * (std::abs(std::atan(t / std::cos(a.phi))) - kPi / 2) + kPi / 2;
    return a;
}

TomographyResult standard_qst(double p_z, double p_x, double p_y) {
    for (double p : {p_z, p_x, p_y}) {
        if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
            throw DomainError("populations must lie in [0, 1]");
        }
    }
    BlochVector raw{1.0 - 2.0 * p_x, 2.0 * p_y - 1.0, 2.0 * p_z - 1.0};
    Diagnostics diag;
    diag.octant_signs = {sign_of(raw.nx), sign_of(raw.ny), sign_of(raw.nz)};
    if (std::abs(raw.norm() - 1.0) <= 1e-2) {
        return make_result(Method::kStandard, raw.normalized(), diag);
    }
    diag.non_pure = true;
    diag.phi_undefined = true;
    BlochVector inside = raw.norm() > 1.0 ? raw.normalized() : raw;
    StateAngles angles;
    if (inside.norm() > 0.0) {
        AngleConversion conv = bloch_to_angles(inside.normalized());
        angles = conv.angles;
        diag.phi_undefined = conv.phi_undefined;
    }
    return TomographyResult{Method::kStandard, raw, angles, bloch_to_density(inside), std::nullopt, diag};
}

TomographyResult standard_from_fits(const SineFit &x_rabi, const SineFit &y_rabi, const SineFit &reference) {
    if (!(reference.amplitude > 0.0)) {
        throw InconsistentAmplitudesError("reference Rabi amplitude is zero");
    }
    double contrast = 2.0 * reference.amplitude;
    // Model value relative to its own offset at Rabi angle 0 and pi/2.
    auto population = [&](const SineFit &f, double rabi_angle) {
        double p = 0.5 + f.amplitude * std::cos(rabi_angle + f.phase) / contrast;
        return std::clamp(p, 0.0, 1.0);
    };
    return standard_qst(population(x_rabi, 0.0), population(y_rabi, kPi / 2), population(x_rabi, kPi / 2));
}

Report reconstruct_report(const TomographyResult &result, const StateAngles &target) {
    DensityMatrix rho_th = PureState::from_angles(target.theta, target.phi).projector();
    Report rep{result.rho, rho_th, fidelity(rho_th, result.rho), std::abs(result.angles.theta - target.theta),
               angular_distance(result.angles.phi, target.phi), {}};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            rep.bars.push_back({r, c, result.rho(r, c).real(), result.rho(r, c).imag(), rho_th(r, c).real(),
                                rho_th(r, c).imag()});
        }
    }
    return rep;
}

TomographyResult with_target(TomographyResult result, const StateAngles &target) {
    result.fidelity_vs_target = fidelity(PureState::from_angles(target.theta, target.phi).projector(), result.rho);
    return result;
}

FittedTraces fit_traces(const RabiTrace &x_rabi, const RabiTrace &y_rabi, const RabiTrace *reference,
                        const FitOptions &opts, bool shared_frequency) {
    if (shared_frequency) {
        std::vector<const RabiTrace *> set{&x_rabi, &y_rabi};
        if (reference) {
            set.push_back(reference);
        }
        std::vector<SineFit> fits = fit_sine_shared(set, opts);
        FittedTraces out{fits[0], fits[1], std::nullopt};
        if (reference) {
            out.reference = fits[2];
        }
        return out;
    }
    FittedTraces out{fit_sine(x_rabi, opts), fit_sine(y_rabi, opts), std::nullopt};
    if (reference) {
        out.reference = fit_sine(*reference, opts);
    }
    return out;
}

}  // namespace rqst
