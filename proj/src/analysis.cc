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

#include "rqst/analysis.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rqst {

namespace {

TomographyResult reconstruct_fitted(const FittedTraces &fits, Method method, const StateAngles &target,
                                    bool clamp_inconsistent) {
    switch (method) {
        case Method::kRaqst:
            return with_target(raqst(fits.x, fits.y, *fits.reference, RaqstOptions{clamp_inconsistent}), target);
        case Method::kRpqst:
            return with_target(rpqst(fits.x, fits.y), target);
        case Method::kStandard:
            return with_target(standard_from_fits(fits.x, fits.y, *fits.reference), target);
    }
    throw ConfigError("unknown method");
}

}  // namespace

std::string to_string(PerturbedQuantity q) {
    return q == PerturbedQuantity::kAmplitude ? "amplitude" : "phase";
}

std::string to_string(PerturbationMode m) {
    switch (m) {
        case PerturbationMode::kWorstCaseSign:
            return "worst";
        case PerturbationMode::kBothSigns:
            return "both";
        case PerturbationMode::kSignAveraged:
            return "mean";
    }
    return "unknown";
}

PerturbedQuantity quantity_from_string(const std::string &name) {
    if (name == "amplitude") {
        return PerturbedQuantity::kAmplitude;
    }
    if (name == "phase") {
        return PerturbedQuantity::kPhase;
    }
    throw ConfigError("unknown perturbed quantity '" + name + "'");
}

PerturbationMode mode_from_string(const std::string &name) {
    if (name == "worst") {
        return PerturbationMode::kWorstCaseSign;
    }
    if (name == "both") {
        return PerturbationMode::kBothSigns;
    }
    if (name == "mean") {
        return PerturbationMode::kSignAveraged;
    }
    throw ConfigError("unknown perturbation mode '" + name + "'");
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    for (int deg = 5; deg <= 175; deg += 5) {
        grid.push_back(deg);
    }
    return grid;
}

std::pair<double, bool> perturbed_fidelity(Method method, PerturbedQuantity quantity, double signed_error,
                                           const StateAngles &state) {
    BlochVector n = angles_to_bloch(state);
    RabiSignature sx = ideal_rabi_signature(n, kXRabiAxis);
    RabiSignature sy = ideal_rabi_signature(n, kYRabiAxis);
    RabiSignature sref = ideal_rabi_signature({0.0, 0.0, 1.0}, kXRabiAxis);

    SineFit fx;
    fx.amplitude = sx.amplitude;
    fx.phase = sx.phase;
    SineFit fy;
    fy.amplitude = sy.amplitude;
    fy.phase = sy.phase;
    RabiPhases phases = rabi_phases(fx, fy);
    double ax = sx.amplitude;

    double scale = 1.0 + signed_error;
    if (quantity == PerturbedQuantity::kAmplitude) {
        ax *= scale;
    } else {
        phases.alpha *= scale;
    }

    TomographyResult r = method == Method::kRaqst
                             ? raqst_from_ratios(ax / sref.amplitude, sy.amplitude / sref.amplitude, phases,
                                                 RaqstOptions{true})
                             : rpqst_from_phases(phases);
    DensityMatrix ideal = PureState::from_angles(state.theta, state.phi).projector();
    return {fidelity(ideal, r.rho), r.diagnostics.clamped};
}

SweepResult error_sweep(const SweepSpec &spec) {
    if (!(spec.relative_error >= 0.0)) {
        throw ConfigError("relative error must be non-negative");
    }
    if (spec.method == Method::kStandard) {
        throw ConfigError("error sweeps cover raqst and rpqst only");
    }
    SweepResult out{spec, {}};
    for (double theta : spec.theta_grid_deg) {
        if (!(theta > 0.0 && theta < 180.0)) {
            throw ConfigError("sweep polar angles must lie strictly between 0 and 180 degrees");
        }
        StateAngles state = StateAngles::from_degrees(theta, spec.phi_deg);
        auto [f_plus, flag_plus] = perturbed_fidelity(spec.method, spec.quantity, spec.relative_error, state);
        auto [f_minus, flag_minus] = perturbed_fidelity(spec.method, spec.quantity, -spec.relative_error, state);
        double f = spec.mode == PerturbationMode::kSignAveraged ? 0.5 * (f_plus + f_minus) : std::min(f_plus, f_minus);
        out.points.push_back({theta, f, f_plus, f_minus, flag_plus || flag_minus});
    }
    return out;
}

StateAngles sample_uniform_state(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double cos_theta = 2.0 * unit(rng) - 1.0;
    double phi = kTwoPi * unit(rng);
    return {std::acos(std::clamp(cos_theta, -1.0, 1.0)), wrap_two_pi(phi)};
}

FidelityStats summarize(Method method, std::vector<double> f) {
    FidelityStats s{method};
    if (f.empty()) {
        return s;
    }
    std::sort(f.begin(), f.end());
    s.min = f.front();
    s.max = f.back();
    s.mean = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
    size_t mid = f.size() / 2;
    s.median = f.size() % 2 ? f[mid] : 0.5 * (f[mid - 1] + f[mid]);
    return s;
}

TraceTriple simulate_triple(const StateAngles &state, TracePath path, const RabiConfig &base,
                            std::uint64_t first_stream) {
    if (!(base.drift * 3.0 < 1.0)) {
        throw ConfigError("drift too large for a three-trace acquisition");
    }
    auto config_for = [&](int k, double axis) {
        RabiConfig cfg = base;
        cfg.axis_phase = axis;
        cfg.stream = first_stream + static_cast<std::uint64_t>(k);
        cfg.contrast = base.contrast * (1.0 - base.drift * k);
        cfg.drift = base.drift / (1.0 - base.drift * k);
        return cfg;
    };
    RabiConfig ref_cfg = config_for(0, kXRabiAxis);
    RabiConfig x_cfg = config_for(1, kXRabiAxis);
    RabiConfig y_cfg = config_for(2, kYRabiAxis);
    if (path == TracePath::kNuclear) {
        return {nuclear_rabi_trace({0.0, 0.0}, ref_cfg), nuclear_rabi_trace(state, x_cfg),
                nuclear_rabi_trace(state, y_cfg)};
    }
    DensityMatrix rho = PureState::from_angles(state.theta, state.phi).projector();
    DensityMatrix ground = DensityMatrix::basis(2, 0);
    return {electron_rabi_trace(ground, ref_cfg), electron_rabi_trace(rho, x_cfg), electron_rabi_trace(rho, y_cfg)};
}

TomographyResult reconstruct_triple(const TraceTriple &traces, Method method, const StateAngles &target,
                                    bool clamp_inconsistent) {
    FittedTraces fits = fit_traces(traces.x, traces.y, &traces.reference);
    return reconstruct_fitted(fits, method, target, clamp_inconsistent);
}

MonteCarloResult monte_carlo_fidelity(const MonteCarloSpec &spec) {
    if (spec.n_states < 1) {
        throw ConfigError("need at least one state");
    }
    validate(spec.trace);
    MonteCarloResult out{spec, {}, {}};
    std::vector<std::vector<double>> per_method(spec.methods.size());
    std::vector<int> flagged(spec.methods.size(), 0);
    // Stream 4i samples the state, 4i+1..4i+3 drive its traces.
    for (int i = 0; i < spec.n_states; ++i) {
        auto rng = make_stream(spec.seed, 4ull * static_cast<std::uint64_t>(i));
        StateAngles target = sample_uniform_state(rng);
        TraceTriple traces = simulate_triple(target, spec.path, spec.trace, 4ull * static_cast<std::uint64_t>(i) + 1);
        FittedTraces fits = fit_traces(traces.x, traces.y, &traces.reference);
        for (size_t m = 0; m < spec.methods.size(); ++m) {
            double f = 0.0;
            bool flag = false;
            try {
                TomographyResult r = reconstruct_fitted(fits, spec.methods[m], target, true);
                f = *r.fidelity_vs_target;
                flag = r.diagnostics.clamped || r.diagnostics.non_pure;
            } catch (const std::exception &) {
                flag = true;
            }
            per_method[m].push_back(f);
            flagged[m] += flag ? 1 : 0;
            out.records.push_back({i, target, spec.methods[m], f, flag});
        }
    }
    for (size_t m = 0; m < spec.methods.size(); ++m) {
        FidelityStats s = summarize(spec.methods[m], per_method[m]);
        s.flagged = flagged[m];
        out.stats.push_back(s);
    }
    return out;
}

std::vector<OctantRow> octant_suite(double noise_sigma, std::uint64_t seed) {
    struct Case {
        std::string label;
        double theta_deg;
        double phi_deg;
        bool nuclear;
    };
    std::vector<Case> cases;
    for (double theta : {55.0, 125.0}) {
        for (double phi : {40.0, 130.0, 220.0, 310.0}) {
            cases.push_back({"octant", theta, phi, false});
        }
    }
    for (auto [theta, phi] : {std::pair{58.0, 249.0}, std::pair{137.0, 53.0}, std::pair{100.0, 160.0}}) {
        cases.push_back({"demo", theta, phi, true});
    }

    RabiConfig base = default_rabi_config();
    base.noise_sigma = noise_sigma;
    base.seed = seed;
    std::vector<OctantRow> rows;
    std::uint64_t stream = 0;
    for (const Case &c : cases) {
        StateAngles state = StateAngles::from_degrees(c.theta_deg, c.phi_deg);
        BlochVector truth = angles_to_bloch(state);
        std::vector<TracePath> paths{TracePath::kElectron};
        if (c.nuclear) {
            paths.push_back(TracePath::kNuclear);
        }
        for (TracePath path : paths) {
            TraceTriple traces = simulate_triple(state, path, base, stream);
            stream += 3;
            FittedTraces fits = fit_traces(traces.x, traces.y, &traces.reference);
            for (Method m : {Method::kRaqst, Method::kRpqst}) {
                TomographyResult r = reconstruct_fitted(fits, m, state, true);
                bool match = (r.bloch.nx > 0) == (truth.nx > 0) && (r.bloch.ny > 0) == (truth.ny > 0) &&
                             (r.bloch.nz > 0) == (truth.nz > 0);
                rows.push_back({c.label, state, path, m, *r.fidelity_vs_target, match});
            }
        }
    }
    return rows;
}

}  // namespace rqst
