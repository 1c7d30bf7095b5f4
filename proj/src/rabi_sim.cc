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

#include <cmath>
#include <sstream>

namespace rqst {

std::vector<double> uniform_time_grid(int points, double t_end) {
    if (points < 2) {
        throw ConfigError("time grid needs at least two points");
    }
    std::vector<double> t(points);
    for (int i = 0; i < points; ++i) {
        t[i] = t_end * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return t;
}

RabiConfig default_rabi_config() {
    RabiConfig cfg;
    cfg.time_grid = uniform_time_grid(61, 3.0 * kTwoPi / cfg.rabi_frequency);
    return cfg;
}

void validate(const RabiConfig &cfg) {
    if (cfg.time_grid.size() < 8) {
        throw ConfigError("time grid needs at least 8 points");
    }
    for (size_t i = 0; i < cfg.time_grid.size(); ++i) {
        if (!std::isfinite(cfg.time_grid[i])) {
            throw ConfigError("time grid contains a non-finite value");
        }
        if (i > 0 && !(cfg.time_grid[i] > cfg.time_grid[i - 1])) {
            throw ConfigError("time grid must be strictly increasing");
        }
    }
    if (!(cfg.contrast > 0.0) || !std::isfinite(cfg.contrast)) {
        throw ConfigError("contrast must be positive");
    }
    if (!std::isfinite(cfg.offset)) {
        throw ConfigError("offset must be finite");
    }
    if (!(cfg.rabi_frequency > 0.0) || !std::isfinite(cfg.rabi_frequency)) {
        throw ConfigError("Rabi frequency must be positive");
    }
    if (!(cfg.noise_sigma >= 0.0) || !std::isfinite(cfg.noise_sigma)) {
        throw ConfigError("noise sigma must be non-negative");
    }
    if (!(cfg.drift >= 0.0 && cfg.drift < 1.0)) {
        throw ConfigError("drift must lie in [0, 1)");
    }
    if (cfg.decay_time && !(*cfg.decay_time > 0.0)) {
        throw ConfigError("decay time must be positive");
    }
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

RabiSignature ideal_rabi_signature(const BlochVector &n, double axis_phase) {
    // n_z(t) = n_z cos(Wt) + w sin(Wt) for a right-handed rotation about (cos z, sin z, 0).
    double w = std::cos(axis_phase) * n.ny - std::sin(axis_phase) * n.nx;
    return {0.5 * std::hypot(n.nz, w), wrap_two_pi(std::atan2(-w, n.nz))};
}

namespace {

template <typename PopulationAt>
RabiTrace synthesize(const RabiConfig &cfg, std::string prepared, PopulationAt population_at) {
    validate(cfg);
    RabiTrace trace;
    trace.config = cfg;
    trace.prepared_state = std::move(prepared);
    trace.times = cfg.time_grid;
    trace.signal.reserve(cfg.time_grid.size());

    auto rng = make_stream(cfg.seed, cfg.stream);
    std::normal_distribution<double> noise(0.0, 1.0);
    double t0 = cfg.time_grid.front();
    double span = cfg.time_grid.back() - t0;
    for (double t : cfg.time_grid) {
        double p0 = population_at(cfg.rabi_frequency * t);
        if (cfg.decay_time) {
            p0 = 0.5 + (p0 - 0.5) * std::exp(-t / *cfg.decay_time);
        }
        double contrast = cfg.contrast * (1.0 - cfg.drift * (t - t0) / span);
        double y = cfg.offset + contrast * p0;
        if (cfg.noise_sigma > 0.0) {
            y += cfg.noise_sigma * noise(rng);
        }
        trace.signal.push_back(y);
    }
    return trace;
}

std::string describe(const StateAngles &a, const char *path) {
    std::ostringstream out;
    out.precision(17);
    out << path << " theta=" << a.theta << " phi=" << a.phi;
    return out.str();
}

}  // namespace

RabiTrace electron_rabi_trace(const DensityMatrix &state, const RabiConfig &cfg) {
    if (state.dim() != 2) {
        throw DimensionError("electron Rabi trace needs a 2-level state");
    }
    std::ostringstream desc;
    desc.precision(17);
    BlochVector n = density_to_bloch(state);
    desc << "electron bloch=(" << n.nx << "," << n.ny << "," << n.nz << ")";
    return synthesize(cfg, desc.str(), [&](double angle) {
        GateOp r = subspace_rotation(0, 1, cfg.axis_phase, angle, 2);
        return apply_unitary(r.matrix(), state).population(0);
    });
}

RabiTrace nuclear_rabi_trace(const StateAngles &prep, const RabiConfig &cfg) {
    HybridState start(PureState::basis(kHybridDim, hybrid_index(0, 0)));
    return synthesize(cfg, describe(prep, "nuclear"), [&](double angle) {
        VGates v = build_v_gates(prep.theta, prep.phi, angle, cfg.axis_phase);
        HybridState s = apply(v.v1, start);
        s = apply(v.v2, s);
        s = apply(v.v3, s);
        s = apply(v.v4, s);
        return readout(s);
    });
}

std::vector<CircuitSnapshot> init_sequence_snapshots(const HybridState &input, U3Variant variant) {
    if (input.dim() != kHybridDim) {
        throw DimensionError("initialisation acts on the 9-level register");
    }
    std::vector<CircuitSnapshot> out{{"start", input}};
    HybridState s = apply(laser_reset(), input);
    out.push_back({"laser", s});
    for (const GateOp &g : build_init_gates(variant)) {
        s = apply(g, s);
        out.push_back({g.name(), s});
    }
    return out;
}

HybridState run_init_sequence(const HybridState &input, U3Variant variant) {
    return init_sequence_snapshots(input, variant).back().state;
}

double readout(const HybridState &state, double contrast, double offset) {
    if (state.dim() != kHybridDim) {
        throw DimensionError("readout acts on the 9-level register");
    }
    double p = 0.0;
    for (int m_i : {1, 0, -1}) {
        p += state.population(hybrid_index(0, m_i));
    }
    return offset + contrast * p;
}

std::vector<CircuitSnapshot> nuclear_circuit_snapshots(const StateAngles &prep, double rabi_angle, double zeta) {
    VGates v = build_v_gates(prep.theta, prep.phi, rabi_angle, zeta);
    std::vector<CircuitSnapshot> out;
    HybridState s(PureState::basis(kHybridDim, hybrid_index(0, 0)));
    out.push_back({"start", s});
    for (const GateOp *g : {&v.v1, &v.v2, &v.v3, &v.v4}) {
        s = apply(*g, s);
        out.push_back({g->name(), s});
    }
    return out;
}

}  // namespace rqst
