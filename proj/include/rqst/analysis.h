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

#ifndef RQST_ANALYSIS_H
#define RQST_ANALYSIS_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rqst/rabi_sim.h"
#include "rqst/tomography.h"

namespace rqst {

enum class PerturbedQuantity { kAmplitude, kPhase };

enum class PerturbationMode {
    /// Lower of the (1 + eps) and (1 - eps) fidelities.
    kWorstCaseSign,
    /// Both curves reported; `fidelity` holds the lower one.
    kBothSigns,
    /// Mean of the (1 + eps) and (1 - eps) fidelities: an error of known size
    /// and unknown sign.
    kSignAveraged,
};

std::string to_string(PerturbedQuantity q);
std::string to_string(PerturbationMode m);
PerturbedQuantity quantity_from_string(const std::string &name);
PerturbationMode mode_from_string(const std::string &name);

/// 5, 10, ..., 175 degrees.
std::vector<double> default_theta_grid();

struct SweepSpec {
    Method method = Method::kRaqst;
    PerturbedQuantity quantity = PerturbedQuantity::kAmplitude;
    double relative_error = 0.01;
    std::vector<double> theta_grid_deg = default_theta_grid();
    double phi_deg = 45.0;
    PerturbationMode mode = PerturbationMode::kSignAveraged;
};

struct SweepPoint {
    double theta_deg;
    double fidelity;
    double fidelity_plus;
    double fidelity_minus;
    /// Reconstruction had to clamp inconsistent amplitudes.
    bool flagged;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepPoint> points;
};

/// Exact A_x, A_y, A_ref, alpha, beta of the ideal state, one quantity scaled by
/// (1 +- eps), reconstruction rerun, fidelity against the ideal state.
SweepResult error_sweep(const SweepSpec &spec);

/// Fidelity for one perturbation sign (+1 or -1); exposed for tests.
std::pair<double, bool> perturbed_fidelity(Method method, PerturbedQuantity quantity, double signed_error,
                                           const StateAngles &state);

enum class TracePath { kElectron, kNuclear };

struct MonteCarloSpec {
    int n_states = 40;
    /// Trace parameters (grid, contrast, offset, noise, drift). seed/stream are ignored.
    RabiConfig trace = default_rabi_config();
    std::vector<Method> methods = {Method::kRaqst, Method::kRpqst};
    std::uint64_t seed = 1;
    TracePath path = TracePath::kElectron;
};

struct FidelityStats {
    Method method;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    int flagged = 0;
};

struct StateRecord {
    int index;
    StateAngles target;
    Method method;
    double fidelity;
    bool flagged;
};

struct MonteCarloResult {
    MonteCarloSpec spec;
    std::vector<FidelityStats> stats;
    std::vector<StateRecord> records;
};

/// Uniform random pure states; trace triple (reference, x, y) acquired in that
/// order, so with drift > 0 trace k starts at contrast C (1 - k drift) and loses a
/// further drift * C across its own grid.
MonteCarloResult monte_carlo_fidelity(const MonteCarloSpec &spec);

/// Uniform point on the sphere: cos(theta) uniform in [-1, 1], phi uniform.
StateAngles sample_uniform_state(std::mt19937_64 &rng);

FidelityStats summarize(Method method, std::vector<double> fidelities);

struct OctantRow {
    std::string label;
    StateAngles state;
    TracePath path;
    Method method;
    double fidelity;
    bool signs_match;
};

/// Eight open-octant states plus three octant-distinct demo states (58, 249),
/// (137, 53) and (100, 160) degrees, through both paths where applicable.
std::vector<OctantRow> octant_suite(double noise_sigma = 0.0, std::uint64_t seed = 1);

/// Simulates reference, x and y traces for a state on the given path.
struct TraceTriple {
    RabiTrace reference;
    RabiTrace x;
    RabiTrace y;
};
TraceTriple simulate_triple(const StateAngles &state, TracePath path, const RabiConfig &base,
                            std::uint64_t first_stream = 0);

/// Fits a triple and runs one method; fidelity_vs_target is filled in.
TomographyResult reconstruct_triple(const TraceTriple &traces, Method method, const StateAngles &target,
                                    bool clamp_inconsistent = true);

}  // namespace rqst

#endif
