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

#ifndef RQST_IO_H
#define RQST_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rqst/analysis.h"
#include "rqst/gates.h"
#include "rqst/rabi_sim.h"
#include "rqst/sine_fit.h"
#include "rqst/tomography.h"

namespace rqst::io {

/// Insertion-ordered so that output bytes are stable.
using Json = nlohmann::ordered_json;

/// 17 significant digits, enough to read back the same double.
std::string format_double(double x);

/// {"dim": n, "re": [[...]], "im": [[...]]}
Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);
Json density_to_json(const DensityMatrix &rho);
DensityMatrix density_from_json(const Json &j);

/// {"nx": .., "ny": .., "nz": ..}
Json bloch_to_json(const BlochVector &v);
BlochVector bloch_from_json(const Json &j);

Json angles_to_json(const StateAngles &a);

/// Debug view: kind, name and matrices (one per Kraus operator for channels).
Json gate_to_json(const GateOp &gate);
Json hybrid_state_to_json(const HybridState &state);
Json snapshots_to_json(const std::vector<CircuitSnapshot> &snapshots);

Json config_to_json(const RabiConfig &cfg);
RabiConfig config_from_json(const Json &j);

/// Header `time_us,signal`, LF line endings, 17 significant digits.
void write_trace_csv(std::ostream &os, const RabiTrace &trace);
/// Inverse of write_trace_csv; config and prepared_state are left at defaults.
RabiTrace read_trace_csv(std::istream &is, const std::string &source = "trace");
Json trace_to_json(const RabiTrace &trace);
RabiTrace trace_from_json(const Json &j);

Json fit_to_json(const SineFit &fit);
Json diagnostics_to_json(const Diagnostics &d);
Json result_to_json(const TomographyResult &result);
/// Experimental and theoretical matrices plus per-entry bar rows.
Json report_to_json(const Report &report);

/// `theta_deg,fidelity`, or `theta_deg,fidelity,sign` in both-signs mode.
void write_sweep_csv(std::ostream &os, const SweepResult &sweep);
Json sweep_to_json(const SweepResult &sweep);

Json mc_to_json(const MonteCarloResult &mc);
/// Per-state records: `index,theta_deg,phi_deg,method,fidelity,flagged`.
void write_mc_csv(std::ostream &os, const MonteCarloResult &mc);

Json octant_to_json(const std::vector<OctantRow> &rows);

std::string to_string(TracePath path);
TracePath path_from_string(const std::string &name);

}  // namespace rqst::io

#endif
