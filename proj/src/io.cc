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

#include "rqst/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "rqst/errors.h"

namespace rqst::io {

namespace {

Json real_rows(const ComplexMatrix &m, bool imag) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(imag ? m(r, c).imag() : m(r, c).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double require_number(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ConfigError(std::string("missing numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_double(const std::string &text, const std::string &where) {
    std::string t = trim(text);
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (t.empty() || used != t.size()) {
        throw ConfigError(where + ": cannot parse number '" + t + "'");
    }
    return v;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json j;
    j["dim"] = m.rows();
    j["re"] = real_rows(m, false);
    j["im"] = real_rows(m, true);
    return j;
}

ComplexMatrix matrix_from_json(const Json &j) {
    if (!j.contains("dim") || !j.contains("re") || !j.contains("im")) {
        throw ConfigError("matrix JSON needs dim, re and im");
    }
    int dim = j.at("dim").get<int>();
    const Json &re = j.at("re");
    const Json &im = j.at("im");
    if (dim < 1 || re.size() != static_cast<size_t>(dim) || im.size() != static_cast<size_t>(dim)) {
        throw DimensionError("matrix JSON rows do not match dim");
    }
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        if (re[r].size() != static_cast<size_t>(dim) || im[r].size() != static_cast<size_t>(dim)) {
            throw DimensionError("matrix JSON columns do not match dim");
        }
        for (int c = 0; c < dim; ++c) {
            m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
        }
    }
    return m;
}

Json density_to_json(const DensityMatrix &rho) {
    return matrix_to_json(rho.matrix());
}

DensityMatrix density_from_json(const Json &j) {
    return DensityMatrix(matrix_from_json(j));
}

Json bloch_to_json(const BlochVector &v) {
    return Json{{"nx", v.nx}, {"ny", v.ny}, {"nz", v.nz}};
}

BlochVector bloch_from_json(const Json &j) {
    return {require_number(j, "nx"), require_number(j, "ny"), require_number(j, "nz")};
}

Json angles_to_json(const StateAngles &a) {
    return Json{{"theta_deg", rad_to_deg(a.theta)},
                {"phi_deg", rad_to_deg(a.phi)},
                {"theta_rad", a.theta},
                {"phi_rad", a.phi}};
}

Json gate_to_json(const GateOp &gate) {
    Json j;
    switch (gate.kind()) {
        case GateKind::kUnitary:
            j["kind"] = "unitary";
            break;
        case GateKind::kChannel:
            j["kind"] = "channel";
            break;
        case GateKind::kRawOperator:
            j["kind"] = "raw_operator";
            break;
    }
    j["name"] = gate.name();
    j["dim"] = gate.dim();
    Json ops = Json::array();
    for (const ComplexMatrix &k : gate.kraus()) {
        ops.push_back(matrix_to_json(k));
    }
    j["matrices"] = std::move(ops);
    return j;
}

Json hybrid_state_to_json(const HybridState &state) {
    Json j;
    j["pure"] = state.is_pure();
    j["trace"] = state.trace();
    Json pops = Json::object();
    for (int i = 0; i < state.dim(); ++i) {
        pops[state.dim() == kHybridDim ? hybrid_label(i) : std::to_string(i)] = state.population(i);
    }
    j["populations"] = std::move(pops);
    j["rho"] = matrix_to_json(state.matrix());
    return j;
}

Json snapshots_to_json(const std::vector<CircuitSnapshot> &snapshots) {
    Json arr = Json::array();
    for (const CircuitSnapshot &s : snapshots) {
        Json j;
        j["after"] = s.after;
        j["state"] = hybrid_state_to_json(s.state);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json config_to_json(const RabiConfig &cfg) {
    Json j;
    j["axis_phase"] = cfg.axis_phase;
    j["rabi_frequency"] = cfg.rabi_frequency;
    j["time_grid"] = cfg.time_grid;
    j["contrast"] = cfg.contrast;
    j["offset"] = cfg.offset;
    j["decay_time"] = cfg.decay_time ? Json(*cfg.decay_time) : Json(nullptr);
    j["noise_sigma"] = cfg.noise_sigma;
    j["drift"] = cfg.drift;
    j["seed"] = cfg.seed;
    j["stream"] = cfg.stream;
    return j;
}

RabiConfig config_from_json(const Json &j) {
    static const std::vector<std::string> known = {"axis_phase", "rabi_frequency", "time_grid", "contrast", "offset",
                                                   "decay_time", "noise_sigma",    "drift",     "seed",     "stream"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
            throw ConfigError("unknown config key '" + it.key() + "'");
        }
    }
    RabiConfig cfg;
    cfg.axis_phase = j.value("axis_phase", cfg.axis_phase);
    cfg.rabi_frequency = j.value("rabi_frequency", cfg.rabi_frequency);
    cfg.time_grid = j.value("time_grid", cfg.time_grid);
    cfg.contrast = j.value("contrast", cfg.contrast);
    cfg.offset = j.value("offset", cfg.offset);
    if (j.contains("decay_time") && !j.at("decay_time").is_null()) {
        cfg.decay_time = j.at("decay_time").get<double>();
    }
    cfg.noise_sigma = j.value("noise_sigma", cfg.noise_sigma);
    cfg.drift = j.value("drift", cfg.drift);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.stream = j.value("stream", cfg.stream);
    return cfg;
}

void write_trace_csv(std::ostream &os, const RabiTrace &trace) {
    os << "time_us,signal\n";
    for (size_t i = 0; i < trace.times.size(); ++i) {
        os << format_double(trace.times[i]) << ',' << format_double(trace.signal[i]) << '\n';
    }
}

RabiTrace read_trace_csv(std::istream &is, const std::string &source) {
    RabiTrace trace;
    trace.prepared_state = "unknown";
    std::string line;
    if (!std::getline(is, line) || trim(line) != "time_us,signal") {
        throw ConfigError(source + ": expected header 'time_us,signal'");
    }
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        size_t comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw ConfigError(source + ":" + std::to_string(line_no) + ": expected two columns");
        }
        std::string where = source + ":" + std::to_string(line_no);
        trace.times.push_back(parse_double(line.substr(0, comma), where));
        trace.signal.push_back(parse_double(line.substr(comma + 1), where));
    }
    if (trace.times.empty()) {
        throw ConfigError(source + ": no data rows");
    }
    trace.config.time_grid = trace.times;
    return trace;
}

Json trace_to_json(const RabiTrace &trace) {
    Json j;
    j["times"] = trace.times;
    j["signal"] = trace.signal;
    j["meta"] = Json{{"config", config_to_json(trace.config)}, {"prepared_state", trace.prepared_state}};
    return j;
}

RabiTrace trace_from_json(const Json &j) {
    RabiTrace trace;
    trace.times = j.at("times").get<std::vector<double>>();
    trace.signal = j.at("signal").get<std::vector<double>>();
    if (trace.times.size() != trace.signal.size()) {
        throw ConfigError("trace JSON: times and signal differ in length");
    }
    if (j.contains("meta")) {
        const Json &meta = j.at("meta");
        if (meta.contains("config")) {
            trace.config = config_from_json(meta.at("config"));
        }
        trace.prepared_state = meta.value("prepared_state", std::string("unknown"));
    }
    return trace;
}

Json fit_to_json(const SineFit &fit) {
    Json j;
    j["amplitude"] = fit.amplitude;
    j["phase"] = fit.phase;
    j["frequency"] = fit.frequency;
    j["offset"] = fit.offset;
    j["decay_time"] = fit.decay_time ? Json(*fit.decay_time) : Json(nullptr);
    j["residual_rms"] = fit.residual_rms;
    Json e;
    e["amplitude"] = fit.errors.amplitude;
    e["phase"] = fit.errors.phase;
    e["frequency"] = fit.errors.frequency;
    e["offset"] = fit.errors.offset;
    e["decay_time"] = fit.errors.decay_time ? Json(*fit.errors.decay_time) : Json(nullptr);
    j["errors"] = std::move(e);
    j["converged"] = fit.converged;
    j["phase_undefined"] = fit.phase_undefined;
    j["iterations"] = fit.iterations;
    return j;
}

Json diagnostics_to_json(const Diagnostics &d) {
    Json j;
    j["octant_signs"] = d.octant_signs;
    j["snapped"] = d.snapped;
    j["clamped"] = d.clamped;
    j["equatorial"] = d.equatorial;
    j["hemisphere_conflict"] = d.hemisphere_conflict;
    j["non_pure"] = d.non_pure;
    j["phi_undefined"] = d.phi_undefined;
    return j;
}

Json result_to_json(const TomographyResult &result) {
    Json j;
    j["method"] = to_string(result.method);
    j["bloch"] = bloch_to_json(result.bloch);
    j["angles"] = angles_to_json(result.angles);
    j["rho"] = density_to_json(result.rho);
    j["fidelity"] = result.fidelity_vs_target ? Json(*result.fidelity_vs_target) : Json(nullptr);
    j["diagnostics"] = diagnostics_to_json(result.diagnostics);
    return j;
}

Json report_to_json(const Report &report) {
    Json j;
    j["rho_exp"] = density_to_json(report.rho_exp);
    j["rho_th"] = density_to_json(report.rho_th);
    j["fidelity"] = report.fidelity;
    j["delta_theta_deg"] = rad_to_deg(report.delta_theta);
    j["delta_phi_deg"] = rad_to_deg(report.delta_phi);
    Json bars = Json::array();
    for (const MatrixBar &b : report.bars) {
        bars.push_back(Json{{"row", b.row},
                            {"col", b.col},
                            {"re_exp", b.re_exp},
                            {"im_exp", b.im_exp},
                            {"re_th", b.re_th},
                            {"im_th", b.im_th}});
    }
    j["bars"] = std::move(bars);
    return j;
}

void write_sweep_csv(std::ostream &os, const SweepResult &sweep) {
    if (sweep.spec.mode == PerturbationMode::kBothSigns) {
        os << "theta_deg,fidelity,sign\n";
        for (const SweepPoint &p : sweep.points) {
            os << format_double(p.theta_deg) << ',' << format_double(p.fidelity_plus) << ",+1\n";
        }
        for (const SweepPoint &p : sweep.points) {
            os << format_double(p.theta_deg) << ',' << format_double(p.fidelity_minus) << ",-1\n";
        }
        return;
    }
    os << "theta_deg,fidelity\n";
    for (const SweepPoint &p : sweep.points) {
        os << format_double(p.theta_deg) << ',' << format_double(p.fidelity) << '\n';
    }
}

Json sweep_to_json(const SweepResult &sweep) {
    Json meta;
    meta["method"] = to_string(sweep.spec.method);
    meta["quantity"] = to_string(sweep.spec.quantity);
    meta["relative_error"] = sweep.spec.relative_error;
    meta["phi_deg"] = sweep.spec.phi_deg;
    meta["mode"] = to_string(sweep.spec.mode);
    Json theta = Json::array();
    Json f = Json::array();
    Json fp = Json::array();
    Json fm = Json::array();
    Json flagged = Json::array();
    for (const SweepPoint &p : sweep.points) {
        theta.push_back(p.theta_deg);
        f.push_back(p.fidelity);
        fp.push_back(p.fidelity_plus);
        fm.push_back(p.fidelity_minus);
        flagged.push_back(p.flagged);
    }
    Json j;
    j["meta"] = std::move(meta);
    j["theta_deg"] = std::move(theta);
    j["fidelity"] = std::move(f);
    j["fidelity_plus"] = std::move(fp);
    j["fidelity_minus"] = std::move(fm);
    j["flagged"] = std::move(flagged);
    return j;
}

Json mc_to_json(const MonteCarloResult &mc) {
    Json meta;
    meta["n_states"] = mc.spec.n_states;
    meta["seed"] = mc.spec.seed;
    meta["path"] = to_string(mc.spec.path);
    meta["noise_sigma"] = mc.spec.trace.noise_sigma;
    meta["drift"] = mc.spec.trace.drift;
    meta["contrast"] = mc.spec.trace.contrast;
    meta["offset"] = mc.spec.trace.offset;
    meta["points"] = mc.spec.trace.time_grid.size();
    Json stats = Json::object();
    for (const FidelityStats &s : mc.stats) {
        stats[to_string(s.method)] =
            Json{{"mean", s.mean}, {"median", s.median}, {"min", s.min}, {"max", s.max}, {"flagged", s.flagged}};
    }
    Json records = Json::array();
    for (const StateRecord &r : mc.records) {
        records.push_back(Json{{"index", r.index},
                               {"theta_deg", rad_to_deg(r.target.theta)},
                               {"phi_deg", rad_to_deg(r.target.phi)},
                               {"method", to_string(r.method)},
                               {"fidelity", r.fidelity},
                               {"flagged", r.flagged}});
    }
    Json j;
    j["meta"] = std::move(meta);
    j["stats"] = std::move(stats);
    j["records"] = std::move(records);
    return j;
}

void write_mc_csv(std::ostream &os, const MonteCarloResult &mc) {
    os << "index,theta_deg,phi_deg,method,fidelity,flagged\n";
    for (const StateRecord &r : mc.records) {
        os << r.index << ',' << format_double(rad_to_deg(r.target.theta)) << ','
           << format_double(rad_to_deg(r.target.phi)) << ',' << to_string(r.method) << ','
           << format_double(r.fidelity) << ',' << (r.flagged ? 1 : 0) << '\n';
    }
}

Json octant_to_json(const std::vector<OctantRow> &rows) {
    Json arr = Json::array();
    for (const OctantRow &r : rows) {
        arr.push_back(Json{{"label", r.label},
                           {"theta_deg", rad_to_deg(r.state.theta)},
                           {"phi_deg", rad_to_deg(r.state.phi)},
                           {"path", to_string(r.path)},
                           {"method", to_string(r.method)},
                           {"fidelity", r.fidelity},
                           {"signs_match", r.signs_match}});
    }
    return arr;
}

std::string to_string(TracePath path) {
    return path == TracePath::kElectron ? "electron" : "nuclear";
}

TracePath path_from_string(const std::string &name) {
    if (name == "electron") {
        return TracePath::kElectron;
    }
    if (name == "nuclear") {
        return TracePath::kNuclear;
    }
    throw ConfigError("unknown mode '" + name + "' (expected electron or nuclear)");
}

}  // namespace rqst::io
