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

#include "rqst/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rqst/analysis.h"
#include "rqst/errors.h"
#include "rqst/io.h"

namespace rqst::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

/// Input file or directory problem; reported with the offending path.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    std::string format;
    std::string out = ".";
};

/// Trace-shape flags shared by simulate and mc.
struct TraceFlags {
    int points = 61;
    double periods = 3.0;
    double rabi_mhz = 0.1;
    double contrast = 0.3;
    double offset = 0.7;
    double sigma = 0.0;
    double drift = 0.0;
    std::optional<double> decay_us;
};

/// The only place CLI degrees become radians.
double cli_radians(double degrees) {
    return deg_to_rad(degrees);
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

void add_trace_flags(CLI::App *cmd, TraceFlags &t) {
    cmd->add_option("--points", t.points, "samples per trace")->capture_default_str();
    cmd->add_option("--periods", t.periods, "Rabi periods covered by the time grid")->capture_default_str();
    cmd->add_option("--rabi-mhz", t.rabi_mhz, "Rabi frequency W / 2pi in MHz")->capture_default_str();
    cmd->add_option("--contrast", t.contrast, "readout contrast C")->capture_default_str();
    cmd->add_option("--offset", t.offset, "readout offset O")->capture_default_str();
    cmd->add_option("--sigma", t.sigma, "Gaussian noise std-dev in units of the contrast C")->capture_default_str();
    cmd->add_option("--drift", t.drift, "fractional contrast loss across one trace")->capture_default_str();
    cmd->add_option("--decay-us", t.decay_us, "relaxation time of the oscillation (us)");
}

RabiConfig make_config(const TraceFlags &t, std::uint64_t seed) {
    if (!(t.rabi_mhz > 0.0) || !(t.periods > 0.0)) {
        throw ConfigError("--rabi-mhz and --periods must be positive");
    }
    if (t.points < 8) {
        throw ConfigError("--points must be at least 8");
    }
    if (!(t.sigma >= 0.0)) {
        throw ConfigError("--sigma must be non-negative");
    }
    RabiConfig cfg;
    cfg.rabi_frequency = kTwoPi * t.rabi_mhz;
    cfg.time_grid = uniform_time_grid(t.points, t.periods / t.rabi_mhz);
    cfg.contrast = t.contrast;
    cfg.offset = t.offset;
    cfg.noise_sigma = t.sigma * t.contrast;
    cfg.drift = t.drift;
    cfg.decay_time = t.decay_us;
    cfg.seed = seed;
    validate(cfg);
    return cfg;
}

std::string choose_format(const Globals &g, const std::string &fallback, std::initializer_list<const char *> allowed) {
    std::string f = g.format.empty() ? fallback : g.format;
    for (const char *a : allowed) {
        if (f == a) {
            return f;
        }
    }
    throw ConfigError("format '" + f + "' is not available for this command");
}

fs::path output_dir(const Globals &g) {
    fs::path dir(g.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw InputError("cannot create output directory '" + g.out + "'");
    }
    return dir;
}

void write_file(const fs::path &path, const std::function<void(std::ostream &)> &body) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    body(os);
    if (!os) {
        throw InputError("write failed for '" + path.string() + "'");
    }
}

void write_json(const fs::path &path, const Json &j) {
    write_file(path, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
}

RabiTrace load_trace(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw InputError("cannot open trace '" + path + "'");
    }
    if (fs::path(path).extension() == ".json") {
        Json j = Json::parse(is);
        return io::trace_from_json(j);
    }
    return io::read_trace_csv(is, path);
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    std::string mode = "electron";
    bool no_reference = false;
    TraceFlags trace;
};

int cmd_simulate(const Globals &g, const SimulateArgs &a, std::ostream &out) {
    std::string format = choose_format(g, "csv", {"csv", "json"});
    TracePath path = io::path_from_string(a.mode);
    RabiConfig base = make_config(a.trace, g.seed);
    StateAngles state{cli_radians(a.theta_deg), cli_radians(a.phi_deg)};
    TraceTriple triple = simulate_triple(state, path, base, 0);

    fs::path dir = output_dir(g);
    auto emit = [&](const std::string &stem, const RabiTrace &trace) {
        fs::path file = dir / (stem + "." + format);
        if (format == "csv") {
            write_file(file, [&](std::ostream &os) { io::write_trace_csv(os, trace); });
        } else {
            write_json(file, io::trace_to_json(trace));
        }
        out << "wrote " << file.string() << " (" << trace.times.size() << " points)\n";
    };
    if (!a.no_reference) {
        emit("ref_rabi", triple.reference);
    }
    emit("x_rabi", triple.x);
    emit("y_rabi", triple.y);
    return 0;
}

// ---------------------------------------------------------------------------
// fit

struct FitArgs {
    std::vector<std::string> inputs;
    bool independent = false;
    bool fit_decay = false;
};

int cmd_fit(const Globals &g, const FitArgs &a, std::ostream &out) {
    choose_format(g, "json", {"json"});
    std::vector<RabiTrace> traces;
    for (const std::string &p : a.inputs) {
        traces.push_back(load_trace(p));
    }
    FitOptions opts;
    opts.fit_decay = a.fit_decay;
    std::vector<SineFit> fits;
    if (a.independent || traces.size() == 1) {
        for (const RabiTrace &t : traces) {
            fits.push_back(fit_sine(t, opts));
        }
    } else {
        std::vector<const RabiTrace *> ptrs;
        for (const RabiTrace &t : traces) {
            ptrs.push_back(&t);
        }
        fits = fit_sine_shared(ptrs, opts);
    }
    Json arr = Json::array();
    for (size_t i = 0; i < fits.size(); ++i) {
        Json j;
        j["input"] = a.inputs[i];
        j["fit"] = io::fit_to_json(fits[i]);
        arr.push_back(std::move(j));
        out << a.inputs[i] << ": A=" << fixed(fits[i].amplitude, 9) << " psi=" << fixed(fits[i].phase, 9)
            << " W=" << fixed(fits[i].frequency, 9) << " O=" << fixed(fits[i].offset, 9) << '\n';
    }
    fs::path file = output_dir(g) / "fit.json";
    write_json(file, Json{{"shared_frequency", !a.independent && traces.size() > 1}, {"fits", arr}});
    out << "wrote " << file.string() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// tomo

struct TomoArgs {
    std::string dir;
    std::string x;
    std::string y;
    std::string ref;
    std::string method = "all";
    std::optional<double> theta_deg;
    std::optional<double> phi_deg;
    bool independent = false;
    bool fit_decay = false;
    bool clamp = false;
};

std::string resolve_input(const std::string &explicit_path, const std::string &dir, const std::string &stem) {
    if (!explicit_path.empty() || dir.empty()) {
        return explicit_path;
    }
    for (const char *ext : {".csv", ".json"}) {
        fs::path candidate = fs::path(dir) / (stem + ext);
        if (fs::exists(candidate)) {
            return candidate.string();
        }
    }
    return "";
}

int cmd_tomo(const Globals &g, const TomoArgs &a, std::ostream &out, std::ostream &err) {
    choose_format(g, "json", {"json"});
    fs::path file = output_dir(g) / "tomo.json";

    std::string x_path = resolve_input(a.x, a.dir, "x_rabi");
    std::string y_path = resolve_input(a.y, a.dir, "y_rabi");
    std::string ref_path = resolve_input(a.ref, a.dir, "ref_rabi");

    Json doc;
    doc["inputs"] = Json{{"x", x_path}, {"y", y_path}, {"ref", ref_path.empty() ? Json(nullptr) : Json(ref_path)}};
    std::optional<StateAngles> target;
    if (a.theta_deg.has_value() != a.phi_deg.has_value()) {
        throw ConfigError("--theta and --phi must be given together");
    }
    if (a.theta_deg) {
        target = StateAngles{cli_radians(*a.theta_deg), cli_radians(*a.phi_deg)};
        doc["target"] = io::angles_to_json(*target);
    } else {
        doc["target"] = nullptr;
    }

    std::vector<Method> methods;
    if (a.method == "all") {
        methods = {Method::kRaqst, Method::kRpqst, Method::kStandard};
    } else {
        methods = {method_from_string(a.method)};
    }

    Json errors = Json::array();
    Json results = Json::array();
    auto fail = [&](const std::string &stage, const std::string &message) {
        errors.push_back(Json{{"stage", stage}, {"message", message}});
        err << "error: " << stage << ": " << message << '\n';
    };

    std::optional<FittedTraces> fits;
    try {
        if (x_path.empty()) {
            throw InputError("missing input: x-Rabi trace (--x)");
        }
        if (y_path.empty()) {
            throw InputError("missing input: y-Rabi trace (--y)");
        }
        for (Method m : methods) {
            if (m != Method::kRpqst && ref_path.empty()) {
                throw InputError("missing input: reference trace (--ref) is required for method " + to_string(m));
            }
        }
        RabiTrace x = load_trace(x_path);
        RabiTrace y = load_trace(y_path);
        std::optional<RabiTrace> ref;
        if (!ref_path.empty()) {
            ref = load_trace(ref_path);
        }
        FitOptions opts;
        opts.fit_decay = a.fit_decay;
        fits = fit_traces(x, y, ref ? &*ref : nullptr, opts, !a.independent);
        Json fj;
        fj["x"] = io::fit_to_json(fits->x);
        fj["y"] = io::fit_to_json(fits->y);
        fj["ref"] = fits->reference ? io::fit_to_json(*fits->reference) : Json(nullptr);
        doc["fits"] = std::move(fj);
    } catch (const std::exception &e) {
        fail("input", e.what());
    }

    if (fits) {
        for (Method m : methods) {
            try {
                TomographyResult r = [&] {
                    switch (m) {
                        case Method::kRaqst: {
                            RaqstOptions opts;
                            opts.clamp_inconsistent = a.clamp;
                            return raqst(fits->x, fits->y, *fits->reference, opts);
                        }
                        case Method::kRpqst:
                            return rpqst(fits->x, fits->y);
                        case Method::kStandard:
                            return standard_from_fits(fits->x, fits->y, *fits->reference);
                    }
                    throw ConfigError("unknown method");
                }();
                Json rj;
                if (target) {
                    r = with_target(r, *target);
                    rj = io::result_to_json(r);
                    rj["report"] = io::report_to_json(reconstruct_report(r, *target));
                } else {
                    rj = io::result_to_json(r);
                }
                results.push_back(std::move(rj));
                out << to_string(m) << ": F="
                    << (r.fidelity_vs_target ? fixed(*r.fidelity_vs_target, 10) : std::string("n/a"))
                    << " theta=" << fixed(rad_to_deg(r.angles.theta), 6) << " deg"
                    << " phi=" << fixed(rad_to_deg(r.angles.phi), 6) << " deg\n";
            } catch (const AmbiguousStateError &e) {
                fail(to_string(m), std::string(e.what()) + " (coordinate " + e.coordinate + ")");
            } catch (const std::exception &e) {
                fail(to_string(m), e.what());
            }
        }
    }
    doc["results"] = std::move(results);
    doc["errors"] = errors;
    write_json(file, doc);
    out << "wrote " << file.string() << '\n';
    return errors.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
    std::string method = "raqst";
    std::string quantity;
    double eps = 0.01;
    double phi_deg = 45.0;
    std::string mode = "mean";
    double theta_step = 5.0;
};

int cmd_sweep(const Globals &g, const SweepArgs &a, std::ostream &out) {
    std::string format = choose_format(g, "csv", {"csv", "json"});
    SweepSpec spec;
    spec.method = method_from_string(a.method);
    if (a.quantity.empty()) {
        spec.quantity = spec.method == Method::kRpqst ? PerturbedQuantity::kPhase : PerturbedQuantity::kAmplitude;
    } else {
        spec.quantity = quantity_from_string(a.quantity);
    }
    spec.relative_error = a.eps;
    spec.phi_deg = a.phi_deg;
    spec.mode = mode_from_string(a.mode);
    if (!(a.theta_step > 0.0 && a.theta_step < 90.0)) {
        throw ConfigError("--theta-step must lie in (0, 90)");
    }
    spec.theta_grid_deg.clear();
    for (int k = 1; k * a.theta_step < 180.0 - 1e-9; ++k) {
        spec.theta_grid_deg.push_back(k * a.theta_step);
    }
    SweepResult result = error_sweep(spec);
    fs::path file = output_dir(g) / ("sweep." + format);
    if (format == "csv") {
        write_file(file, [&](std::ostream &os) { io::write_sweep_csv(os, result); });
    } else {
        write_json(file, io::sweep_to_json(result));
    }
    double lo = 1.0;
    for (const SweepPoint &p : result.points) {
        lo = std::min(lo, p.fidelity);
    }
    out << to_string(spec.method) << " " << to_string(spec.quantity) << " eps=" << a.eps << ": "
        << result.points.size() << " points, min F=" << fixed(lo, 10) << '\n';
    out << "wrote " << file.string() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// mc

struct McArgs {
    int n = 40;
    std::vector<std::string> methods = {"raqst", "rpqst"};
    std::string path = "electron";
    TraceFlags trace;
};

int cmd_mc(const Globals &g, const McArgs &a, std::ostream &out) {
    std::string format = choose_format(g, "json", {"json", "csv"});
    MonteCarloSpec spec;
    spec.n_states = a.n;
    spec.trace = make_config(a.trace, g.seed);
    spec.seed = g.seed;
    spec.path = io::path_from_string(a.path);
    spec.methods.clear();
    for (const std::string &m : a.methods) {
        spec.methods.push_back(method_from_string(m));
    }
    MonteCarloResult result = monte_carlo_fidelity(spec);
    fs::path file = output_dir(g) / ("mc." + format);
    if (format == "csv") {
        write_file(file, [&](std::ostream &os) { io::write_mc_csv(os, result); });
    } else {
        write_json(file, io::mc_to_json(result));
    }
    for (const FidelityStats &s : result.stats) {
        out << to_string(s.method) << ": mean=" << fixed(s.mean, 6) << " median=" << fixed(s.median, 6)
            << " min=" << fixed(s.min, 6) << " max=" << fixed(s.max, 6) << " flagged=" << s.flagged << '\n';
    }
    out << "wrote " << file.string() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// circuit

struct CircuitArgs {
    bool dump_states = false;
    std::string variant = "corrected";
    std::string input = "mixed";
    std::string sequence = "all";
    double theta_deg = 58.0;
    double phi_deg = 249.0;
    double rabi_angle_deg = 0.0;
};

HybridState parse_hybrid_input(const std::string &spec) {
    if (spec == "mixed") {
        return HybridState(DensityMatrix::maximally_mixed(kHybridDim));
    }
    int m_s = 0;
    int m_i = 0;
    char comma = 0;
    std::istringstream is(spec);
    if (!(is >> m_s >> comma >> m_i) || comma != ',' || !is.eof() || std::abs(m_s) > 1 || std::abs(m_i) > 1) {
        throw ConfigError("--input must be 'mixed' or 'm_s,m_i' with values in {-1, 0, 1}");
    }
    return HybridState(DensityMatrix::basis(kHybridDim, hybrid_index(m_s, m_i)));
}

void write_snapshot_rows(std::ostream &os, const std::string &sequence, const std::vector<CircuitSnapshot> &snaps) {
    for (size_t k = 0; k < snaps.size(); ++k) {
        os << sequence << ',' << k << ',' << snaps[k].after;
        for (int i = 0; i < kHybridDim; ++i) {
            os << ',' << io::format_double(snaps[k].state.population(i));
        }
        os << ',' << io::format_double(snaps[k].state.trace()) << '\n';
    }
}

int cmd_circuit(const Globals &g, const CircuitArgs &a, std::ostream &out) {
    std::string format = choose_format(g, "json", {"json", "csv"});
    U3Variant variant;
    if (a.variant == "corrected") {
        variant = U3Variant::kCorrected;
    } else if (a.variant == "literal") {
        variant = U3Variant::kLiteral;
    } else {
        throw ConfigError("--variant must be corrected or literal");
    }
    if (a.sequence != "init" && a.sequence != "readout" && a.sequence != "all") {
        throw ConfigError("--sequence must be init, readout or all");
    }
    bool run_init = a.sequence != "readout";
    bool run_readout = a.sequence != "init";

    std::vector<CircuitSnapshot> init;
    std::vector<CircuitSnapshot> readout_seq;
    if (run_init) {
        init = init_sequence_snapshots(parse_hybrid_input(a.input), variant);
        if (!a.dump_states) {
            init.erase(init.begin(), init.end() - 1);
        }
        const HybridState &last = init.back().state;
        out << "init (" << a.variant << " U3): <0,0|rho|0,0>=" << fixed(last.population(hybrid_index(0, 0)), 12)
            << " trace=" << fixed(last.trace(), 12) << '\n';
    }
    if (run_readout) {
        StateAngles prep{cli_radians(a.theta_deg), cli_radians(a.phi_deg)};
        readout_seq = nuclear_circuit_snapshots(prep, cli_radians(a.rabi_angle_deg));
        if (!a.dump_states) {
            readout_seq.erase(readout_seq.begin(), readout_seq.end() - 1);
        }
        out << "readout: signal=" << fixed(readout(readout_seq.back().state), 12) << '\n';
    }

    fs::path file = output_dir(g) / ("circuit." + format);
    if (format == "csv") {
        write_file(file, [&](std::ostream &os) {
            os << "sequence,step,after";
            for (int i = 0; i < kHybridDim; ++i) {
                os << ",p" << hybrid_label(i);
            }
            os << ",trace\n";
            write_snapshot_rows(os, "init", init);
            write_snapshot_rows(os, "readout", readout_seq);
        });
    } else {
        Json doc;
        doc["variant"] = a.variant;
        doc["input"] = a.input;
        doc["init"] = run_init ? io::snapshots_to_json(init) : Json(nullptr);
        doc["readout"] = run_readout ? io::snapshots_to_json(readout_seq) : Json(nullptr);
        write_json(file, doc);
    }
    out << "wrote " << file.string() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rabi-based quantum state tomography toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "INI/TOML file with option values (see docs/config.md)");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Globals g;
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--format", g.format, "output format: csv or json (default depends on the command)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("-o,--out", g.out, "output directory")->capture_default_str();

    SimulateArgs sim;
    CLI::App *simulate = app.add_subcommand("simulate", "write reference, x- and y-Rabi traces for a state");
    simulate->add_option("--theta", sim.theta_deg, "polar angle (deg)")->capture_default_str();
    simulate->add_option("--phi", sim.phi_deg, "azimuth (deg)")->capture_default_str();
    simulate->add_option("--mode", sim.mode, "electron or nuclear")->capture_default_str();
    simulate->add_flag("--no-ref", sim.no_reference, "skip the reference trace");
    add_trace_flags(simulate, sim.trace);

    FitArgs fit_args;
    CLI::App *fit = app.add_subcommand("fit", "fit damped sinusoids to trace files");
    fit->add_option("inputs", fit_args.inputs, "trace files (CSV or JSON)")->required();
    fit->add_flag("--independent", fit_args.independent, "fit each trace with its own frequency");
    fit->add_flag("--fit-decay", fit_args.fit_decay, "fit an exponential envelope");

    TomoArgs tomo_args;
    CLI::App *tomo = app.add_subcommand("tomo", "reconstruct a state from x-, y- and reference traces");
    tomo->add_option("--dir", tomo_args.dir, "directory holding x_rabi, y_rabi and ref_rabi files");
    tomo->add_option("--x", tomo_args.x, "x-Rabi trace");
    tomo->add_option("--y", tomo_args.y, "y-Rabi trace");
    tomo->add_option("--ref", tomo_args.ref, "reference trace");
    tomo->add_option("--method", tomo_args.method, "raqst, rpqst, standard or all")->capture_default_str();
    tomo->add_option("--theta", tomo_args.theta_deg, "target polar angle (deg) for fidelity");
    tomo->add_option("--phi", tomo_args.phi_deg, "target azimuth (deg) for fidelity");
    tomo->add_flag("--independent", tomo_args.independent, "fit each trace with its own frequency");
    tomo->add_flag("--fit-decay", tomo_args.fit_decay, "fit an exponential envelope");
    tomo->add_flag("--clamp", tomo_args.clamp, "clamp inconsistent amplitudes instead of failing");

    SweepArgs sweep_args;
    CLI::App *sweep = app.add_subcommand("sweep", "fidelity vs polar angle under a perturbed fit quantity");
    sweep->add_option("--method", sweep_args.method, "raqst or rpqst")->capture_default_str();
    sweep->add_option("--quantity", sweep_args.quantity, "amplitude or phase (default follows the method)");
    sweep->add_option("--eps", sweep_args.eps, "relative error")->capture_default_str();
    sweep->add_option("--phi", sweep_args.phi_deg, "fixed azimuth (deg)")->capture_default_str();
    sweep->add_option("--mode", sweep_args.mode, "mean, worst or both")->capture_default_str();
    sweep->add_option("--theta-step", sweep_args.theta_step, "grid step (deg)")->capture_default_str();

    McArgs mc_args;
    CLI::App *mc = app.add_subcommand("mc", "Monte-Carlo fidelity over random states");
    mc->add_option("--n", mc_args.n, "number of states")->capture_default_str();
    mc->add_option("--methods", mc_args.methods, "methods to run")->capture_default_str();
    mc->add_option("--path", mc_args.path, "electron or nuclear")->capture_default_str();
    add_trace_flags(mc, mc_args.trace);

    CircuitArgs circ;
    CLI::App *circuit = app.add_subcommand("circuit", "run the initialisation and readout circuits");
    circuit->add_flag("--dump-states", circ.dump_states, "emit the state after every gate");
    circuit->add_option("--variant", circ.variant, "U3 form: corrected or literal")->capture_default_str();
    circuit->add_option("--input", circ.input, "initial state: mixed or m_s,m_i")->capture_default_str();
    circuit->add_option("--sequence", circ.sequence, "init, readout or all")->capture_default_str();
    circuit->add_option("--theta", circ.theta_deg, "prepared nuclear polar angle (deg)")->capture_default_str();
    circuit->add_option("--phi", circ.phi_deg, "prepared nuclear azimuth (deg)")->capture_default_str();
    circuit->add_option("--rabi-angle", circ.rabi_angle_deg, "nutation angle of V3 (deg)")->capture_default_str();

    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(g, sim, out);
        }
        if (fit->parsed()) {
            return cmd_fit(g, fit_args, out);
        }
        if (tomo->parsed()) {
            return cmd_tomo(g, tomo_args, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(g, sweep_args, out);
        }
        if (mc->parsed()) {
            return cmd_mc(g, mc_args, out);
        }
        if (circuit->parsed()) {
            return cmd_circuit(g, circ, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace rqst::cli
