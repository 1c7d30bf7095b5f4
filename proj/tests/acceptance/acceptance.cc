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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rqst/analysis.h"
#include "rqst/io.h"

using namespace rqst;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

/// Uniform on the sphere with polar caps of `margin_deg` removed.
StateAngles random_state(std::mt19937_64 &rng, double margin_deg) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double lo = std::cos(deg_to_rad(margin_deg));
    return {std::acos(lo - 2.0 * lo * unit(rng)), kTwoPi * unit(rng)};
}

FittedTraces noiseless_fits(const StateAngles &s, TracePath path = TracePath::kElectron) {
    TraceTriple t = simulate_triple(s, path, default_rabi_config());
    return fit_traces(t.x, t.y, &t.reference);
}

Outcome round_trip_fidelity() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20261015);
    double worst_a = 1.0;
    double worst_p = 1.0;
    for (int i = 0; i < 1000; ++i) {
        StateAngles s = random_state(rng, 2.0);
        FittedTraces f = noiseless_fits(s);
        worst_a = std::min(worst_a, *with_target(raqst(f.x, f.y, *f.reference), s).fidelity_vs_target);
        worst_p = std::min(worst_p, *with_target(rpqst(f.x, f.y), s).fidelity_vs_target);
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = worst_a >= 1 - 1e-8 && worst_p >= 1 - 1e-8 && seconds <= 60.0;
    return {pass, "min F raqst " + fmt("%.12f", worst_a) + ", rpqst " + fmt("%.12f", worst_p) + ", " +
                      fmt("%.1f s", seconds)};
}

Outcome nuclear_circuit_equivalence() {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double theta = kPi * i / 9.0;
        for (int j = 0; j < 10; ++j) {
            double phi = kTwoPi * j / 10.0;
            for (int k = 0; k < 10; ++k) {
                double rabi = kTwoPi * k / 10.0;
                HybridState s = nuclear_circuit_snapshots({theta, phi}, rabi).back().state;
                Complex amp = std::cos(theta / 2) * std::cos(rabi / 2) -
                              Complex(0, 1) * std::polar(1.0, phi) * std::sin(theta / 2) * std::sin(rabi / 2);
                worst = std::max(worst, std::abs(s.population(hybrid_index(0, 0)) - std::norm(amp)));
            }
        }
    }
    return {worst <= 1e-10, "max |dp| " + fmt("%.3e", worst) + " over 1000 points"};
}

Outcome initialisation() {
    HybridState mixed(DensityMatrix::maximally_mixed(kHybridDim));
    double p00 = run_init_sequence(mixed, U3Variant::kCorrected).population(hybrid_index(0, 0));
    std::vector<HybridState> inputs{mixed};
    for (int i = 0; i < kHybridDim; ++i) {
        inputs.emplace_back(PureState::basis(kHybridDim, i));
    }
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int k = 0; k < 20; ++k) {
        ComplexVector v(kHybridDim);
        for (int i = 0; i < kHybridDim; ++i) {
            v(i) = Complex(g(rng), g(rng));
        }
        inputs.emplace_back(PureState(v / v.norm()));
    }
    double trace_err[2] = {0.0, 0.0};
    for (const HybridState &in : inputs) {
        trace_err[0] = std::max(trace_err[0], std::abs(run_init_sequence(in, U3Variant::kCorrected).trace() - 1));
        trace_err[1] = std::max(trace_err[1], std::abs(run_init_sequence(in, U3Variant::kLiteral).trace() - 1));
    }
    bool pass = std::abs(p00 - 1.0) <= 1e-12 && trace_err[0] <= 1e-12 && trace_err[1] <= 1e-12;
    return {pass, "corrected <0,0|rho|0,0> " + fmt("%.15f", p00) + ", max trace error corrected " +
                      fmt("%.1e", trace_err[0]) + ", literal " + fmt("%.3f", trace_err[1])};
}

Outcome amplitude_relation() {
    std::mt19937_64 rng(4);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        StateAngles s = random_state(rng, 0.0);
        FittedTraces f = noiseless_fits(s);
        double rx = f.x.amplitude / f.reference->amplitude;
        double ry = f.y.amplitude / f.reference->amplitude;
        double nz = angles_to_bloch(s).nz;
        worst = std::max(worst, std::abs(rx * rx + ry * ry - 1.0 - nz * nz));
    }
    return {worst <= 1e-6, "max residual " + fmt("%.3e", worst)};
}

Outcome sweep_shape() {
    auto fidelity_at = [](Method m, double eps, double theta) {
        SweepSpec s;
        s.method = m;
        s.quantity = m == Method::kRaqst ? PerturbedQuantity::kAmplitude : PerturbedQuantity::kPhase;
        s.relative_error = eps;
        s.theta_grid_deg = {theta};
        return error_sweep(s).points[0].fidelity;
    };
    bool pass = true;
    std::string detail;
    for (double eps : {0.01, 0.1}) {
        double a5 = fidelity_at(Method::kRaqst, eps, 5);
        double a90 = fidelity_at(Method::kRaqst, eps, 90);
        double a175 = fidelity_at(Method::kRaqst, eps, 175);
        double p5 = fidelity_at(Method::kRpqst, eps, 5);
        double p90 = fidelity_at(Method::kRpqst, eps, 90);
        double p175 = fidelity_at(Method::kRpqst, eps, 175);
        pass &= a5 < a90 && a175 < a90 && p5 > p90 && p175 > p90;
        detail += "eps " + fmt("%g", eps) + ": raqst " + fmt("%.6f", a5) + "/" + fmt("%.6f", a90) + "/" +
                  fmt("%.6f", a175) + " rpqst " + fmt("%.6f", p5) + "/" + fmt("%.6f", p90) + "/" + fmt("%.6f", p175) +
                  "; ";
    }
    double worst_zero = 0.0;
    for (Method m : {Method::kRaqst, Method::kRpqst}) {
        SweepSpec s;
        s.method = m;
        s.quantity = m == Method::kRaqst ? PerturbedQuantity::kAmplitude : PerturbedQuantity::kPhase;
        s.relative_error = 0.0;
        for (const SweepPoint &p : error_sweep(s).points) {
            worst_zero = std::max(worst_zero, std::abs(p.fidelity - 1.0));
        }
    }
    pass &= worst_zero <= 1e-12;
    return {pass, detail + "eps 0 max |F-1| " + fmt("%.1e", worst_zero)};
}

Outcome method_agreement() {
    std::mt19937_64 rng(6);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        StateAngles s = random_state(rng, 0.0);
        FittedTraces f = noiseless_fits(s);
        BlochVector a = raqst(f.x, f.y, *f.reference).bloch;
        BlochVector p = rpqst(f.x, f.y).bloch;
        BlochVector q = standard_from_fits(f.x, f.y, *f.reference).bloch;
        worst = std::max({worst, a.distance(p), a.distance(q), p.distance(q)});
    }
    return {worst <= 1e-6, "max Bloch distance " + fmt("%.3e", worst)};
}

Outcome octants() {
    int matched = 0;
    int total = 0;
    for (double t : {55.0, 125.0}) {
        for (double p : {40.0, 130.0, 220.0, 310.0}) {
            StateAngles s = StateAngles::from_degrees(t, p);
            BlochVector n = angles_to_bloch(s);
            FittedTraces f = noiseless_fits(s);
            for (const TomographyResult &r : {raqst(f.x, f.y, *f.reference), rpqst(f.x, f.y)}) {
                ++total;
                matched += (r.bloch.nx > 0) == (n.nx > 0) && (r.bloch.ny > 0) == (n.ny > 0) &&
                           (r.bloch.nz > 0) == (n.nz > 0);
            }
        }
    }
    return {matched == total, std::to_string(matched) + "/" + std::to_string(total) + " sign patterns recovered"};
}

Outcome noise_robustness() {
    MonteCarloSpec spec;
    spec.n_states = 40;
    spec.seed = 1;
    spec.trace.noise_sigma = 0.01 * spec.trace.contrast;
    MonteCarloResult noisy = monte_carlo_fidelity(spec);
    spec.trace.drift = 0.05;
    MonteCarloResult drift = monte_carlo_fidelity(spec);
    double med_a = noisy.stats[0].median;
    double med_p = noisy.stats[1].median;
    double mean_a = drift.stats[0].mean;
    double mean_p = drift.stats[1].mean;
    bool pass = spec.trace.time_grid.size() == 61 && med_a >= 0.99 && med_p >= 0.99 && mean_p >= mean_a;
    return {pass, "median F raqst " + fmt("%.6f", med_a) + ", rpqst " + fmt("%.6f", med_p) +
                      "; with drift mean F raqst " + fmt("%.6f", mean_a) + ", rpqst " + fmt("%.6f", mean_p)};
}

Outcome regression_state() {
    StateAngles target = StateAngles::from_degrees(58, 249);
    FittedTraces f = noiseless_fits(target, TracePath::kNuclear);
    bool pass = true;
    std::string detail;
    for (const TomographyResult &r : {raqst(f.x, f.y, *f.reference), rpqst(f.x, f.y)}) {
        double dt = std::abs(rad_to_deg(r.angles.theta) - 58.0);
        double dp = rad_to_deg(angular_distance(r.angles.phi, target.phi));
        io::Json rep = io::report_to_json(reconstruct_report(r, target));
        bool bars = rep["bars"].size() == 4 && rep["rho_exp"]["dim"] == 2 && rep["rho_th"]["dim"] == 2 &&
                    rep["bars"][1].contains("im_exp") && rep["bars"][1].contains("im_th");
        pass &= dt <= 0.01 && dp <= 0.01 && bars;
        detail += to_string(r.method) + " dtheta " + fmt("%.2e", dt) + " dphi " + fmt("%.2e", dp) + " deg; ";
    }
    return {pass, detail + "report carries rho_exp, rho_th and bar rows"};
}

std::string slurp(const fs::path &p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

/// Runs the command into a fresh directory and returns stdout plus every output file.
std::map<std::string, std::string> run_cli(const std::string &args, const fs::path &dir) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string cmd = std::string("\"") + RQST_CLI_PATH + "\" " + args + " -o \"" + dir.string() + "/out\" > \"" +
                      dir.string() + "/stdout.txt\" 2> \"" + dir.string() + "/stderr.txt\"";
    int status = std::system(cmd.c_str());
    std::map<std::string, std::string> files{{"#status", std::to_string(status)}};
    for (const auto &e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            files[fs::relative(e.path(), dir).string()] = slurp(e.path());
        }
    }
    return files;
}

Outcome determinism() {
    fs::path root = fs::temp_directory_path() / "rqst_acceptance";
    fs::remove_all(root);
    fs::create_directories(root);
    std::string sim = (root / "sim").string();
    std::string setup = std::string("\"") + RQST_CLI_PATH + "\" simulate --theta 58 --phi 249 --sigma 0.01 --seed 3 -o \"" +
                        sim + "\" > /dev/null";
    if (std::system(setup.c_str()) != 0) {
        return {false, "could not create input traces"};
    }
    const std::vector<std::string> commands = {
        "simulate --theta 58 --phi 249 --mode electron --sigma 0.01 --drift 0.05 --seed 7",
        "simulate --theta 137 --phi 53 --mode nuclear --sigma 0.01 --seed 7 --format json",
        "fit \"" + sim + "/x_rabi.csv\" \"" + sim + "/y_rabi.csv\" --seed 7",
        "tomo --dir \"" + sim + "\" --method all --theta 58 --phi 249 --seed 7",
        "sweep --method rpqst --eps 0.1 --mode both --seed 7",
        "mc --n 10 --sigma 0.01 --drift 0.05 --seed 7",
        "mc --n 5 --sigma 0.01 --path nuclear --seed 7 --format csv",
        "circuit --dump-states --variant literal --seed 7",
    };
    int identical = 0;
    std::string failed;
    for (size_t i = 0; i < commands.size(); ++i) {
        fs::path dir = root / ("cmd" + std::to_string(i));
        auto first = run_cli(commands[i], dir);
        auto second = run_cli(commands[i], dir);
        bool ok = first == second && first["#status"] == "0" && first.size() >= 4;
        identical += ok ? 1 : 0;
        if (!ok) {
            failed += " [" + commands[i] + "]";
        }
    }
    fs::remove_all(root);
    return {identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical" + failed};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {"round-trip fidelity, 1000 states", round_trip_fidelity},
        {"nuclear circuit vs closed form", nuclear_circuit_equivalence},
        {"initialisation", initialisation},
        {"amplitude relation", amplitude_relation},
        {"error-sweep shape", sweep_shape},
        {"method agreement", method_agreement},
        {"octant disambiguation", octants},
        {"noise and drift robustness", noise_robustness},
        {"regression state 58/249", regression_state},
        {"determinism", determinism},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("AC%-2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
