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

#include "rqst/sine_fit.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rqst {

namespace {

struct Series {
    std::span<const double> t;
    std::span<const double> y;
};

// Parameter layout: [O_0, c_0, s_0, O_1, c_1, s_1, ..., (W), (gamma)] with
// f_j(t) = O_j + exp(-gamma t) (c_j cos Wt + s_j sin Wt).
struct Layout {
    size_t traces;
    bool free_frequency;
    bool decay;

    size_t size() const {
        return 3 * traces + (free_frequency ? 1 : 0) + (decay ? 1 : 0);
    }
    size_t frequency() const {
        return 3 * traces;
    }
    size_t gamma() const {
        return 3 * traces + (free_frequency ? 1 : 0);
    }
};

struct Model {
    Layout layout;
    double fixed_frequency;

    double frequency(const Eigen::VectorXd &p) const {
        return layout.free_frequency ? p(layout.frequency()) : fixed_frequency;
    }
    double gamma(const Eigen::VectorXd &p) const {
        return layout.decay ? p(layout.gamma()) : 0.0;
    }
};

size_t total_points(const std::vector<Series> &data) {
    size_t n = 0;
    for (const auto &s : data) {
        n += s.t.size();
    }
    return n;
}

Eigen::VectorXd residuals(const Model &m, const std::vector<Series> &data, const Eigen::VectorXd &p) {
    Eigen::VectorXd r(total_points(data));
    double w = m.frequency(p);
    double g = m.gamma(p);
    size_t k = 0;
    for (size_t j = 0; j < data.size(); ++j) {
        for (size_t i = 0; i < data[j].t.size(); ++i) {
            double t = data[j].t[i];
            double f = p(3 * j) + std::exp(-g * t) * (p(3 * j + 1) * std::cos(w * t) + p(3 * j + 2) * std::sin(w * t));
            r(k++) = data[j].y[i] - f;
        }
    }
    return r;
}

Eigen::MatrixXd jacobian(const Model &m, const std::vector<Series> &data, const Eigen::VectorXd &p) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(total_points(data), m.layout.size());
    double w = m.frequency(p);
    double g = m.gamma(p);
    size_t k = 0;
    for (size_t j = 0; j < data.size(); ++j) {
        double c = p(3 * j + 1);
        double s = p(3 * j + 2);
        for (size_t i = 0; i < data[j].t.size(); ++i, ++k) {
            double t = data[j].t[i];
            double e = std::exp(-g * t);
            double cw = std::cos(w * t);
            double sw = std::sin(w * t);
            jac(k, 3 * j) = 1.0;
            jac(k, 3 * j + 1) = e * cw;
            jac(k, 3 * j + 2) = e * sw;
            if (m.layout.free_frequency) {
                jac(k, m.layout.frequency()) = e * t * (s * cw - c * sw);
            }
            if (m.layout.decay) {
                jac(k, m.layout.gamma()) = -t * e * (c * cw + s * sw);
            }
        }
    }
    return jac;
}

// Linear least squares for (O, c, s) of one series at a given frequency.
Eigen::Vector3d linear_fit(const Series &s, double w, double *rss) {
    Eigen::MatrixXd a(s.t.size(), 3);
    Eigen::VectorXd y(s.t.size());
    for (size_t i = 0; i < s.t.size(); ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = std::cos(w * s.t[i]);
        a(i, 2) = std::sin(w * s.t[i]);
        y(i) = s.y[i];
    }
    Eigen::Vector3d x = a.colPivHouseholderQr().solve(y);
    if (rss) {
        *rss = (y - a * x).squaredNorm();
    }
    return x;
}

double scan_frequency(const std::vector<Series> &data, int oversampling) {
    double span = std::numeric_limits<double>::infinity();
    double min_dt = std::numeric_limits<double>::infinity();
    for (const auto &s : data) {
        span = std::min(span, s.t.back() - s.t.front());
        for (size_t i = 1; i < s.t.size(); ++i) {
            min_dt = std::min(min_dt, s.t[i] - s.t[i - 1]);
        }
    }
    double lo = kPi / span;
    double hi = kPi / min_dt;
    double step = kTwoPi / span / std::max(1, oversampling);
    double best_w = lo;
    double best_rss = std::numeric_limits<double>::infinity();
    for (double w = lo; w <= hi; w += step) {
        double total = 0.0;
        for (const auto &s : data) {
            double rss = 0.0;
            linear_fit(s, w, &rss);
            total += rss;
        }
        if (total < best_rss) {
            best_rss = total;
            best_w = w;
        }
    }
    return best_w;
}

double signal_scale(const std::vector<Series> &data) {
    double scale = 0.0;
    for (const auto &s : data) {
        for (double v : s.y) {
            scale = std::max(scale, std::abs(v));
        }
    }
    return scale;
}

std::vector<SineFit> fit_series(const std::vector<Series> &data, const FitOptions &opts) {
    if (data.empty()) {
        throw FitError("nothing to fit");
    }
    for (const auto &s : data) {
        if (s.t.size() != s.y.size()) {
            throw FitError("time and signal lengths differ");
        }
        if (s.t.size() < 2) {
            throw FitError("trace too short to fit");
        }
        for (size_t i = 0; i < s.t.size(); ++i) {
            if (!std::isfinite(s.t[i]) || !std::isfinite(s.y[i])) {
                throw FitError("trace contains non-finite values");
            }
            if (i > 0 && !(s.t[i] > s.t[i - 1])) {
                throw FitError("trace times must be strictly increasing");
            }
        }
    }
    if (opts.fixed_frequency && !(*opts.fixed_frequency > 0.0)) {
        throw FitError("fixed frequency must be positive");
    }

    double scale = std::max(signal_scale(data), std::numeric_limits<double>::min());
    double w0 = opts.fixed_frequency ? *opts.fixed_frequency : scan_frequency(data, opts.oversampling);

    Eigen::VectorXd lin(3 * data.size());
    bool any_oscillation = false;
    for (size_t j = 0; j < data.size(); ++j) {
        lin.segment<3>(3 * j) = linear_fit(data[j], w0, nullptr);
        if (std::hypot(lin(3 * j + 1), lin(3 * j + 2)) > 1e-10 * scale) {
            any_oscillation = true;
        }
    }

    // Without any oscillation the frequency and decay are unidentifiable.
    Layout layout{data.size(), !opts.fixed_frequency && any_oscillation, opts.fit_decay && any_oscillation};
    Model model{layout, w0};
    const size_t n = total_points(data);
    const size_t m = layout.size();
    if (n < m) {
        throw FitError("fewer points (" + std::to_string(n) + ") than parameters (" + std::to_string(m) + ")");
    }

    Eigen::VectorXd p(m);
    p.head(3 * data.size()) = lin;
    if (layout.free_frequency) {
        p(layout.frequency()) = w0;
    }
    if (layout.decay) {
        p(layout.gamma()) = 0.0;
    }

    double span = data.front().t.back() - data.front().t.front();
    Eigen::VectorXd pscale(m);
    for (size_t j = 0; j < data.size(); ++j) {
        pscale.segment<3>(3 * j).setConstant(scale);
    }
    if (layout.free_frequency) {
        pscale(layout.frequency()) = w0;
    }
    if (layout.decay) {
        pscale(layout.gamma()) = 1.0 / span;
    }

    Eigen::VectorXd r = residuals(model, data, p);
    double rss = r.squaredNorm();
    double lambda = 1e-3;
    bool converged = (layout.free_frequency || layout.decay) ? false : true;
    int iterations = 0;
    while (!converged && iterations < opts.max_iterations) {
        ++iterations;
        Eigen::MatrixXd jac = jacobian(model, data, p);
        Eigen::MatrixXd h = jac.transpose() * jac;
        Eigen::VectorXd g = jac.transpose() * r;
        Eigen::VectorXd diag = h.diagonal().cwiseMax(1e-30 * h.diagonal().maxCoeff());
        bool accepted = false;
        Eigen::VectorXd step;
        while (lambda < 1e16) {
            Eigen::MatrixXd a = h;
            a.diagonal() += lambda * diag;
            step = a.ldlt().solve(g);
            Eigen::VectorXd trial = p + step;
            Eigen::VectorXd r_trial = residuals(model, data, trial);
            double rss_trial = r_trial.squaredNorm();
            if (std::isfinite(rss_trial) && rss_trial <= rss) {
                p = trial;
                r = r_trial;
                rss = rss_trial;
                lambda = std::max(lambda / 10.0, 1e-12);
                accepted = true;
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted) {
            // No downhill step exists at working precision.
            converged = true;
            break;
        }
        bool small = true;
        for (size_t i = 0; i < m; ++i) {
            if (std::abs(step(i)) > opts.relative_tolerance * std::max(std::abs(p(i)), 1e-3 * pscale(i))) {
                small = false;
                break;
            }
        }
        converged = small;
    }

    // Standard errors from the Jacobian at the optimum.
    Eigen::MatrixXd jac = jacobian(model, data, p);
    double dof = static_cast<double>(n > m ? n - m : 1);
    double s2 = rss / dof;
    Eigen::MatrixXd cov = (jac.transpose() * jac).completeOrthogonalDecomposition().pseudoInverse() * s2;

    double w = model.frequency(p);
    double flip = 1.0;
    if (w < 0) {
        w = -w;
        flip = -1.0;
    }
    double gamma = model.gamma(p);

    std::vector<SineFit> fits;
    size_t k = 0;
    for (size_t j = 0; j < data.size(); ++j) {
        SineFit f;
        double o = p(3 * j);
        double c = p(3 * j + 1);
        double s = flip * p(3 * j + 2);
        double amp = std::hypot(c, s);
        f.offset = o;
        f.amplitude = amp;
        f.phase = wrap_two_pi(std::atan2(-s, c));
        f.frequency = w;
        f.converged = converged;
        f.iterations = iterations;
        f.phase_undefined = amp <= 1e-10 * scale;
        if (f.phase_undefined) {
            f.phase = 0.0;
        }
        if (layout.decay) {
            f.decay_time = 1.0 / gamma;
        }
        double vcc = cov(3 * j + 1, 3 * j + 1);
        double vss = cov(3 * j + 2, 3 * j + 2);
        double vcs = flip * cov(3 * j + 1, 3 * j + 2);
        f.errors.offset = std::sqrt(std::max(0.0, cov(3 * j, 3 * j)));
        if (amp > 0) {
            f.errors.amplitude = std::sqrt(std::max(0.0, (c * c * vcc + 2 * c * s * vcs + s * s * vss) / (amp * amp)));
            f.errors.phase =
                std::sqrt(std::max(0.0, (s * s * vcc - 2 * c * s * vcs + c * c * vss) / (amp * amp * amp * amp)));
        } else {
            f.errors.amplitude = std::sqrt(std::max(0.0, vcc + vss));
            f.errors.phase = std::numeric_limits<double>::infinity();
        }
        if (layout.free_frequency) {
            f.errors.frequency = std::sqrt(std::max(0.0, cov(layout.frequency(), layout.frequency())));
        }
        if (layout.decay) {
            f.errors.decay_time = std::sqrt(std::max(0.0, cov(layout.gamma(), layout.gamma()))) / (gamma * gamma);
        }
        double ss = r.segment(k, data[j].t.size()).squaredNorm();
        f.residual_rms = std::sqrt(ss / static_cast<double>(data[j].t.size()));
        k += data[j].t.size();
        fits.push_back(f);
    }
    return fits;
}

}  // namespace

double SineFit::evaluate(double t) const {
    double envelope = decay_time ? std::exp(-t / *decay_time) : 1.0;
    return offset + amplitude * std::cos(frequency * t + phase) * envelope;
}

std::pair<double, double> canonicalize_amplitude_phase(double amplitude, double phase) {
    if (amplitude < 0) {
        return {-amplitude, wrap_two_pi(phase + kPi)};
    }
    return {amplitude, wrap_two_pi(phase)};
}

SineFit fit_sine(std::span<const double> times, std::span<const double> signal, const FitOptions &opts) {
    return fit_series({Series{times, signal}}, opts).front();
}

SineFit fit_sine(const RabiTrace &trace, const FitOptions &opts) {
    return fit_sine(trace.times, trace.signal, opts);
}

std::vector<SineFit> fit_sine_shared(const std::vector<const RabiTrace *> &traces, const FitOptions &opts) {
    std::vector<Series> data;
    for (const RabiTrace *t : traces) {
        data.push_back(Series{t->times, t->signal});
    }
    return fit_series(data, opts);
}

}  // namespace rqst
