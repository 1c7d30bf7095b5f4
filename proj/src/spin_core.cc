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

#include "rqst/spin_core.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace rqst {

double wrap_two_pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

double wrap_pi(double angle) {
    double r = wrap_two_pi(angle);
    return r > kPi ? r - kTwoPi : r;
}

double angular_distance(double a, double b) {
    return std::abs(wrap_pi(a - b));
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw DimensionError("pure state needs at least one amplitude");
    }
    if (!amplitudes_.allFinite()) {
        throw InvalidStateError("pure state has non-finite amplitudes");
    }
    double n = amplitudes_.norm();
    if (std::abs(n - 1.0) > kTol.ket_norm) {
        std::ostringstream msg;
        msg << "pure state norm " << n << " differs from 1";
        throw InvalidStateError(msg.str());
    }
}

PureState PureState::basis(int dim, int index) {
    if (index < 0 || index >= dim) {
        throw DimensionError("basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(index) = 1.0;
    return PureState(std::move(v));
}

PureState PureState::from_angles(double theta, double phi) {
    ComplexVector v(2);
    v(0) = std::cos(theta / 2);
    v(1) = std::polar(std::sin(theta / 2), phi);
    return PureState(std::move(v));
}

DensityMatrix PureState::projector() const {
    return DensityMatrix(amplitudes_ * amplitudes_.adjoint());
}

std::string density_matrix_violation(const ComplexMatrix &m) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        return "matrix is not square";
    }
    if (!m.allFinite()) {
        return "matrix has non-finite entries";
    }
    double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kTol.hermitian) {
        return "matrix is not Hermitian (deviation " + std::to_string(herm) + ")";
    }
    Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0)) > kTol.trace) {
        std::ostringstream msg;
        msg << "trace " << tr.real() << " differs from 1";
        return msg.str();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m, Eigen::EigenvaluesOnly);
    double lo = eig.eigenvalues().minCoeff();
    if (lo < kTol.min_eigenvalue) {
        return "matrix has negative eigenvalue " + std::to_string(lo);
    }
    return {};
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    std::string why = density_matrix_violation(m_);
    if (!why.empty()) {
        throw InvalidStateError("invalid density matrix: " + why);
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis(int dim, int index) {
    return PureState::basis(dim, index).projector();
}

double BlochVector::norm() const {
    return std::sqrt(nx * nx + ny * ny + nz * nz);
}

BlochVector BlochVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw DomainError("cannot normalize a zero Bloch vector");
    }
    return {nx / n, ny / n, nz / n};
}

double BlochVector::distance(const BlochVector &o) const {
    return std::sqrt((nx - o.nx) * (nx - o.nx) + (ny - o.ny) * (ny - o.ny) + (nz - o.nz) * (nz - o.nz));
}

ComplexMatrix identity(int dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

DensityMatrix bloch_to_density(const BlochVector &v) {
    if (!(v.norm() <= 1.0 + kTol.bloch_norm)) {
        throw InvalidStateError("Bloch vector lies outside the unit ball");
    }
    ComplexMatrix m = 0.5 * (identity(2) + v.nx * pauli_x() + v.ny * pauli_y() + v.nz * pauli_z());
    return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw DimensionError("Bloch vectors exist only for 2-level states");
    }
    const ComplexMatrix &m = rho.matrix();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

BlochVector angles_to_bloch(const StateAngles &a) {
    return {std::sin(a.theta) * std::cos(a.phi), std::sin(a.theta) * std::sin(a.phi), std::cos(a.theta)};
}

AngleConversion bloch_to_angles(const BlochVector &v) {
    if (std::abs(v.norm() - 1.0) > kTol.pure_angles) {
        throw DomainError("angles are defined only for unit Bloch vectors");
    }
    double rho = std::hypot(v.nx, v.ny);
    AngleConversion out;
    out.angles.theta = std::atan2(rho, v.nz);
    if (rho <= 1e-14) {
        out.angles.phi = 0.0;
        out.phi_undefined = true;
    } else {
        out.angles.phi = wrap_two_pi(std::atan2(v.ny, v.nx));
    }
    return out;
}

StateAngles single_arctan_angles(const BlochVector &v) {
    double sgn_y = v.ny > 0 ? 1.0 : (v.ny < 0 ? -1.0 : 0.0);
    StateAngles a;
    a.theta = std::atan(std::hypot(v.nx, v.ny) / v.nz) + kPi / 2;
    a.phi = kPi - std::atan(v.nx / v.ny) - sgn_y * kPi / 2;
    return a;
}

double fidelity(const DensityMatrix &rho_th, const DensityMatrix &rho_exp) {
    if (rho_th.dim() != rho_exp.dim()) {
        throw DimensionError("fidelity of states with different dimensions");
    }
    const ComplexMatrix &a = rho_th.matrix();
    const ComplexMatrix &b = rho_exp.matrix();
    double overlap = (a * b).trace().real();
    double norm = std::sqrt((a * a).trace().real() * (b * b).trace().real());
    double f = overlap / norm;
    return std::clamp(f, 0.0, 1.0);
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    return a.adjoint();
}

Complex trace(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("trace of a non-square matrix");
    }
    return a.trace();
}

double purity(const DensityMatrix &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

PureState apply_unitary(const ComplexMatrix &u, const PureState &psi) {
    if (u.cols() != psi.dim() || u.rows() != psi.dim()) {
        throw DimensionError("unitary and state dimensions differ");
    }
    return PureState(u * psi.amplitudes());
}

DensityMatrix apply_unitary(const ComplexMatrix &u, const DensityMatrix &rho) {
    if (u.cols() != rho.dim() || u.rows() != rho.dim()) {
        throw DimensionError("unitary and state dimensions differ");
    }
    ComplexMatrix out = u * rho.matrix() * u.adjoint();
    // Remove rounding asymmetry so repeated application stays Hermitian.
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

double unitarity_error(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        throw DimensionError("unitarity check of a non-square matrix");
    }
    return (u.adjoint() * u - identity(static_cast<int>(u.rows()))).cwiseAbs().maxCoeff();
}

}  // namespace rqst
