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

#include "rqst/gates.h"

#include <cmath>
#include <sstream>

namespace rqst {

namespace {

int spin1_slot(int m) {
    if (m < -1 || m > 1) {
        throw DomainError("spin-1 projection must be -1, 0 or +1");
    }
    return 1 - m;
}

ComplexMatrix on_electron(const ComplexMatrix &e) {
    return tensor(e, identity(3));
}

ComplexMatrix on_nucleus(const ComplexMatrix &n) {
    return tensor(identity(3), n);
}

// |m_a><m_b| + |m_b><m_a| + |m_c><m_c| for {m_a, m_b, m_c} = {+1, 0, -1}.
ComplexMatrix spin1_swap(int m_a, int m_b) {
    int m_c = -(m_a + m_b);
    return spin1_outer(m_a, m_b) + spin1_outer(m_b, m_a) + spin1_outer(m_c, m_c);
}

}  // namespace

int hybrid_index(int m_s, int m_i) {
    return 3 * spin1_slot(m_s) + spin1_slot(m_i);
}

HybridLevel hybrid_level(int index) {
    if (index < 0 || index >= kHybridDim) {
        throw DimensionError("hybrid index out of range");
    }
    return {1 - index / 3, 1 - index % 3};
}

std::string hybrid_label(int index) {
    HybridLevel l = hybrid_level(index);
    std::ostringstream out;
    out << '|' << l.m_s << ',' << l.m_i << '>';
    return out.str();
}

ComplexMatrix spin1_outer(int m_ket, int m_bra) {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(spin1_slot(m_ket), spin1_slot(m_bra)) = 1.0;
    return m;
}

GateOp::GateOp(GateKind kind, std::string name, std::vector<ComplexMatrix> ops)
    : kind_(kind), name_(std::move(name)), ops_(std::move(ops)) {
}

GateOp GateOp::unitary(std::string name, ComplexMatrix u) {
    double err = unitarity_error(u);
    if (err > kTol.unitarity) {
        throw InvalidStateError(name + " is not unitary (deviation " + std::to_string(err) + ")");
    }
    return GateOp(GateKind::kUnitary, std::move(name), {std::move(u)});
}

GateOp GateOp::channel(std::string name, std::vector<ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw DimensionError(name + ": channel needs at least one Kraus operator");
    }
    Eigen::Index d = kraus.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &k : kraus) {
        if (k.rows() != d || k.cols() != d) {
            throw DimensionError(name + ": Kraus operators differ in dimension");
        }
        sum += k.adjoint() * k;
    }
    double err = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err > kTol.unitarity) {
        throw InvalidStateError(name + " is not trace preserving (deviation " + std::to_string(err) + ")");
    }
    return GateOp(GateKind::kChannel, std::move(name), std::move(kraus));
}

GateOp GateOp::raw_operator(std::string name, ComplexMatrix m) {
    if (m.rows() != m.cols()) {
        throw DimensionError(name + ": operator is not square");
    }
    return GateOp(GateKind::kRawOperator, std::move(name), {std::move(m)});
}

const ComplexMatrix &GateOp::matrix() const {
    if (kind_ == GateKind::kChannel) {
        throw RepresentationError(name_ + " is a channel and has no single matrix");
    }
    return ops_.front();
}

HybridState HybridState::from_raw_matrix(ComplexMatrix m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("state matrix is not square");
    }
    HybridState s;
    s.data_ = std::move(m);
    return s;
}

int HybridState::dim() const {
    return std::visit([](const auto &d) { return static_cast<int>(d.rows()); }, data_);
}

ComplexMatrix HybridState::matrix() const {
    if (is_pure()) {
        const auto &v = std::get<ComplexVector>(data_);
        return v * v.adjoint();
    }
    return std::get<ComplexMatrix>(data_);
}

DensityMatrix HybridState::density() const {
    return DensityMatrix(matrix());
}

PureState HybridState::ket() const {
    if (!is_pure()) {
        throw RepresentationError("state is held as a density matrix");
    }
    return PureState(std::get<ComplexVector>(data_));
}

double HybridState::population(int index) const {
    if (is_pure()) {
        return std::norm(std::get<ComplexVector>(data_)(index));
    }
    return std::get<ComplexMatrix>(data_)(index, index).real();
}

double HybridState::trace() const {
    if (is_pure()) {
        return std::get<ComplexVector>(data_).squaredNorm();
    }
    return std::get<ComplexMatrix>(data_).trace().real();
}

bool HybridState::is_valid() const {
    if (is_pure()) {
        const auto &v = std::get<ComplexVector>(data_);
        return v.allFinite() && std::abs(v.norm() - 1.0) <= kTol.ket_norm;
    }
    return density_matrix_violation(std::get<ComplexMatrix>(data_)).empty();
}

HybridState apply(const GateOp &gate, const HybridState &state, Representation rep) {
    if (gate.dim() != state.dim()) {
        throw DimensionError("gate " + gate.name() + " has dimension " + std::to_string(gate.dim()) +
                             " but the state has dimension " + std::to_string(state.dim()));
    }
    if (gate.kind() == GateKind::kChannel) {
        if (rep == Representation::kKeepPure) {
            throw RepresentationError("channel " + gate.name() + " cannot keep a pure-state representation");
        }
        ComplexMatrix rho = state.matrix();
        ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
        for (const auto &k : gate.kraus()) {
            out += k * rho * k.adjoint();
        }
        return HybridState::from_raw_matrix(0.5 * (out + out.adjoint()));
    }
    const ComplexMatrix &u = gate.matrix();
    if (state.is_pure()) {
        ComplexVector v = u * state.ket().amplitudes();
        if (gate.kind() == GateKind::kUnitary) {
            return HybridState(PureState(std::move(v)));
        }
        return HybridState::from_raw_matrix(v * v.adjoint());
    }
    ComplexMatrix out = u * state.matrix() * u.adjoint();
    return HybridState::from_raw_matrix(0.5 * (out + out.adjoint()));
}

GateOp subspace_rotation(int level_a, int level_b, double phase, double angle, int dim) {
    if (level_a == level_b) {
        throw DomainError("subspace rotation needs two distinct levels");
    }
    if (level_a < 0 || level_b < 0 || level_a >= dim || level_b >= dim) {
        throw DimensionError("subspace rotation level out of range");
    }
    // exp(-i angle n.sigma / 2) = cos(angle/2) I - i sin(angle/2) n.sigma
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Complex off_ab = Complex(0, -1) * s * std::polar(1.0, -phase);
    Complex off_ba = Complex(0, -1) * s * std::polar(1.0, phase);
    ComplexMatrix u = identity(dim);
    u(level_a, level_a) = c;
    u(level_b, level_b) = c;
    u(level_a, level_b) = off_ab;
    u(level_b, level_a) = off_ba;
    std::ostringstream name;
    name << "R[" << level_a << ',' << level_b << "](phase=" << phase << ",angle=" << angle << ')';
    return GateOp::unitary(name.str(), std::move(u));
}

GateOp laser_reset() {
    std::vector<ComplexMatrix> kraus;
    for (int m : {1, 0, -1}) {
        kraus.push_back(on_electron(spin1_outer(0, m)));
    }
    return GateOp::channel("U5", std::move(kraus));
}

std::array<GateOp, 5> build_init_gates(U3Variant variant) {
    ComplexMatrix u1 = on_nucleus(spin1_outer(0, 0)) + on_nucleus(spin1_outer(1, 1)) +
                       tensor(spin1_swap(1, 0), spin1_outer(-1, -1));
    ComplexMatrix u2 = on_nucleus(spin1_outer(0, 0)) + on_nucleus(spin1_outer(-1, -1)) +
                       tensor(spin1_swap(-1, 0), spin1_outer(1, 1));
    ComplexMatrix u3_tail = tensor(spin1_outer(1, 1), spin1_swap(0, -1));
    ComplexMatrix u4 = on_electron(spin1_outer(1, 1)) + on_electron(spin1_outer(0, 0)) +
                       tensor(spin1_outer(-1, -1), spin1_swap(0, 1));

    GateOp g3 = variant == U3Variant::kCorrected
                    ? GateOp::unitary("U3", on_electron(spin1_outer(-1, -1)) + on_electron(spin1_outer(0, 0)) + u3_tail)
                    : GateOp::raw_operator("U3(literal)", on_electron(spin1_outer(-1, -1)) +
                                                              on_electron(spin1_outer(-1, -1)) + u3_tail);
    return {GateOp::unitary("U1", std::move(u1)), GateOp::unitary("U2", std::move(u2)), std::move(g3),
            GateOp::unitary("U4", std::move(u4)), laser_reset()};
}

double preparation_axis_phase(double phi) {
    return phi + kPi / 2;
}

VGates build_v_gates(double theta, double phi, double rabi_angle, double zeta) {
    ComplexMatrix flip = tensor(spin1_swap(-1, 0), spin1_outer(0, 0)) + on_nucleus(spin1_outer(1, 1)) +
                         on_nucleus(spin1_outer(-1, -1));
    int lo = hybrid_index(-1, 0);
    int hi = hybrid_index(-1, 1);
    GateOp v2 = subspace_rotation(lo, hi, preparation_axis_phase(phi), theta);
    GateOp v3 = subspace_rotation(lo, hi, zeta, rabi_angle);
    return {GateOp::unitary("V1", flip), GateOp::unitary("V2", v2.matrix()), GateOp::unitary("V3", v3.matrix()),
            GateOp::unitary("V4", flip)};
}

}  // namespace rqst
