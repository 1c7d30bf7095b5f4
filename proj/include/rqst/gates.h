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

#ifndef RQST_GATES_H
#define RQST_GATES_H

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "rqst/spin_core.h"

namespace rqst {

/// Electron-nuclear register |m_S, m_I> with m_S, m_I in {+1, 0, -1}.
/// m_S is the slow index: index = 3 (1 - m_S) + (1 - m_I), so |+1,+1> = 0,
/// |0,0> = 4 and |-1,-1> = 8.
inline constexpr int kHybridDim = 9;

struct HybridLevel {
    int m_s;
    int m_i;
    bool operator==(const HybridLevel &) const = default;
};

int hybrid_index(int m_s, int m_i);
HybridLevel hybrid_level(int index);
std::string hybrid_label(int index);

/// |m><m'| on a single spin-1 factor, using m labels directly.
ComplexMatrix spin1_outer(int m_ket, int m_bra);

enum class GateKind {
    kUnitary,
    kChannel,
    /// Non-unitary linear map M applied as M rho M^dagger. Only used for the
    /// literal U3 variant, never part of the default pipeline.
    kRawOperator,
};

class GateOp {
   public:
    static GateOp unitary(std::string name, ComplexMatrix u);
    static GateOp channel(std::string name, std::vector<ComplexMatrix> kraus);
    static GateOp raw_operator(std::string name, ComplexMatrix m);

    GateKind kind() const {
        return kind_;
    }
    const std::string &name() const {
        return name_;
    }
    int dim() const {
        return static_cast<int>(ops_.front().rows());
    }
    /// Unitary or raw matrix; throws for channels.
    const ComplexMatrix &matrix() const;
    const std::vector<ComplexMatrix> &kraus() const {
        return ops_;
    }

   private:
    GateOp(GateKind kind, std::string name, std::vector<ComplexMatrix> ops);

    GateKind kind_;
    std::string name_;
    std::vector<ComplexMatrix> ops_;
};

/// Either a ket or a density matrix. Invariants are not enforced here so that
/// non-physical operators can be characterized; use is_valid()/density().
class HybridState {
   public:
    explicit HybridState(PureState psi) : data_(psi.amplitudes()) {
    }
    explicit HybridState(const DensityMatrix &rho) : data_(rho.matrix()) {
    }
    static HybridState from_raw_matrix(ComplexMatrix m);

    bool is_pure() const {
        return std::holds_alternative<ComplexVector>(data_);
    }
    int dim() const;
    /// Density-matrix form without validation.
    ComplexMatrix matrix() const;
    /// Validated density matrix; throws InvalidStateError when unphysical.
    DensityMatrix density() const;
    /// Validated ket; throws RepresentationError for mixed representation.
    PureState ket() const;
    double population(int index) const;
    double trace() const;
    bool is_valid() const;

   private:
    HybridState() = default;
    std::variant<ComplexVector, ComplexMatrix> data_;
};

enum class Representation { kAny, kKeepPure };

HybridState apply(const GateOp &gate, const HybridState &state, Representation rep = Representation::kAny);

/// exp(-i angle (cos(phase) I_x + sin(phase) I_y)) on span{level_a, level_b},
/// identity elsewhere. level_a plays |0> and level_b plays |1> of the
/// two-level spin operators I = sigma / 2.
GateOp subspace_rotation(int level_a, int level_b, double phase, double angle, int dim = kHybridDim);

/// Which form of U3 to build.
enum class U3Variant {
    /// |0><0| x I3 replaces the duplicated |-1><-1| x I3 term; unitary.
    kCorrected,
    /// |-1><-1| x I3 counted twice and no m_S = 0 block; not unitary.
    kLiteral,
};

/// Optical pumping of the electron to m_S = 0 with the nuclear state kept:
/// Kraus set {|0><k| x I3 : k in {+1, 0, -1}}.
GateOp laser_reset();

/// U1..U5 of the initialisation circuit. U5 is laser_reset().
std::array<GateOp, 5> build_init_gates(U3Variant variant = U3Variant::kCorrected);

struct VGates {
    GateOp v1;
    GateOp v2;
    GateOp v3;
    GateOp v4;
};

/// Rotation axis phase used by V2 so that V2 |-1,0> equals
/// cos(theta/2)|-1,0> + e^{i phi} sin(theta/2)|-1,1> exactly.
double preparation_axis_phase(double phi);

/// V1 and V4: electron 0 <-> -1 flip conditioned on nucleus m_I = 0.
/// V2 prepares the nuclear state (theta, phi) inside m_S = -1.
/// V3 is the Rabi rotation by rabi_angle about axis phase zeta inside m_S = -1.
VGates build_v_gates(double theta, double phi, double rabi_angle, double zeta = 0.0);

}  // namespace rqst

#endif
