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

#ifndef RQST_SPIN_CORE_H
#define RQST_SPIN_CORE_H

#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "rqst/errors.h"

namespace rqst {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double deg_to_rad(double deg) {
    return deg * kPi / 180.0;
}
inline double rad_to_deg(double rad) {
    return rad * 180.0 / kPi;
}

/// Maps an angle into [0, 2pi).
double wrap_two_pi(double angle);
/// Maps an angle into (-pi, pi].
double wrap_pi(double angle);
/// Shortest-arc distance between two angles, in [0, pi].
double angular_distance(double a, double b);

class DensityMatrix;

/// Normalized ket. Construction checks the norm.
class PureState {
   public:
    explicit PureState(ComplexVector amplitudes);

    static PureState basis(int dim, int index);
    /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
    static PureState from_angles(double theta, double phi);

    int dim() const {
        return static_cast<int>(amplitudes_.size());
    }
    const ComplexVector &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](int i) const {
        return amplitudes_(i);
    }
    DensityMatrix projector() const;

   private:
    ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Construction validates.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix maximally_mixed(int dim);
    static DensityMatrix basis(int dim, int index);

    int dim() const {
        return static_cast<int>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    Complex operator()(int r, int c) const {
        return m_(r, c);
    }
    double population(int index) const {
        return m_(index, index).real();
    }

   private:
    ComplexMatrix m_;
};

/// Reasons a matrix fails to be a density matrix; empty string when valid.
std::string density_matrix_violation(const ComplexMatrix &m);

struct BlochVector {
    double nx = 0.0;
    double ny = 0.0;
    double nz = 0.0;

    double norm() const;
    BlochVector normalized() const;
    double distance(const BlochVector &other) const;
    double dot(const BlochVector &other) const {
        return nx * other.nx + ny * other.ny + nz * other.nz;
    }
};

/// Polar angle theta in [0, pi], azimuth phi in [0, 2pi).
struct StateAngles {
    double theta = 0.0;
    double phi = 0.0;

    static StateAngles from_degrees(double theta_deg, double phi_deg) {
        return {deg_to_rad(theta_deg), deg_to_rad(phi_deg)};
    }
};

struct AngleConversion {
    StateAngles angles;
    bool phi_undefined = false;
};

// Pauli basis.
ComplexMatrix identity(int dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

DensityMatrix bloch_to_density(const BlochVector &v);
BlochVector density_to_bloch(const DensityMatrix &rho);

BlochVector angles_to_bloch(const StateAngles &a);
/// Quadrant-aware inverse of angles_to_bloch. Requires a unit vector.
AngleConversion bloch_to_angles(const BlochVector &v);

/// One-argument arctangent forms of the angle relations.
/// theta = atan(sqrt(nx^2+ny^2)/nz) + pi/2 (wrong away from the equator, kept
/// for comparison) and phi = pi - atan(nx/ny) - sgn(ny) pi/2 (singular at ny = 0).
StateAngles single_arctan_angles(const BlochVector &v);

/// Tr(a b) / sqrt(Tr(a^2) Tr(b^2)).
double fidelity(const DensityMatrix &rho_th, const DensityMatrix &rho_exp);

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);
double purity(const DensityMatrix &rho);
PureState apply_unitary(const ComplexMatrix &u, const PureState &psi);
DensityMatrix apply_unitary(const ComplexMatrix &u, const DensityMatrix &rho);

/// max_ij |U^dagger U - I|_ij.
double unitarity_error(const ComplexMatrix &u);

}  // namespace rqst

#endif
