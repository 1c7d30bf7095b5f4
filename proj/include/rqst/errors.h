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

#ifndef RQST_ERRORS_H
#define RQST_ERRORS_H

#include <stdexcept>
#include <string>

namespace rqst {

/// Numeric tolerances shared by every module. Adjust here, nowhere else.
struct Tolerances {
    double hermitian = 1e-12;
    double trace = 1e-12;
    double min_eigenvalue = -1e-10;
    double ket_norm = 1e-12;
    double bloch_norm = 1e-9;
    double pure_angles = 1e-6;
    double unitarity = 1e-12;
    double amplitude_clamp = 1e-6;
};

inline constexpr Tolerances kTol{};

struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RepresentationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Amplitude triple that does not fit on the Bloch sphere (drift or misfit).
struct InconsistentAmplitudesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Phase data that cannot pin down the named Bloch coordinate.
struct AmbiguousStateError : std::runtime_error {
    AmbiguousStateError(const std::string &coordinate, const std::string &why)
        : std::runtime_error("ambiguous state: " + coordinate + " is undetermined (" + why + ")"),
          coordinate(coordinate) {
    }
    std::string coordinate;
};

}  // namespace rqst

#endif
