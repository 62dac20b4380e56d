// Copyright 2026 The aptdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APTDYN_CORE_HPP
#define APTDYN_CORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace aptdyn {

using Real = double;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

/// Tolerances shared across the library.
namespace tol {
/// Hermiticity residual accepted by spectral routines.
inline constexpr double hermiticity = 1e-10;
/// Spectral floor: eigenvalues at or below this magnitude count as zero
/// in entropy sums (the 0*ln 0 = 0 convention).
inline constexpr double spectral_floor = 1e-12;
/// Half-width of the exceptional-point band on delta.
inline constexpr double exceptional_point = 1e-9;
/// Dead band on q*lambda below which a trend counts as stable.
inline constexpr double pattern_deadband = 1e-9;
}  // namespace tol

/// Caller handed us something outside a contract: bad dimensions, non-finite
/// entries, violated preconditions. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The computation itself degraded past numeric resolution (vanishing trace,
/// lost Hermiticity, broken internal identity). Maps to CLI exit code 3.
class NumericDegradation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// ||H - H^dag||_F relative to max(1, ||H||_F).
inline double hermiticity_residual(const ComplexMatrix& h) {
  return (h - h.adjoint()).norm() / std::max(1.0, h.norm());
}

inline void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw InvalidInput(std::string(who) + ": matrix must be square, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

inline void require_finite(const ComplexMatrix& m, const char* who) {
  if (!m.allFinite())
    throw InvalidInput(std::string(who) + ": matrix has non-finite entries");
}

inline void require_hermitian(const ComplexMatrix& m, const char* who) {
  require_square(m, who);
  require_finite(m, who);
  if (hermiticity_residual(m) > tol::hermiticity)
    throw InvalidInput(std::string(who) + ": matrix is not Hermitian within tolerance");
}

}  // namespace aptdyn

#endif  // APTDYN_CORE_HPP
