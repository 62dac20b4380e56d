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

#ifndef APTDYN_HAMILTONIAN_HPP
#define APTDYN_HAMILTONIAN_HPP

#include <optional>
#include <tuple>

#include "aptdyn/core.hpp"

namespace aptdyn {

/// The five real parameters of the anyonic-PT symmetric family
///   H_phi = e^{-i phi/2} [[r e^{i theta}, r1 e^{i theta1}],
///                         [r1 e^{-i theta1}, r e^{-i theta}]].
/// Construction accepts phi anywhere in (-2pi, 2pi); analysis paths report
/// in the canonical window (-pi, 0].
struct AnyonParams {
  double phi = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double r1 = 0.0;
  double theta1 = 0.0;
};

enum class Phase { Unbroken, Broken, ExceptionalPoint };

const char* to_string(Phase phase);

/// Scalars derived from AnyonParams:
///   delta = r1^2 - r^2 sin^2(theta)   (sign selects the phase)
///   p = cos(phi/2), q = -sin(phi/2)
///   E+- = e^{-i phi/2} (r cos theta +- sqrt(delta))
///   lambda = r cos theta + sqrt(delta), defined for delta >= 0 only
///   amp_ratio = (r1^2 + r^2 sin^2 theta)/|delta|  (a for delta>0, b for delta<0)
struct SpectralInfo {
  double delta = 0.0;
  double p = 1.0;
  double q = 0.0;
  Complex e_plus;
  Complex e_minus;
  std::optional<double> lambda;
  double amp_ratio = 0.0;
  Phase phase = Phase::Unbroken;
};

/// Builds the 2x2 anyonic-PT symmetric matrix for the given parameters.
ComplexMatrix build_hamiltonian(const AnyonParams& params);

/// Derives all spectral scalars. For delta < 0 the square root is taken on
/// the principal branch, sqrt(delta) = i sqrt(-delta).
SpectralInfo spectral_info(const AnyonParams& params);

/// Residual of the defining symmetry (PT) H (PT)^{-1} = e^{i phi} H with
/// P = sigma_x and T = complex conjugation:
///   ||P conj(H) P - e^{i phi} H||_F / ||H||_F.
double verify_anyonic_pt(const ComplexMatrix& h, double phi);

/// Splits H_phi = p H_PT + q H_APT with H_APT = i H_PT.
/// Returns (H_PT, H_APT, p, q).
std::tuple<ComplexMatrix, ComplexMatrix, double, double> decompose_pt_apt(
    const AnyonParams& params);

}  // namespace aptdyn

#endif  // APTDYN_HAMILTONIAN_HPP
