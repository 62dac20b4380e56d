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

#ifndef APTDYN_DYNAMICS_HPP
#define APTDYN_DYNAMICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "aptdyn/hamiltonian.hpp"

namespace aptdyn {

/// Initial condition for the non-unitary evolution. The realized Omega(0)
/// is always Hermitian positive semidefinite with 0 < Tr <= 1.
class StateSpec {
 public:
  enum class Kind { MaximallyMixed, PureVector, Matrix };

  /// Omega(0) = I/dim.
  static StateSpec maximally_mixed();
  /// Omega(0) = |psi><psi|; amplitudes are normalized, zero vectors rejected.
  static StateSpec pure(const ComplexVector& amplitudes);
  /// Computational basis ket |index> in dimension dim.
  static StateSpec basis(Eigen::Index index, Eigen::Index dim = 2);
  /// Arbitrary Hermitian PSD Omega(0) with 0 < Tr <= 1.
  static StateSpec matrix(const ComplexMatrix& omega0);

  Kind kind() const { return kind_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  /// Realizes Omega(0) at the given dimension. Dimension-bound kinds
  /// (PureVector, Matrix) must match `dim`.
  ComplexMatrix omega0(Eigen::Index dim = 2) const;

  bool operator==(const StateSpec& other) const;

 private:
  StateSpec() = default;
  Kind kind_ = Kind::MaximallyMixed;
  ComplexVector amplitudes_;
  ComplexMatrix matrix_;
};

/// A time grid with the evolved non-normalized density matrices and the
/// observable series filled in by the entropy layer.
struct Trajectory {
  AnyonParams params;
  ComplexMatrix hamiltonian;
  bool closed_form = false;  // which propagator path produced the omegas
  std::vector<double> times;
  std::vector<ComplexMatrix> omegas;
  std::vector<std::pair<std::string, std::vector<double>>> observables;

  const std::vector<double>* find_series(const std::string& name) const;
};

/// U(t) = e^{-i H t} by the series exponential.
ComplexMatrix propagator_numeric(const ComplexMatrix& h, double t);

/// Closed-form U(t) for H_phi. Away from the exceptional-point band this is
///   e^{-i t e^{-i phi/2} r cos theta} (cos(z) I - i sin(z)/sqrt(delta) M),
/// z = t e^{-i phi/2} sqrt(delta); inside the band the linear EP form
///   e^{-i t e^{-i phi/2} r cos theta} (I - i t e^{-i phi/2} M),
/// with M the traceless part of the PT core (M^2 = delta I, verified).
ComplexMatrix propagator_closed(const AnyonParams& params, double t);

/// Omega(t) = U Omega(0) U^dag for a precomputed propagator. Asserts the
/// result stays Hermitian PSD within 1e-10 of its scale.
ComplexMatrix evolve_with(const ComplexMatrix& omega0, const ComplexMatrix& u);

/// Omega(t) = e^{-iHt} Omega(0) e^{iH^dag t}.
ComplexMatrix evolve(const ComplexMatrix& omega0, const ComplexMatrix& h, double t);

/// rho = Omega / Tr Omega. Throws NumericDegradation once the trace decays
/// below the spectral floor.
ComplexMatrix normalize(const ComplexMatrix& omega);

/// Closed-form Tr Omega(t) for Omega(0) = I/2:
///   delta>0: e^{2 q t r cos theta} [ (1-a)/2 cos(2 p sqrt(delta) t)
///                                  + (1+a)/2 cosh(2 q sqrt(delta) t) ]
///   delta<0: e^{2 q t r cos theta} [ (1+b)/2 cosh(2 p sqrt(-delta) t)
///                                  + (1-b)/2 cos(2 q sqrt(-delta) t) ]
/// Refuses the exceptional-point band |delta| <= tol::exceptional_point.
double trace_closed(const AnyonParams& params, double t);

/// Long-time estimate Tr Omega(t) ~ (1+a)/4 e^{2 q lambda t}; requires
/// delta > tol::exceptional_point. Accurate only for t >> 1/(2 q sqrt(delta)).
double trace_asymptotic(const AnyonParams& params, double t);

/// Two-dominant-mode estimate of -ln Tr Omega(t) for Omega(0)=|psi0><psi0|,
/// modes ranked by descending imaginary part of the eigenvalues. Exact on
/// two-level systems where the two modes span the space.
double logtrace_asymptotic(const ComplexMatrix& h, const ComplexVector& psi0,
                           double t);

/// Omega(t_i) on the uniform grid t_i = i dt, each point propagated from
/// t = 0 (never step-chained). Uses the closed-form propagator away from
/// the exceptional-point band and the series exponential inside it.
Trajectory trajectory(const AnyonParams& params, const StateSpec& initial,
                      double t_max, double dt);

}  // namespace aptdyn

#endif  // APTDYN_DYNAMICS_HPP
