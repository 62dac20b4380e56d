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

#include "aptdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aptdyn/linalg.hpp"

namespace aptdyn {

// ---------------------------------------------------------------- StateSpec

StateSpec StateSpec::maximally_mixed() {
  StateSpec s;
  s.kind_ = Kind::MaximallyMixed;
  return s;
}

StateSpec StateSpec::pure(const ComplexVector& amplitudes) {
  if (amplitudes.size() < 1 || !amplitudes.allFinite())
    throw InvalidInput("StateSpec::pure: amplitudes must be finite and non-empty");
  const double norm = amplitudes.norm();
  if (norm <= 0.0)
    throw InvalidInput("StateSpec::pure: zero state vector");
  StateSpec s;
  s.kind_ = Kind::PureVector;
  s.amplitudes_ = amplitudes / norm;
  return s;
}

StateSpec StateSpec::basis(Eigen::Index index, Eigen::Index dim) {
  if (dim < 1 || index < 0 || index >= dim)
    throw InvalidInput("StateSpec::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return pure(v);
}

StateSpec StateSpec::matrix(const ComplexMatrix& omega0) {
  require_hermitian(omega0, "StateSpec::matrix");
  const HermitianEigenSystem es = herm_eig(omega0);
  const double scale = std::max(1.0, es.eigenvalues.cwiseAbs().maxCoeff());
  if (es.eigenvalues.minCoeff() < -tol::hermiticity * scale)
    throw InvalidInput("StateSpec::matrix: Omega(0) must be positive semidefinite");
  const double trace = omega0.trace().real();
  if (trace <= 0.0 || trace > 1.0 + tol::hermiticity)
    throw InvalidInput("StateSpec::matrix: need 0 < Tr Omega(0) <= 1");
  StateSpec s;
  s.kind_ = Kind::Matrix;
  s.matrix_ = omega0;
  return s;
}

ComplexMatrix StateSpec::omega0(Eigen::Index dim) const {
  switch (kind_) {
    case Kind::MaximallyMixed:
      return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    case Kind::PureVector:
      if (amplitudes_.size() != dim)
        throw InvalidInput("StateSpec: pure state dimension mismatch");
      return amplitudes_ * amplitudes_.adjoint();
    case Kind::Matrix:
      if (matrix_.rows() != dim)
        throw InvalidInput("StateSpec: matrix dimension mismatch");
      return matrix_;
  }
  throw InvalidInput("StateSpec: unknown kind");
}

bool StateSpec::operator==(const StateSpec& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::MaximallyMixed: return true;
    case Kind::PureVector:
      return amplitudes_.size() == other.amplitudes_.size() &&
             amplitudes_ == other.amplitudes_;
    case Kind::Matrix:
      return matrix_.rows() == other.matrix_.rows() && matrix_ == other.matrix_;
  }
  return false;
}

const std::vector<double>* Trajectory::find_series(const std::string& name) const {
  for (const auto& [key, series] : observables)
    if (key == name) return &series;
  return nullptr;
}

// -------------------------------------------------------------- propagators

ComplexMatrix propagator_numeric(const ComplexMatrix& h, double t) {
  if (!std::isfinite(t)) throw InvalidInput("propagator_numeric: t must be finite");
  return expm(-kImag * t * h);
}

namespace {

// Traceless part of the PT core; M^2 = delta I.
ComplexMatrix anyon_m_matrix(const AnyonParams& params) {
  ComplexMatrix m(2, 2);
  const Complex irs = kImag * (params.r * std::sin(params.theta));
  m(0, 0) = irs;
  m(0, 1) = params.r1 * std::exp(kImag * params.theta1);
  m(1, 0) = params.r1 * std::exp(-kImag * params.theta1);
  m(1, 1) = -irs;
  return m;
}

// Analytic eigenvalue bounds of a 2x2 Hermitian matrix; falls back to the
// solver for larger dimensions.
double min_eigenvalue_hermitian(const ComplexMatrix& w) {
  if (w.rows() == 2) {
    const double mean = 0.5 * (w(0, 0).real() + w(1, 1).real());
    const double d = 0.5 * (w(0, 0).real() - w(1, 1).real());
    return mean - std::sqrt(d * d + std::norm(w(0, 1)));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(w,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

ComplexMatrix propagator_closed(const AnyonParams& params, double t) {
  if (!std::isfinite(t)) throw InvalidInput("propagator_closed: t must be finite");
  const SpectralInfo info = spectral_info(params);
  const ComplexMatrix m = anyon_m_matrix(params);

  const ComplexMatrix m2 = m * m;
  const ComplexMatrix target = info.delta * ComplexMatrix::Identity(2, 2);
  if ((m2 - target).norm() > 1e-10 * std::max(1.0, std::abs(info.delta)))
    throw NumericDegradation("propagator_closed: M^2 != delta I");

  const Complex phase = std::exp(-kImag * (params.phi / 2.0));
  const Complex prefactor =
      std::exp(-kImag * t * phase * (params.r * std::cos(params.theta)));
  if (std::abs(info.delta) <= tol::exceptional_point) {
    return prefactor *
           (ComplexMatrix::Identity(2, 2) - kImag * t * phase * m);
  }
  const Complex sqrt_delta = std::sqrt(Complex(info.delta, 0.0));
  const Complex z = t * phase * sqrt_delta;
  return prefactor * (std::cos(z) * ComplexMatrix::Identity(2, 2) -
                      kImag * (std::sin(z) / sqrt_delta) * m);
}

// ---------------------------------------------------------------- evolution

ComplexMatrix evolve_with(const ComplexMatrix& omega0, const ComplexMatrix& u) {
  ComplexMatrix w = u * omega0 * u.adjoint();
  const double scale = w.norm();
  if ((w - w.adjoint()).norm() > 1e-10 * std::max(1.0, scale))
    throw NumericDegradation("evolve: Omega(t) lost Hermiticity");
  if (min_eigenvalue_hermitian(w) < -1e-10 * std::max(1.0, scale))
    throw NumericDegradation("evolve: Omega(t) lost positive semidefiniteness");
  return w;
}

ComplexMatrix evolve(const ComplexMatrix& omega0, const ComplexMatrix& h,
                     double t) {
  require_hermitian(omega0, "evolve");
  if (omega0.trace().real() <= 0.0)
    throw InvalidInput("evolve: Tr Omega(0) must be positive");
  return evolve_with(omega0, propagator_numeric(h, t));
}

ComplexMatrix normalize(const ComplexMatrix& omega) {
  require_hermitian(omega, "normalize");
  const double trace = omega.trace().real();
  if (trace <= tol::spectral_floor)
    throw NumericDegradation("normalize: trace vanished below numeric resolution");
  return omega / trace;
}

// -------------------------------------------------------------- trace laws

double trace_closed(const AnyonParams& params, double t) {
  if (!std::isfinite(t)) throw InvalidInput("trace_closed: t must be finite");
  const SpectralInfo info = spectral_info(params);
  if (std::abs(info.delta) <= tol::exceptional_point)
    throw InvalidInput(
        "trace_closed: exceptional-point band has no closed trace law; "
        "evolve numerically instead");
  const double rcos = params.r * std::cos(params.theta);
  const double envelope = std::exp(info.q * 2.0 * t * rcos);
  const double ratio = info.amp_ratio;
  if (info.delta > 0.0) {
    const double root = std::sqrt(info.delta);
    return envelope * (0.5 * (1.0 - ratio) * std::cos(2.0 * info.p * root * t) +
                       0.5 * (1.0 + ratio) * std::cosh(2.0 * info.q * root * t));
  }
  const double root = std::sqrt(-info.delta);
  return envelope * (0.5 * (1.0 + ratio) * std::cosh(2.0 * info.p * root * t) +
                     0.5 * (1.0 - ratio) * std::cos(2.0 * info.q * root * t));
}

double trace_asymptotic(const AnyonParams& params, double t) {
  const SpectralInfo info = spectral_info(params);
  if (info.delta <= tol::exceptional_point)
    throw InvalidInput("trace_asymptotic: requires delta > 0");
  return 0.25 * (1.0 + info.amp_ratio) *
         std::exp(2.0 * info.q * *info.lambda * t);
}

double logtrace_asymptotic(const ComplexMatrix& h, const ComplexVector& psi0,
                           double t) {
  require_square(h, "logtrace_asymptotic");
  require_finite(h, "logtrace_asymptotic");
  const Eigen::Index n = h.rows();
  if (n < 2)
    throw InvalidInput("logtrace_asymptotic: need at least two levels");
  if (psi0.size() != n)
    throw InvalidInput("logtrace_asymptotic: psi0 dimension mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw InvalidInput("logtrace_asymptotic: psi0 must be unit norm");

  ComplexVector values(n);
  ComplexMatrix vectors(n, n);
  if (n == 2) {
    const GeneralEigenSystem sys = general_eig_2x2(h);
    if (sys.defective)
      throw InvalidInput("logtrace_asymptotic: defective Hamiltonian unsupported");
    values = sys.eigenvalues;
    vectors = sys.eigenvectors;
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
      throw NumericDegradation("logtrace_asymptotic: eigensolver failed");
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
    for (Eigen::Index j = 0; j < n; ++j)
      vectors.col(j) /= vectors.col(j).norm();
  }

  // Expansion coefficients of psi0 in the self-normalized eigenbasis.
  const ComplexVector coeff = vectors.colPivHouseholderQr().solve(psi0);
  if ((vectors * coeff - psi0).norm() > 1e-8)
    throw InvalidInput(
        "logtrace_asymptotic: eigenbasis too ill-conditioned (near-defective)");

  // Rank modes by the imaginary part Gamma_n, descending.
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return values(a).imag() > values(b).imag();
  });
  const Eigen::Index m1 = order[0], m2 = order[1];

  const double gamma1 = values(m1).imag(), gamma2 = values(m2).imag();
  const double e1 = values(m1).real(), e2 = values(m2).real();
  const Complex c1 = coeff(m1), c2 = coeff(m2);
  const Complex overlap = vectors.col(m2).dot(vectors.col(m1));  // <phi2|phi1>

  const double direct = std::norm(c1) * std::exp(2.0 * gamma1 * t) +
                        std::norm(c2) * std::exp(2.0 * gamma2 * t);
  const Complex cross_amp =
      c1 * std::conj(c2) * std::exp(-kImag * (e1 - e2) * t) * overlap;
  const double cross = 2.0 * cross_amp.real() * std::exp((gamma1 + gamma2) * t);
  const double estimate = direct + cross;
  if (!(estimate > 0.0))
    throw NumericDegradation("logtrace_asymptotic: non-positive trace estimate");
  return -std::log(estimate);
}

// --------------------------------------------------------------- trajectory

Trajectory trajectory(const AnyonParams& params, const StateSpec& initial,
                      double t_max, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw InvalidInput("trajectory: dt must be positive");
  if (!(t_max >= 0.0) || !std::isfinite(t_max))
    throw InvalidInput("trajectory: t_max must be non-negative");
  const double steps = std::floor(t_max / dt + 1e-9);
  if (steps > 1e7)
    throw InvalidInput("trajectory: grid exceeds the 1e7 point guard");

  Trajectory traj;
  traj.params = params;
  traj.hamiltonian = build_hamiltonian(params);
  traj.closed_form =
      std::abs(spectral_info(params).delta) > tol::exceptional_point;

  const auto n = static_cast<size_t>(steps) + 1;
  const ComplexMatrix omega0 = initial.omega0(2);
  traj.times.resize(n);
  traj.omegas.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    traj.times[i] = t;
    const ComplexMatrix u = traj.closed_form
                                ? propagator_closed(params, t)
                                : propagator_numeric(traj.hamiltonian, t);
    traj.omegas[i] = evolve_with(omega0, u);
  }
  return traj;
}

}  // namespace aptdyn
