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

#include "aptdyn/hamiltonian.hpp"

#include <cmath>
#include <limits>

namespace aptdyn {

namespace {

void require_finite_params(const AnyonParams& params, const char* who) {
  if (!std::isfinite(params.phi) || !std::isfinite(params.r) ||
      !std::isfinite(params.theta) || !std::isfinite(params.r1) ||
      !std::isfinite(params.theta1))
    throw InvalidInput(std::string(who) + ": parameters must be finite");
}

// The PT-symmetric core with the phi phase stripped.
ComplexMatrix build_pt_core(const AnyonParams& params) {
  ComplexMatrix h(2, 2);
  h(0, 0) = params.r * std::exp(kImag * params.theta);
  h(0, 1) = params.r1 * std::exp(kImag * params.theta1);
  h(1, 0) = params.r1 * std::exp(-kImag * params.theta1);
  h(1, 1) = params.r * std::exp(-kImag * params.theta);
  return h;
}

}  // namespace

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::Unbroken: return "Unbroken";
    case Phase::Broken: return "Broken";
    case Phase::ExceptionalPoint: return "ExceptionalPoint";
  }
  return "?";
}

ComplexMatrix build_hamiltonian(const AnyonParams& params) {
  require_finite_params(params, "build_hamiltonian");
  return std::exp(-kImag * (params.phi / 2.0)) * build_pt_core(params);
}

SpectralInfo spectral_info(const AnyonParams& params) {
  require_finite_params(params, "spectral_info");
  SpectralInfo info;
  const double s = params.r * std::sin(params.theta);
  info.delta = params.r1 * params.r1 - s * s;
  info.p = std::cos(params.phi / 2.0);
  info.q = -std::sin(params.phi / 2.0);

  const Complex phase = std::exp(-kImag * (params.phi / 2.0));
  const Complex sqrt_delta = std::sqrt(Complex(info.delta, 0.0));
  const double rcos = params.r * std::cos(params.theta);
  info.e_plus = phase * (rcos + sqrt_delta);
  info.e_minus = phase * (rcos - sqrt_delta);

  if (info.delta >= 0.0) info.lambda = rcos + std::sqrt(info.delta);

  const double num = params.r1 * params.r1 + s * s;
  info.amp_ratio = (info.delta != 0.0)
                       ? num / std::abs(info.delta)
                       : std::numeric_limits<double>::infinity();

  if (info.delta > tol::exceptional_point)
    info.phase = Phase::Unbroken;
  else if (info.delta < -tol::exceptional_point)
    info.phase = Phase::Broken;
  else
    info.phase = Phase::ExceptionalPoint;
  return info;
}

double verify_anyonic_pt(const ComplexMatrix& h, double phi) {
  require_finite(h, "verify_anyonic_pt");
  if (h.rows() != 2 || h.cols() != 2)
    throw InvalidInput("verify_anyonic_pt: expected a 2x2 matrix");
  ComplexMatrix sigma_x(2, 2);
  sigma_x << 0, 1, 1, 0;
  const ComplexMatrix lhs = sigma_x * h.conjugate() * sigma_x;
  const ComplexMatrix rhs = std::exp(kImag * phi) * h;
  const double norm = h.norm();
  if (norm == 0.0) return 0.0;
  return (lhs - rhs).norm() / norm;
}

std::tuple<ComplexMatrix, ComplexMatrix, double, double> decompose_pt_apt(
    const AnyonParams& params) {
  require_finite_params(params, "decompose_pt_apt");
  const ComplexMatrix h_pt = build_pt_core(params);
  const ComplexMatrix h_apt = kImag * h_pt;
  return {h_pt, h_apt, std::cos(params.phi / 2.0), -std::sin(params.phi / 2.0)};
}

}  // namespace aptdyn
