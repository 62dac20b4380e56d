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

#include "aptdyn/linalg.hpp"

#include <cmath>

namespace aptdyn {

ComplexMatrix expm(const ComplexMatrix& a) {
  require_square(a, "expm");
  require_finite(a, "expm");
  const Eigen::Index n = a.rows();

  // Induced 1-norm (max column sum) controls the scaling step.
  double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  while (norm1 > 0.5 && squarings < 80) {
    norm1 *= 0.5;
    ++squarings;
  }

  const ComplexMatrix x = a / std::ldexp(1.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  ComplexMatrix sum = term;
  for (int k = 1; k <= 64; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

HermitianEigenSystem herm_eig(const ComplexMatrix& h) {
  require_hermitian(h, "herm_eig");
  // Symmetrize away the sub-tolerance residual so the decomposition is of
  // an exactly Hermitian matrix.
  const ComplexMatrix hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hs);
  if (solver.info() != Eigen::Success)
    throw NumericDegradation("herm_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Deterministic phase: rotate so the largest-magnitude component is real
// and non-negative.
void canonicalize_phase(Eigen::Ref<ComplexVector> v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const Complex pivot = v(imax);
  if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
}

// Unit kernel vector of the 2x2 matrix (a - lambda I), taken from the row
// with the larger norm; ties break to the first row.
ComplexVector kernel_vector_2x2(const ComplexMatrix& a, Complex lambda) {
  const Complex r0a = a(0, 0) - lambda, r0b = a(0, 1);
  const Complex r1a = a(1, 0), r1b = a(1, 1) - lambda;
  const double n0 = std::norm(r0a) + std::norm(r0b);
  const double n1 = std::norm(r1a) + std::norm(r1b);
  ComplexVector v(2);
  if (n0 >= n1)
    v << r0b, -r0a;
  else
    v << -r1b, r1a;
  const double nv = v.norm();
  if (nv == 0.0) {
    v << 1.0, 0.0;  // zero row: any vector is in the kernel
  } else {
    v /= nv;
  }
  canonicalize_phase(v);
  return v;
}

}  // namespace

GeneralEigenSystem general_eig_2x2(const ComplexMatrix& a) {
  require_finite(a, "general_eig_2x2");
  if (a.rows() != 2 || a.cols() != 2)
    throw InvalidInput("general_eig_2x2: expected a 2x2 matrix");

  const double scale = a.norm();
  const Complex mean = 0.5 * (a(0, 0) + a(1, 1));
  const Complex disc =
      0.25 * (a(0, 0) - a(1, 1)) * (a(0, 0) - a(1, 1)) + a(0, 1) * a(1, 0);
  const Complex root = std::sqrt(disc);

  GeneralEigenSystem sys;
  sys.eigenvalues.resize(2);
  sys.eigenvectors.resize(2, 2);
  sys.eigenvalues << mean + root, mean - root;

  const double traceless = (a - mean * ComplexMatrix::Identity(2, 2)).norm();
  if (traceless <= 1e-14 * std::max(1.0, scale)) {
    // Scalar matrix: degenerate but not defective.
    sys.eigenvectors.setIdentity();
    return sys;
  }
  if (std::abs(disc) <= tol::exceptional_point * std::max(1.0, scale * scale)) {
    // Exceptional point: eigenvalues and eigenvectors coalesce.
    sys.defective = true;
    const ComplexVector v = kernel_vector_2x2(a, mean);
    sys.eigenvectors.col(0) = v;
    sys.eigenvectors.col(1) = v;
    return sys;
  }
  sys.eigenvectors.col(0) = kernel_vector_2x2(a, sys.eigenvalues(0));
  sys.eigenvectors.col(1) = kernel_vector_2x2(a, sys.eigenvalues(1));
  return sys;
}

ComplexMatrix mat_fn_psd(const ComplexMatrix& omega,
                         const std::function<double(double)>& f) {
  const HermitianEigenSystem es = herm_eig(omega);
  const double scale = std::max(1.0, es.eigenvalues.cwiseAbs().maxCoeff());
  RealVector w = es.eigenvalues;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -tol::spectral_floor * scale)
      throw InvalidInput("mat_fn_psd: matrix is not positive semidefinite");
    w(i) = f(std::max(w(i), 0.0));
  }
  return es.eigenvectors * w.asDiagonal() *
         es.eigenvectors.adjoint();
}

ComplexMatrix mat_abs(const ComplexMatrix& h) {
  const HermitianEigenSystem es = herm_eig(h);
  return es.eigenvectors * es.eigenvalues.cwiseAbs().asDiagonal() *
         es.eigenvectors.adjoint();
}

}  // namespace aptdyn
