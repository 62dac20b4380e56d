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

#ifndef APTDYN_LINALG_HPP
#define APTDYN_LINALG_HPP

#include <functional>

#include "aptdyn/core.hpp"

namespace aptdyn {

/// Eigensystem of a Hermitian matrix: real eigenvalues in ascending order,
/// unitary matrix of eigenvector columns.
struct HermitianEigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Eigensystem of a general (possibly non-normal) matrix. Right eigenvectors
/// are stored as columns, each normalized to unit Euclidean norm. At an
/// exceptional point the matrix is defective: both columns hold the single
/// surviving eigenvector and `defective` is set.
struct GeneralEigenSystem {
  ComplexVector eigenvalues;
  ComplexMatrix eigenvectors;
  bool defective = false;
};

/// Matrix exponential e^A by truncated Taylor series with scaling and
/// squaring. Scales so the induced 1-norm of A/2^s is at most 0.5 and
/// truncates once a term drops below 1e-18 in Frobenius norm.
ComplexMatrix expm(const ComplexMatrix& a);

/// Spectral decomposition of a Hermitian matrix. Throws InvalidInput if the
/// Hermiticity residual exceeds tol::hermiticity.
HermitianEigenSystem herm_eig(const ComplexMatrix& h);

/// Closed-form eigensystem of a 2x2 matrix from the characteristic
/// quadratic. eigenvalues[0] carries the +sqrt branch of the discriminant.
GeneralEigenSystem general_eig_2x2(const ComplexMatrix& a);

/// f applied to a Hermitian positive semidefinite matrix through its
/// spectrum: V diag(f(w)) V^dag. Eigenvalues negative within tolerance are
/// clamped to zero before f; genuinely negative spectra raise InvalidInput.
ComplexMatrix mat_fn_psd(const ComplexMatrix& omega,
                         const std::function<double(double)>& f);

/// |H| = sqrt(H^dag H) for Hermitian H, i.e. V diag(|w|) V^dag.
ComplexMatrix mat_abs(const ComplexMatrix& h);

}  // namespace aptdyn

#endif  // APTDYN_LINALG_HPP
