// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_NUMERIC_HPP
#define ENTANGLE_NUMERIC_HPP

#include <vector>

#include "entangle/types.hpp"

namespace entangle {

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending, eigenvectors the
/// orthonormal columns of `vectors` (phase-fixed: largest-modulus entry real
/// positive).
struct EigenSystem {
  RealVector values;
  Matrix vectors;
};

EigenSystem hermitian_eig(const Matrix& h, const TolerancePolicy& tol = {});

/// 'Unique' spectral form O = sum_k o_k P_k: strictly increasing distinct
/// eigenvalues with Hermitian idempotent, mutually orthogonal projectors
/// summing to the identity.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;

  Matrix reconstruct() const;
  Index dim() const { return projectors.empty() ? 0 : projectors.front().rows(); }

  /// Checks the type invariants; throws Error on violation.
  void validate(const TolerancePolicy& tol = {}) const;
};

/// Merges consecutive eigenvalues closer than eps_degeneracy into a single
/// projector. Grouping is absolute-gap based: the eigenvalues of interest are
/// probabilities in [0, 1].
SpectralDecomposition group_spectrum(const EigenSystem& sys, const TolerancePolicy& tol = {});

/// Hermitian PSD square root. Eigenvalues in [-eps_check, 0) are clamped to 0;
/// anything below -eps_check raises NotPSD.
Matrix psd_sqrt(const Matrix& rho, const TolerancePolicy& tol = {});

/// Inverse of psd_sqrt on the range of rho: eigen-inversion with eigenvalues
/// <= eps_rank treated as zero.
Matrix pinv_sqrt(const Matrix& rho, const TolerancePolicy& tol = {});

/// Orthogonal projector onto the span of eigenvectors with eigenvalue > eps_rank.
Matrix range_projector(const Matrix& rho, const TolerancePolicy& tol = {});

/// Thin SVD c = sum_i s_i left_i right_i^dagger with singular values
/// descending; values <= eps_rank are dropped entirely (they define the null
/// space). Left columns are phase-fixed, right columns carry the matching
/// phase so the reconstruction is unchanged.
struct Svd {
  Matrix left;
  RealVector singulars;
  Matrix right;

  Matrix reconstruct() const;
  Index rank() const { return singulars.size(); }
};

Svd svd(const Matrix& c, const TolerancePolicy& tol = {});

}  // namespace entangle

#endif  // ENTANGLE_NUMERIC_HPP
