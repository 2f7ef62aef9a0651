// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/numeric.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace entangle {

EigenSystem hermitian_eig(const Matrix& h, const TolerancePolicy& tol) {
  tol.validate();
  require_finite(h, "hermitian_eig");
  require_square(h, "hermitian_eig");
  const double asym = (h - h.adjoint()).norm();
  if (asym > tol.eps_check) {
    throw NotHermitian("hermitian_eig: ||H - H^dagger|| = " + std::to_string(asym));
  }
  // Symmetrize to kill roundoff before handing to the solver.
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  EigenSystem out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  for (Index k = 0; k < out.vectors.cols(); ++k) {
    Vector col = out.vectors.col(k);
    fix_phase(col);
    out.vectors.col(k) = col;
  }
  return out;
}

Matrix SpectralDecomposition::reconstruct() const {
  if (projectors.empty()) return Matrix();
  Matrix acc = Matrix::Zero(dim(), dim());
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    acc += eigenvalues[k] * projectors[k];
  }
  return acc;
}

void SpectralDecomposition::validate(const TolerancePolicy& tol) const {
  if (eigenvalues.size() != projectors.size()) {
    throw Error("SpectralDecomposition: eigenvalue/projector count mismatch");
  }
  if (projectors.empty()) throw Error("SpectralDecomposition: empty");
  const Index d = dim();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const Matrix& p = projectors[k];
    if (p.rows() != d || p.cols() != d) {
      throw DimensionMismatch("SpectralDecomposition: projector dimension mismatch");
    }
    if (k > 0 && !(eigenvalues[k] > eigenvalues[k - 1])) {
      throw Error("SpectralDecomposition: eigenvalues not strictly increasing");
    }
    if ((p * p - p).norm() > tol.eps_check) {
      throw Error("SpectralDecomposition: projector not idempotent");
    }
    if ((p - p.adjoint()).norm() > tol.eps_check) {
      throw Error("SpectralDecomposition: projector not Hermitian");
    }
    for (std::size_t k2 = k + 1; k2 < projectors.size(); ++k2) {
      if ((p * projectors[k2]).norm() > tol.eps_check) {
        throw Error("SpectralDecomposition: projectors not mutually orthogonal");
      }
    }
    sum += p;
  }
  if ((sum - Matrix::Identity(d, d)).norm() > tol.eps_check) {
    throw Error("SpectralDecomposition: projectors do not sum to the identity");
  }
}

SpectralDecomposition group_spectrum(const EigenSystem& sys, const TolerancePolicy& tol) {
  tol.validate();
  SpectralDecomposition out;
  const Index n = sys.values.size();
  if (n == 0) return out;
  const Index d = sys.vectors.rows();
  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && sys.values(stop) - sys.values(stop - 1) <= tol.eps_degeneracy) ++stop;
    Matrix proj = Matrix::Zero(d, d);
    double mean = 0.0;
    for (Index k = start; k < stop; ++k) {
      proj += sys.vectors.col(k) * sys.vectors.col(k).adjoint();
      mean += sys.values(k);
    }
    mean /= static_cast<double>(stop - start);
    out.eigenvalues.push_back(mean);
    out.projectors.push_back(0.5 * (proj + proj.adjoint()));
    start = stop;
  }
  return out;
}

namespace {

// Eigen-decomposes a PSD matrix, clamping eigenvalues in [-eps_check, 0) to 0.
EigenSystem psd_eig(const Matrix& rho, const TolerancePolicy& tol, const char* what) {
  EigenSystem sys = hermitian_eig(rho, tol);
  for (Index k = 0; k < sys.values.size(); ++k) {
    if (sys.values(k) < -tol.eps_check) {
      throw NotPSD(std::string(what) + ": eigenvalue " + std::to_string(sys.values(k)) +
                   " below -eps_check");
    }
    if (sys.values(k) < 0.0) sys.values(k) = 0.0;
  }
  return sys;
}

}  // namespace

Matrix psd_sqrt(const Matrix& rho, const TolerancePolicy& tol) {
  EigenSystem sys = psd_eig(rho, tol, "psd_sqrt");
  Matrix s = sys.vectors * sys.values.cwiseSqrt().asDiagonal() * sys.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

Matrix pinv_sqrt(const Matrix& rho, const TolerancePolicy& tol) {
  EigenSystem sys = psd_eig(rho, tol, "pinv_sqrt");
  RealVector inv = RealVector::Zero(sys.values.size());
  for (Index k = 0; k < sys.values.size(); ++k) {
    if (sys.values(k) > tol.eps_rank) inv(k) = 1.0 / std::sqrt(sys.values(k));
  }
  Matrix s = sys.vectors * inv.asDiagonal() * sys.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

Matrix range_projector(const Matrix& rho, const TolerancePolicy& tol) {
  EigenSystem sys = psd_eig(rho, tol, "range_projector");
  const Index d = rho.rows();
  Matrix q = Matrix::Zero(d, d);
  for (Index k = 0; k < sys.values.size(); ++k) {
    if (sys.values(k) > tol.eps_rank) q += sys.vectors.col(k) * sys.vectors.col(k).adjoint();
  }
  return 0.5 * (q + q.adjoint());
}

Matrix Svd::reconstruct() const {
  return left * singulars.asDiagonal() * right.adjoint();
}

Svd svd(const Matrix& c, const TolerancePolicy& tol) {
  tol.validate();
  require_finite(c, "svd");
  Eigen::JacobiSVD<Matrix> solver(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& all = solver.singularValues();
  Index rank = 0;
  while (rank < all.size() && all(rank) > tol.eps_rank) ++rank;
  Svd out;
  out.singulars = all.head(rank);
  out.left = solver.matrixU().leftCols(rank);
  out.right = solver.matrixV().leftCols(rank);
  for (Index k = 0; k < rank; ++k) {
    Vector col = out.left.col(k);
    const Complex factor = fix_phase(col);
    out.left.col(k) = col;
    out.right.col(k) *= factor;
  }
  return out;
}

}  // namespace entangle
