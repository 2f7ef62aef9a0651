// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/rng.hpp"

#include <cmath>

namespace entangle {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on raw engine words; u1 in (0, 1].
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::gaussian_complex() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

Vector Rng::vector(Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = gaussian_complex();
  return v;
}

Vector Rng::unit_vector(Index dim) {
  Vector v = vector(dim);
  while (v.norm() < 1e-12) v = vector(dim);
  return v / v.norm();
}

Matrix Rng::matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = gaussian_complex();
  }
  return m;
}

Matrix Rng::hermitian(Index dim) {
  const Matrix g = matrix(dim, dim);
  return 0.5 * (g + g.adjoint());
}

Matrix Rng::density(Index dim, Index rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  const Matrix g = matrix(dim, rank);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

Matrix Rng::unitary(Index dim) {
  const Matrix g = matrix(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

SubsystemBasis Rng::basis(Side side, Index dim) {
  return SubsystemBasis{side, unitary(dim)};
}

BipartiteState Rng::state(Index dim_a, Index dim_b) {
  return make_state(matrix(dim_a, dim_b));
}

BipartiteState Rng::state_with_rank(Index dim_a, Index dim_b, Index rank) {
  Matrix coeff = Matrix::Zero(dim_a, dim_b);
  const Matrix ua = unitary(dim_a);
  const Matrix ub = unitary(dim_b);
  for (Index i = 0; i < rank; ++i) {
    coeff += (0.25 + uniform()) * ua.col(i) * ub.col(i).transpose();
  }
  return make_state(coeff);
}

}  // namespace entangle
