// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/correlation.hpp"

namespace entangle {

Vector AntilinearOperator::apply(const Vector& phi) const {
  if (phi.size() != m_.cols()) throw DimensionMismatch("AntilinearOperator::apply");
  return m_ * phi.conjugate();
}

Vector AntilinearOperator::apply_inverse(const Vector& psi) const {
  if (psi.size() != m_.rows()) throw DimensionMismatch("AntilinearOperator::apply_inverse");
  return (m_.adjoint() * psi).conjugate();
}

Matrix AntilinearOperator::image_to_a(const Matrix& x_b) const {
  if (x_b.rows() != m_.cols() || x_b.cols() != m_.cols()) {
    throw DimensionMismatch("AntilinearOperator::image_to_a");
  }
  return m_ * x_b.conjugate() * m_.adjoint();
}

Matrix AntilinearOperator::image_to_b(const Matrix& x_a) const {
  if (x_a.rows() != m_.rows() || x_a.cols() != m_.rows()) {
    throw DimensionMismatch("AntilinearOperator::image_to_b");
  }
  return (m_.adjoint() * x_a * m_).conjugate();
}

AntilinearOperator correlation_operator(const SchmidtDecomposition& dec) {
  // vectors_b holds conj(right singular vectors), so the transpose restores
  // the b_i^dagger factors and M comes out conjugation-free.
  return AntilinearOperator(dec.vectors_a * dec.vectors_b.transpose());
}

AntilinearOperator correlation_operator(const BipartiteState& state, const TolerancePolicy& tol) {
  return correlation_operator(schmidt(state, tol));
}

Matrix operator_image(const AntilinearOperator& u, const Matrix& x_b) {
  return u.image_to_a(x_b);
}

Vector expansion_coefficient_via_ua(const BipartiteState& state, const AntilinearOperator& u,
                                    const Matrix& rho_b, const Vector& n_b,
                                    const TolerancePolicy& tol) {
  if (n_b.size() != state.dim_b() || rho_b.rows() != state.dim_b()) {
    throw DimensionMismatch("expansion_coefficient_via_ua");
  }
  return u.apply(psd_sqrt(rho_b, tol) * n_b);
}

Matrix CorrelatedDecomposition::reassemble() const {
  const Index da = u.rows(), db = vectors_b.rows();
  Matrix coeff = Matrix::Zero(da, db);
  for (Index i = 0; i < coefficients.size(); ++i) {
    coeff += coefficients(i) * u.apply(vectors_b.col(i)) * vectors_b.col(i).transpose();
  }
  return coeff;
}

CorrelatedDecomposition correlated_decomposition(const BipartiteState& state,
                                                 const TolerancePolicy& tol) {
  const SchmidtDecomposition dec = schmidt(state, tol);
  return CorrelatedDecomposition{dec.coefficients, dec.vectors_b, correlation_operator(dec)};
}

ExpansionInBasis generalized_decomposition(const BipartiteState& state,
                                           const SubsystemBasis& basis_b,
                                           const TolerancePolicy& tol) {
  if (basis_b.side != Side::B) throw SideMismatch("generalized_decomposition: basis must be B-side");
  if (basis_b.dim() != state.dim_b()) {
    throw DimensionMismatch("generalized_decomposition: basis dimension mismatch");
  }
  basis_b.validate(tol);
  const AntilinearOperator u = correlation_operator(state, tol);
  const Matrix root = psd_sqrt(reduced_rho_b(state), tol);
  ExpansionInBasis out{basis_b, {}};
  out.coefficients.reserve(static_cast<std::size_t>(basis_b.dim()));
  for (Index n = 0; n < basis_b.dim(); ++n) {
    out.coefficients.push_back(u.apply(root * basis_b.vectors.col(n)));
  }
  return out;
}

}  // namespace entangle
