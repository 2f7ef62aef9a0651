// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_CORRELATION_HPP
#define ENTANGLE_CORRELATION_HPP

#include "entangle/schmidt.hpp"

namespace entangle {

/// Antilinear operator represented by a matrix M applied after entrywise
/// conjugation: phi |-> M * conj(phi). Composition of two antilinears
/// multiplies the matrices with one inner conjugation:
/// (M1 after M2)(phi) = M1 * conj(M2 * conj(phi)) = (M1 * conj(M2)) * phi.
///
/// For a correlation operator M maps B-space to A-space, is zero on the null
/// space of rho_B and partially antiunitary on its range:
/// M M^dagger = Q_A and M^dagger M = conj(Q_B).
class AntilinearOperator {
 public:
  explicit AntilinearOperator(Matrix m) : m_(std::move(m)) {}

  const Matrix& matrix() const { return m_; }
  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }

  /// phi |-> M * conj(phi).
  Vector apply(const Vector& phi) const;

  /// psi |-> conj(M^dagger * psi); apply_inverse(apply(phi)) projects phi
  /// onto the range of rho_B.
  Vector apply_inverse(const Vector& psi) const;

  /// Matrix of U X U^{-1} Q_A for a B-side operator X: M * conj(X) * M^dagger.
  Matrix image_to_a(const Matrix& x_b) const;

  /// Matrix of U^{-1} X U Q_B for an A-side operator X: conj(M^dagger * X * M).
  Matrix image_to_b(const Matrix& x_a) const;

 private:
  Matrix m_;
};

/// The correlation operator of a state: M = sum_i a_i b_i^dagger over the
/// retained SVD triples of the coefficient matrix. Applying it to the B-side
/// Schmidt vector conj(b_i) yields the A-side partner a_i. Uniquely determined
/// by the state (the sum over a degenerate block is basis-independent).
AntilinearOperator correlation_operator(const BipartiteState& state,
                                        const TolerancePolicy& tol = {});
AntilinearOperator correlation_operator(const SchmidtDecomposition& dec);

inline Vector apply(const AntilinearOperator& u, const Vector& phi) { return u.apply(phi); }
inline Vector apply_inverse(const AntilinearOperator& u, const Vector& psi) {
  return u.apply_inverse(psi);
}

/// Image of a B-side operator on the A side (e.g. rho_A = operator_image(U, rho_B)).
Matrix operator_image(const AntilinearOperator& u, const Matrix& x_b);

/// Expansion coefficient through the correlation operator:
/// (U rho_B^{1/2} |n>_B)_A, which equals partial_scalar_product(n_B, state).
Vector expansion_coefficient_via_ua(const BipartiteState& state, const AntilinearOperator& u,
                                    const Matrix& rho_b, const Vector& n_b,
                                    const TolerancePolicy& tol = {});

/// Correlated canonical Schmidt decomposition: the state as
/// sum_i s_i (U |i>_B) (x) |i>_B, carrying the spectral data of rho_B and U.
struct CorrelatedDecomposition {
  RealVector coefficients;
  Matrix vectors_b;
  AntilinearOperator u;

  Matrix reassemble() const;
};

CorrelatedDecomposition correlated_decomposition(const BipartiteState& state,
                                                 const TolerancePolicy& tol = {});

/// Generalized correlated decomposition: expansion coefficients in an
/// arbitrary B basis evaluated through U rho_B^{1/2} rather than the partial
/// scalar product.
ExpansionInBasis generalized_decomposition(const BipartiteState& state,
                                           const SubsystemBasis& basis_b,
                                           const TolerancePolicy& tol = {});

}  // namespace entangle

#endif  // ENTANGLE_CORRELATION_HPP
