// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_BIPARTITE_HPP
#define ENTANGLE_BIPARTITE_HPP

#include <vector>

#include "entangle/numeric.hpp"
#include "entangle/types.hpp"

namespace entangle {

/// A normalized pure state of an A x B system stored as the dA x dB coefficient
/// matrix C with |Psi> = sum_{mn} C(m,n) |m>_A |n>_B.
///
/// The composite index convention is A-major throughout: composite = m*dB + n,
/// which makes the B-trace a contiguous-block trace and matches the ordering
/// of kron(op_A, op_B).
class BipartiteState {
 public:
  BipartiteState(Matrix coeff, const TolerancePolicy& tol);

  Index dim_a() const { return coeff_.rows(); }
  Index dim_b() const { return coeff_.cols(); }
  const Matrix& coeff() const { return coeff_; }

  /// True when the input needed rescaling by more than eps_check.
  bool normalization_applied() const { return normalization_applied_; }

  /// A-major flattening into a composite vector of size dA*dB.
  Vector to_composite() const;

  /// Composite-space dyad |Psi><Psi| (size (dA*dB)^2; intended for small dims).
  Matrix dyad() const;

 private:
  Matrix coeff_;
  bool normalization_applied_ = false;
};

BipartiteState make_state(const Matrix& coeff, const TolerancePolicy& tol = {});

/// Orthonormal basis of one factor space; `vectors` columns are the elements.
struct SubsystemBasis {
  Side side;
  Matrix vectors;

  static SubsystemBasis standard(Side side, Index dim);
  Index dim() const { return vectors.rows(); }
  void validate(const TolerancePolicy& tol = {}) const;
};

/// Unique expansion |Psi> = sum_n coefficients[n] (x) basis[n] in a B-side
/// basis. Coefficients live in the A space, are unnormalized and may be zero;
/// indices stay aligned with the basis columns.
struct ExpansionInBasis {
  SubsystemBasis basis;
  std::vector<Vector> coefficients;

  /// sum_n ||coefficients[n]||^2 (equals 1 for a valid expansion).
  double norm_sum() const;

  /// Rebuilds the coefficient matrix sum_n coefficients[n] * basis[n]^T.
  Matrix reassemble() const;
};

ExpansionInBasis expand_in_basis(const BipartiteState& state, const SubsystemBasis& basis_b,
                                 const TolerancePolicy& tol = {});

/// Partial scalar product (<phi|_B |Psi>)_A = C * conj(phi). Conjugate-linear
/// in phi; a non-unit norm of phi scales the result.
Vector partial_scalar_product(const Vector& phi_b, const BipartiteState& state);

/// Partial traces of a composite operator with the declared (dA, dB) split.
Matrix partial_trace_a(const Matrix& op, Index dim_a, Index dim_b);
Matrix partial_trace_b(const Matrix& op, Index dim_a, Index dim_b);

/// Reduced density operators via the fast formulas rho_A = C C^dagger,
/// rho_B = conj(C^dagger C); both equal the partial trace of the state dyad.
Matrix reduced_rho_a(const BipartiteState& state);
Matrix reduced_rho_b(const BipartiteState& state);

/// Kronecker product in the A-major convention.
Matrix kron(const Matrix& a, const Matrix& b);

/// op_A (x) I_B and I_A (x) op_B as composite matrices.
Matrix embed_a(const Matrix& op_a, Index dim_b);
Matrix embed_b(Index dim_a, const Matrix& op_b);

/// Coefficient matrix of (op_A (x) I)|Psi> and (I (x) op_B)|Psi>.
Matrix act_a(const Matrix& op_a, const Matrix& coeff);
Matrix act_b(const Matrix& op_b, const Matrix& coeff);

/// Builds a bipartite state whose reduced rho_A equals the given density
/// operator: eigen-dyad mixture paired with the first rank(rho) standard
/// B-basis vectors, eigenvalues taken in descending order for reproducibility.
BipartiteState purify(const Matrix& rho, Index dim_b, const TolerancePolicy& tol = {});

}  // namespace entangle

#endif  // ENTANGLE_BIPARTITE_HPP
