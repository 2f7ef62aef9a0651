// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_SCHMIDT_HPP
#define ENTANGLE_SCHMIDT_HPP

#include <utility>
#include <vector>

#include "entangle/bipartite.hpp"

namespace entangle {

/// Canonical Schmidt decomposition |Psi> = sum_i s_i |a_i> (x) |b_i> with
/// positive coefficients s_i = r_i^{1/2} descending and paired orthonormal
/// columns. The B-side vectors are the conjugated right singular vectors of
/// the coefficient matrix; they form an eigenbasis of rho_B.
struct SchmidtDecomposition {
  RealVector coefficients;
  Matrix vectors_a;
  Matrix vectors_b;

  Index rank() const { return coefficients.size(); }
};

/// Computed via one SVD of the coefficient matrix so the partners stay paired
/// inside degenerate blocks (separate eigensolves would not guarantee that).
SchmidtDecomposition schmidt(const BipartiteState& state, const TolerancePolicy& tol = {});

/// Exact round trip: rebuilds the state from the stored pairs.
BipartiteState reconstruct(const SchmidtDecomposition& dec, Index dim_a, Index dim_b,
                           const TolerancePolicy& tol = {});

/// Distinct positive eigenvalues r_j of the reduced densities with the paired
/// eigenprojectors on both sides; rank(proj_a[j]) = rank(proj_b[j]) =
/// multiplicities[j] and sum_j r_j * mult_j = 1.
struct SubsystemPicture {
  RealVector distinct_r;
  std::vector<Matrix> proj_a;
  std::vector<Matrix> proj_b;
  std::vector<Index> multiplicities;

  std::size_t size() const { return multiplicities.size(); }
};

SubsystemPicture subsystem_picture(const BipartiteState& state, const TolerancePolicy& tol = {});

/// Range projectors (Q_A, Q_B) of the reduced density operators; applying
/// either one (tensored with the identity) leaves the state fixed.
std::pair<Matrix, Matrix> range_projectors(const BipartiteState& state,
                                           const TolerancePolicy& tol = {});

/// Schmidt rank at the eps_rank cutoff.
Index schmidt_rank(const BipartiteState& state, const TolerancePolicy& tol = {});

/// Entangled iff the Schmidt rank is at least 2.
bool is_entangled(const BipartiteState& state, const TolerancePolicy& tol = {});

}  // namespace entangle

#endif  // ENTANGLE_SCHMIDT_HPP
