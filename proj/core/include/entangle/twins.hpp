// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_TWINS_HPP
#define ENTANGLE_TWINS_HPP

#include <optional>
#include <vector>

#include "entangle/correlation.hpp"

namespace entangle {

/// Hermitian operator together with its unique spectral form (distinct
/// eigenvalues, one projector each).
struct Observable {
  Matrix matrix;
  SpectralDecomposition spectral;

  static Observable from_matrix(const Matrix& h, const TolerancePolicy& tol = {});

  /// Builds an observable from explicit spectral data; validates the type
  /// invariants and the reconstruction residual.
  static Observable from_spectral(SpectralDecomposition spectral, const TolerancePolicy& tol = {});

  Index dim() const { return matrix.rows(); }
};

struct TwinMatch {
  std::size_t index_a;  // position in o_a.spectral
  std::size_t index_b;  // position in o_b.spectral
  double residual;      // ||(P_A^m (x) I - I (x) P_B^m)|Psi>||
};

/// Matched non-nullifying eigenprojector lists of two subsystem observables.
/// When `ok`, every matched pair acts identically on the state within
/// eps_check and the nullify sums annihilate it. On failure the best matching
/// found and its residuals are retained for reporting.
struct TwinPair {
  bool ok = false;
  double max_residual = 0.0;
  std::vector<TwinMatch> matched;
  std::vector<Matrix> proj_a;  // aligned with `matched`
  std::vector<Matrix> proj_b;
  Matrix nullify_a;  // sum of nullifying eigenprojectors, P^{=0}
  Matrix nullify_b;
};

/// Classifies eigenprojectors as nullifying or not, then matches the
/// non-nullifying ones across the two sides by the twin residual. Succeeds iff
/// a perfect matching exists with all residuals <= eps_check.
TwinPair is_twin_pair(const BipartiteState& state, const Observable& o_a, const Observable& o_b,
                      const TolerancePolicy& tol = {});

/// True iff o_b commutes with rho_B (Frobenius norm of the commutator within
/// eps_check) — the exact criterion for a twin observable to exist.
bool has_twin(const BipartiteState& state, const Observable& o_b, const TolerancePolicy& tol = {});

/// Minimal part of an observable commuting with rho_B: the non-nullifying
/// eigenprojectors compressed onto the range of rho_B, P^{min,m} = Q P^m Q,
/// with matrix sum equal to o_b * Q_B.
struct MinimalObservable {
  std::vector<double> eigenvalues;
  std::vector<Matrix> minimal_projectors;
  Matrix matrix;
};

MinimalObservable minimal_part(const BipartiteState& state, const Observable& o_b,
                               const TolerancePolicy& tol = {});

/// Builds the minimal twin on the A side: projectors are the U_a-images of the
/// B-side minimal projectors, eigenvalues default to 1..M (their values are
/// irrelevant, only distinctness matters).
Observable construct_twin(const BipartiteState& state, const Observable& o_b,
                          const std::vector<double>& eigenvalue_assignment = {},
                          const TolerancePolicy& tol = {});

/// One block of the twin-correlated decomposition: orthonormal B-vectors
/// spanning R(Q_B^j) intersect R(P_B^{min,m}) with their U_a-partners.
struct TwinSchmidtBlock {
  std::size_t j;  // index into the subsystem picture
  std::size_t m;  // index into the minimal projector list
  double r;       // the common eigenvalue r_j
  Matrix vectors_b;
  Matrix vectors_a;
};

struct TwinCorrelatedSchmidt {
  std::vector<TwinSchmidtBlock> blocks;

  /// sum over blocks of r_j^{1/2} sum_q |q>_A |q>_B as a coefficient matrix.
  Matrix reassemble(Index dim_a, Index dim_b) const;
};

/// Twin-correlated canonical Schmidt decomposition grouped by (j, m); only
/// nonzero blocks are present.
TwinCorrelatedSchmidt twin_correlated_schmidt(const BipartiteState& state, const Observable& o_b,
                                              const TolerancePolicy& tol = {});

/// EPR verdict: a state admits distant measurement of two incompatible
/// observables iff some positive eigenvalue of rho_B is degenerate. When true,
/// `witness_a` / `witness_a_alt` hold a demonstration pair of incompatible
/// distant observables built from two bases of the degenerate block (the
/// second a Fourier-type rotation of the first) mapped through U_a.
struct EprResult {
  bool is_epr = false;
  std::size_t degenerate_index = 0;  // j of the first degenerate eigenvalue
  Index multiplicity = 0;
  std::optional<Observable> witness_a;
  std::optional<Observable> witness_a_alt;
};

EprResult is_epr(const BipartiteState& state, const TolerancePolicy& tol = {});

}  // namespace entangle

#endif  // ENTANGLE_TWINS_HPP
