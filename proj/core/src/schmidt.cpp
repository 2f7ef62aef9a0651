// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/schmidt.hpp"

namespace entangle {

SchmidtDecomposition schmidt(const BipartiteState& state, const TolerancePolicy& tol) {
  const Svd dec = svd(state.coeff(), tol);
  SchmidtDecomposition out;
  out.coefficients = dec.singulars;
  out.vectors_a = dec.left;
  out.vectors_b = dec.right.conjugate();
  return out;
}

BipartiteState reconstruct(const SchmidtDecomposition& dec, Index dim_a, Index dim_b,
                           const TolerancePolicy& tol) {
  if (dec.rank() == 0) throw ZeroState("reconstruct: empty decomposition");
  if (dec.vectors_a.rows() != dim_a || dec.vectors_b.rows() != dim_b) {
    throw DimensionMismatch("reconstruct: stored vectors do not match the requested dims");
  }
  Matrix coeff = Matrix::Zero(dim_a, dim_b);
  for (Index i = 0; i < dec.rank(); ++i) {
    coeff += dec.coefficients(i) * dec.vectors_a.col(i) * dec.vectors_b.col(i).transpose();
  }
  return make_state(coeff, tol);
}

SubsystemPicture subsystem_picture(const BipartiteState& state, const TolerancePolicy& tol) {
  const SchmidtDecomposition dec = schmidt(state, tol);
  SubsystemPicture out;
  const Index rank = dec.rank();
  std::vector<double> distinct;
  Index start = 0;
  while (start < rank) {
    Index stop = start + 1;
    // Group on r = s^2: the subsystem picture indexes distinct eigenvalues of
    // the reduced densities.
    while (stop < rank) {
      const double r_prev = dec.coefficients(stop - 1) * dec.coefficients(stop - 1);
      const double r_here = dec.coefficients(stop) * dec.coefficients(stop);
      if (r_prev - r_here > tol.eps_degeneracy) break;
      ++stop;
    }
    Matrix qa = Matrix::Zero(state.dim_a(), state.dim_a());
    Matrix qb = Matrix::Zero(state.dim_b(), state.dim_b());
    double mean = 0.0;
    for (Index i = start; i < stop; ++i) {
      qa += dec.vectors_a.col(i) * dec.vectors_a.col(i).adjoint();
      qb += dec.vectors_b.col(i) * dec.vectors_b.col(i).adjoint();
      mean += dec.coefficients(i) * dec.coefficients(i);
    }
    mean /= static_cast<double>(stop - start);
    distinct.push_back(mean);
    out.proj_a.push_back(0.5 * (qa + qa.adjoint()));
    out.proj_b.push_back(0.5 * (qb + qb.adjoint()));
    out.multiplicities.push_back(stop - start);
    start = stop;
  }
  out.distinct_r = Eigen::Map<const RealVector>(distinct.data(), static_cast<Index>(distinct.size()));
  return out;
}

std::pair<Matrix, Matrix> range_projectors(const BipartiteState& state, const TolerancePolicy& tol) {
  const SchmidtDecomposition dec = schmidt(state, tol);
  Matrix qa = dec.vectors_a * dec.vectors_a.adjoint();
  Matrix qb = dec.vectors_b * dec.vectors_b.adjoint();
  return {0.5 * (qa + qa.adjoint()), 0.5 * (qb + qb.adjoint())};
}

Index schmidt_rank(const BipartiteState& state, const TolerancePolicy& tol) {
  return svd(state.coeff(), tol).rank();
}

bool is_entangled(const BipartiteState& state, const TolerancePolicy& tol) {
  return schmidt_rank(state, tol) >= 2;
}

}  // namespace entangle
