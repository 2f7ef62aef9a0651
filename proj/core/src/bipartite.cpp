// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/bipartite.hpp"

#include <cmath>

namespace entangle {

BipartiteState::BipartiteState(Matrix coeff, const TolerancePolicy& tol) : coeff_(std::move(coeff)) {
  tol.validate();
  require_finite(coeff_, "make_state");
  if (coeff_.rows() < 1 || coeff_.cols() < 1) {
    throw DimensionMismatch("make_state: coefficient matrix must be non-empty");
  }
  const double norm = coeff_.norm();
  if (norm == 0.0) throw ZeroState("make_state: zero coefficient matrix");
  normalization_applied_ = std::abs(norm - 1.0) > tol.eps_check;
  coeff_ /= norm;
}

Vector BipartiteState::to_composite() const {
  const Index da = dim_a(), db = dim_b();
  Vector psi(da * db);
  for (Index m = 0; m < da; ++m) {
    for (Index n = 0; n < db; ++n) psi(m * db + n) = coeff_(m, n);
  }
  return psi;
}

Matrix BipartiteState::dyad() const {
  const Vector psi = to_composite();
  return psi * psi.adjoint();
}

BipartiteState make_state(const Matrix& coeff, const TolerancePolicy& tol) {
  return BipartiteState(coeff, tol);
}

SubsystemBasis SubsystemBasis::standard(Side side, Index dim) {
  return SubsystemBasis{side, Matrix::Identity(dim, dim)};
}

void SubsystemBasis::validate(const TolerancePolicy& tol) const {
  if (vectors.rows() != vectors.cols()) {
    throw DimensionMismatch("SubsystemBasis: need as many vectors as the factor dimension");
  }
  const Index d = vectors.rows();
  if ((vectors.adjoint() * vectors - Matrix::Identity(d, d)).norm() > tol.eps_check) {
    throw Error("SubsystemBasis: vectors are not orthonormal");
  }
}

double ExpansionInBasis::norm_sum() const {
  double acc = 0.0;
  for (const Vector& c : coefficients) acc += c.squaredNorm();
  return acc;
}

Matrix ExpansionInBasis::reassemble() const {
  const Index da = coefficients.empty() ? 0 : coefficients.front().size();
  Matrix c = Matrix::Zero(da, basis.dim());
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    c += coefficients[n] * basis.vectors.col(static_cast<Index>(n)).transpose();
  }
  return c;
}

ExpansionInBasis expand_in_basis(const BipartiteState& state, const SubsystemBasis& basis_b,
                                 const TolerancePolicy& tol) {
  if (basis_b.side != Side::B) throw SideMismatch("expand_in_basis: basis must be B-side");
  if (basis_b.dim() != state.dim_b()) {
    throw DimensionMismatch("expand_in_basis: basis dimension does not match dim_b");
  }
  basis_b.validate(tol);
  ExpansionInBasis out{basis_b, {}};
  out.coefficients.reserve(static_cast<std::size_t>(basis_b.dim()));
  for (Index n = 0; n < basis_b.dim(); ++n) {
    out.coefficients.push_back(partial_scalar_product(basis_b.vectors.col(n), state));
  }
  return out;
}

Vector partial_scalar_product(const Vector& phi_b, const BipartiteState& state) {
  if (phi_b.size() != state.dim_b()) {
    throw DimensionMismatch("partial_scalar_product: phi dimension does not match dim_b");
  }
  return state.coeff() * phi_b.conjugate();
}

namespace {

void require_composite(const Matrix& op, Index dim_a, Index dim_b, const char* what) {
  if (dim_a < 1 || dim_b < 1) throw DimensionMismatch(std::string(what) + ": bad factor dims");
  require_square(op, what);
  if (op.rows() != dim_a * dim_b) {
    throw DimensionMismatch(std::string(what) + ": operator is " + std::to_string(op.rows()) +
                            "-dimensional, expected " + std::to_string(dim_a * dim_b));
  }
}

}  // namespace

Matrix partial_trace_b(const Matrix& op, Index dim_a, Index dim_b) {
  require_composite(op, dim_a, dim_b, "partial_trace_b");
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Index m = 0; m < dim_a; ++m) {
    for (Index mp = 0; mp < dim_a; ++mp) {
      out(m, mp) = op.block(m * dim_b, mp * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

Matrix partial_trace_a(const Matrix& op, Index dim_a, Index dim_b) {
  require_composite(op, dim_a, dim_b, "partial_trace_a");
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Index m = 0; m < dim_a; ++m) {
    out += op.block(m * dim_b, m * dim_b, dim_b, dim_b);
  }
  return out;
}

Matrix reduced_rho_a(const BipartiteState& state) {
  return state.coeff() * state.coeff().adjoint();
}

Matrix reduced_rho_b(const BipartiteState& state) {
  return (state.coeff().adjoint() * state.coeff()).conjugate();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed_a(const Matrix& op_a, Index dim_b) {
  return kron(op_a, Matrix::Identity(dim_b, dim_b));
}

Matrix embed_b(Index dim_a, const Matrix& op_b) {
  return kron(Matrix::Identity(dim_a, dim_a), op_b);
}

Matrix act_a(const Matrix& op_a, const Matrix& coeff) {
  if (op_a.cols() != coeff.rows()) throw DimensionMismatch("act_a: dimension mismatch");
  return op_a * coeff;
}

Matrix act_b(const Matrix& op_b, const Matrix& coeff) {
  if (op_b.cols() != coeff.cols()) throw DimensionMismatch("act_b: dimension mismatch");
  return coeff * op_b.transpose();
}

BipartiteState purify(const Matrix& rho, Index dim_b, const TolerancePolicy& tol) {
  tol.validate();
  require_finite(rho, "purify");
  require_square(rho, "purify");
  const double trace_err = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  if (trace_err > tol.eps_check) {
    throw NotUnitTrace("purify: |tr(rho) - 1| = " + std::to_string(trace_err));
  }
  EigenSystem sys = hermitian_eig(rho, tol);
  for (Index k = 0; k < sys.values.size(); ++k) {
    if (sys.values(k) < -tol.eps_check) {
      throw NotPSD("purify: eigenvalue " + std::to_string(sys.values(k)) + " below -eps_check");
    }
  }
  // Descending eigenvalues, kept while above the rank cutoff.
  std::vector<Index> kept;
  for (Index k = sys.values.size() - 1; k >= 0; --k) {
    if (sys.values(k) > tol.eps_rank) kept.push_back(k);
  }
  const Index rank = static_cast<Index>(kept.size());
  if (rank == 0) throw ZeroState("purify: rho has no positive spectrum");
  if (dim_b < rank) {
    throw DimBTooSmall("purify: dim_b = " + std::to_string(dim_b) + " below rank " +
                       std::to_string(rank));
  }
  Matrix coeff = Matrix::Zero(rho.rows(), dim_b);
  for (Index n = 0; n < rank; ++n) {
    coeff.col(n) = std::sqrt(sys.values(kept[static_cast<std::size_t>(n)])) *
                   sys.vectors.col(kept[static_cast<std::size_t>(n)]);
  }
  return make_state(coeff, tol);
}

}  // namespace entangle
