// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "entangle/correlation.hpp"
#include "entangle/rng.hpp"

using namespace entangle;

namespace {

BipartiteState singlet() {
  Matrix c(2, 2);
  c << Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 0);
  return make_state(c / std::sqrt(2.0));
}

BipartiteState diag_state() {
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = std::sqrt(0.7);
  c(1, 1) = std::sqrt(0.3);
  return make_state(c);
}

}  // namespace

TEST_CASE("correlation operator of simple states") {
  Rng rng(3);
  const Vector a = rng.unit_vector(3);
  const Vector beta = rng.unit_vector(4);
  const AntilinearOperator u_prod = correlation_operator(make_state(a * beta.transpose()));
  CHECK((u_prod.matrix() - a * beta.transpose()).norm() < 1e-12);
  CHECK((u_prod.apply(beta) - a).norm() < 1e-12);

  // Schmidt partners map to each other for the singlet.
  const SchmidtDecomposition dec = schmidt(singlet());
  const AntilinearOperator u = correlation_operator(dec);
  for (Index i = 0; i < dec.rank(); ++i) {
    CHECK((u.apply(dec.vectors_b.col(i)) - dec.vectors_a.col(i)).norm() < 1e-12);
  }

  CHECK((correlation_operator(diag_state()).matrix() - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("apply conjugates and the inverse projects onto the range") {
  const AntilinearOperator u = correlation_operator(diag_state());
  Vector v(2);
  v << Complex(0, 1), Complex(0, 0);
  const Vector image = u.apply(v);
  CHECK(image(0) == Complex(0, -1));
  CHECK(image(1) == Complex(0, 0));

  // Null-space vectors are annihilated.
  Matrix c = Matrix::Zero(2, 3);
  c(0, 0) = 1.0;
  const BipartiteState product = make_state(c);
  const AntilinearOperator u_thin = correlation_operator(product);
  CHECK(u_thin.apply(Vector::Unit(3, 1)).norm() < 1e-12);
  CHECK(u_thin.apply(Vector::Unit(3, 2)).norm() < 1e-12);

  Rng rng(5);
  const BipartiteState state = rng.state_with_rank(3, 4, 2);
  const AntilinearOperator u_rank2 = correlation_operator(state);
  const Matrix qb = range_projectors(state).second;
  for (int t = 0; t < 10; ++t) {
    const Vector phi = rng.unit_vector(4);
    CHECK((u_rank2.apply_inverse(u_rank2.apply(phi)) - Vector(qb * phi)).norm() < 1e-9);
  }
  CHECK_THROWS_AS(u_rank2.apply(Vector::Unit(3, 0)), DimensionMismatch);
}

TEST_CASE("partial antiunitarity invariants of the stored matrix") {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const BipartiteState state = rng.state_with_rank(4, 3, 1 + t % 3);
    const AntilinearOperator u = correlation_operator(state);
    const auto [qa, qb] = range_projectors(state);
    CHECK((u.matrix() * u.matrix().adjoint() - qa).norm() < 1e-9);
    CHECK((u.matrix().adjoint() * u.matrix() - qb.conjugate()).norm() < 1e-9);
  }
}

TEST_CASE("antiunitarity: scalar products conjugate on 100 random range pairs") {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const BipartiteState state = rng.state(3, 4);
    const AntilinearOperator u = correlation_operator(state);
    const Matrix qb = range_projectors(state).second;
    Vector phi = qb * rng.vector(4);
    Vector psi = qb * rng.vector(4);
    if (phi.norm() < 1e-9 || psi.norm() < 1e-9) continue;
    phi /= phi.norm();
    psi /= psi.norm();
    const Complex lhs = u.apply(phi).adjoint() * u.apply(psi);
    const Complex rhs = std::conj(Complex(phi.adjoint() * psi));
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("operator images of reduced densities and eigenprojectors") {
  const BipartiteState s = singlet();
  const AntilinearOperator u = correlation_operator(s);
  CHECK((operator_image(u, reduced_rho_b(s)) - reduced_rho_a(s)).norm() < 1e-12);

  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    const BipartiteState state = rng.state_with_rank(4, 4, 1 + t % 4);
    const AntilinearOperator uu = correlation_operator(state);
    const auto [qa, qb] = range_projectors(state);
    CHECK((uu.image_to_a(reduced_rho_b(state)) - reduced_rho_a(state)).norm() < 1e-9);
    CHECK((uu.image_to_b(reduced_rho_a(state)) - reduced_rho_b(state)).norm() < 1e-9);
    CHECK((uu.image_to_a(Matrix::Identity(4, 4)) - qa).norm() < 1e-9);
    const SubsystemPicture sp = subsystem_picture(state);
    for (std::size_t j = 0; j < sp.size(); ++j) {
      CHECK((uu.image_to_a(sp.proj_b[j]) - sp.proj_a[j]).norm() < 1e-9);
      CHECK((uu.image_to_b(sp.proj_a[j]) - sp.proj_b[j]).norm() < 1e-9);
    }
  }
}

TEST_CASE("expansion coefficients through U agree with the partial scalar product") {
  const BipartiteState s = singlet();
  const AntilinearOperator u = correlation_operator(s);
  const Vector minus = Vector::Unit(2, 1);
  const Vector via_u = expansion_coefficient_via_ua(s, u, reduced_rho_b(s), minus);
  CHECK(via_u(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(via_u(1)) < 1e-12);

  // Null-space direction gives zero.
  Matrix c = Matrix::Zero(2, 3);
  c(0, 0) = 1.0;
  const BipartiteState thin = make_state(c);
  const AntilinearOperator u_thin = correlation_operator(thin);
  CHECK(expansion_coefficient_via_ua(thin, u_thin, reduced_rho_b(thin), Vector::Unit(3, 2))
            .norm() < 1e-12);

  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const Index da = 2 + t % 5, db = 2 + (t / 2) % 5;
    const BipartiteState state = rng.state(da, db);
    const AntilinearOperator uu = correlation_operator(state);
    const Matrix rho_b = reduced_rho_b(state);
    const Vector n = rng.unit_vector(db);
    CHECK((expansion_coefficient_via_ua(state, uu, rho_b, n) -
           partial_scalar_product(n, state))
              .norm() < 1e-9);
  }
}

TEST_CASE("correlated and generalized decompositions reassemble the state") {
  const CorrelatedDecomposition cd = correlated_decomposition(singlet());
  CHECK((cd.reassemble() - singlet().coeff()).norm() < 1e-10);

  // Non-eigenbasis expansion: the generalized route reassembles even though plain
  // biorthogonality fails.
  const BipartiteState diag = diag_state();
  Matrix xbasis(2, 2);
  xbasis << Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(-1, 0);
  xbasis /= std::sqrt(2.0);
  const ExpansionInBasis gen = generalized_decomposition(diag, SubsystemBasis{Side::B, xbasis});
  CHECK((gen.reassemble() - diag.coeff()).norm() < 1e-10);
  const Complex cross = gen.coefficients[0].adjoint() * gen.coefficients[1];
  CHECK(std::abs(cross) > 0.01);  // not a Schmidt basis

  // Product state: every coefficient is parallel to the same A vector.
  Rng rng(15);
  const Vector psi = rng.unit_vector(2);
  const BipartiteState product = make_state(psi * rng.unit_vector(2).transpose());
  const ExpansionInBasis pgen = generalized_decomposition(product, rng.basis(Side::B, 2));
  for (const Vector& coeff : pgen.coefficients) {
    CHECK(std::abs(std::abs(Complex(psi.adjoint() * coeff)) - coeff.norm()) < 1e-10);
  }

  for (int t = 0; t < 25; ++t) {
    const BipartiteState state = rng.state(3, 4);
    const ExpansionInBasis g = generalized_decomposition(state, rng.basis(Side::B, 4));
    CHECK((g.reassemble() - state.coeff()).norm() < 1e-9);
    const ExpansionInBasis direct = expand_in_basis(state, g.basis);
    for (std::size_t n = 0; n < g.coefficients.size(); ++n) {
      CHECK((g.coefficients[n] - direct.coefficients[n]).norm() < 1e-9);
    }
  }
}

TEST_CASE("the correlation operator is basis-independent under degenerate remixes") {
  Rng rng(17);
  const auto remix_residual = [&](const BipartiteState& state) {
    const SchmidtDecomposition dec = schmidt(state);
    const Matrix m = correlation_operator(dec).matrix();
    Matrix rebuilt = Matrix::Zero(state.dim_a(), state.dim_b());
    Index start = 0;
    while (start < dec.rank()) {
      Index stop = start + 1;
      while (stop < dec.rank() &&
             dec.coefficients(start) * dec.coefficients(start) -
                     dec.coefficients(stop) * dec.coefficients(stop) <=
                 1e-8) {
        ++stop;
      }
      const Index width = stop - start;
      const Matrix w = rng.unitary(width);
      const Matrix block = dec.vectors_b.middleCols(start, width) * w;
      for (Index i = 0; i < width; ++i) {
        const Vector beta = block.col(i);
        const Vector alpha = partial_scalar_product(beta, state) / dec.coefficients(start + i);
        rebuilt += alpha * beta.transpose();
      }
      start = stop;
    }
    return (rebuilt - m).norm();
  };

  CHECK(remix_residual(singlet()) < 1e-9);

  // 4x4 state with a doubly degenerate eigenvalue.
  const Matrix ua = rng.unitary(4);
  const Matrix ub = rng.unitary(4);
  Matrix coeff = Matrix::Zero(4, 4);
  const double values[4] = {0.6, 0.6, 0.3, 0.1};
  for (Index i = 0; i < 4; ++i) {
    coeff += std::sqrt(values[i] / 0.46) * 0.678233 * ua.col(i) * ub.col(i).transpose();
  }
  const BipartiteState degenerate = make_state(coeff);
  for (int t = 0; t < 20; ++t) CHECK(remix_residual(degenerate) < 1e-9);
}

TEST_CASE("a (rho_B, U) pair generates a state carrying both back") {
  // Demonstration only: pick a spectral form for rho_B and a partial
  // antiunitary, assemble the state they determine, and read both back.
  Rng rng(31);
  const Index da = 4, db = 3;
  const Matrix basis_b = rng.unitary(db);
  const Matrix basis_a = rng.unitary(da);
  Eigen::Vector3d r(0.5, 0.3, 0.2);
  Matrix rho_b = Matrix::Zero(db, db);
  Matrix u_matrix = Matrix::Zero(da, db);
  Matrix coeff = Matrix::Zero(da, db);
  for (Index i = 0; i < db; ++i) {
    rho_b += r(i) * basis_b.col(i) * basis_b.col(i).adjoint();
    u_matrix += basis_a.col(i) * basis_b.col(i).transpose();
    coeff += std::sqrt(r(i)) * basis_a.col(i) * basis_b.col(i).transpose();
  }
  const BipartiteState state = make_state(coeff);
  CHECK((reduced_rho_b(state) - rho_b).norm() < 1e-12);
  const AntilinearOperator u = correlation_operator(state);
  CHECK((u.matrix() - u_matrix).norm() < 1e-9);
  for (Index i = 0; i < db; ++i) {
    CHECK((u.apply(basis_b.col(i)) - basis_a.col(i)).norm() < 1e-9);
  }
}

TEST_CASE("rebuilding U from expansion-coefficient data") {
  Rng rng(19);
  for (int t = 0; t < 25; ++t) {
    const BipartiteState state = rng.state_with_rank(3, 4, 1 + t % 3);
    const Matrix rho_b = reduced_rho_b(state);
    const EigenSystem sys = hermitian_eig(rho_b);
    Matrix rebuilt = Matrix::Zero(3, 4);
    for (Index k = 0; k < sys.values.size(); ++k) {
      if (sys.values(k) <= 1e-10) continue;
      rebuilt += (partial_scalar_product(sys.vectors.col(k), state) / std::sqrt(sys.values(k))) *
                 sys.vectors.col(k).transpose();
    }
    CHECK((rebuilt - correlation_operator(state).matrix()).norm() < 1e-9);
  }
}
