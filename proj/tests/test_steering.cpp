// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "entangle/rng.hpp"
#include "entangle/steering.hpp"
#include "oracles.hpp"

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

Matrix sigma_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Vector plus_x() {
  Vector v(2);
  v << Complex(1, 0), Complex(1, 0);
  return v / std::sqrt(2.0);
}

Observable commuting_observable(Rng& rng, const BipartiteState& state) {
  const EigenSystem sys = hermitian_eig(reduced_rho_b(state));
  Matrix o = Matrix::Zero(state.dim_b(), state.dim_b());
  for (Index n = 0; n < state.dim_b(); ++n) {
    o += static_cast<double>(rng.uniform_int(1, 3)) * sys.vectors.col(n) *
         sys.vectors.col(n).adjoint();
  }
  return Observable::from_matrix(o);
}

TwinPair z_twins(const BipartiteState& state) {
  const Observable oz = Observable::from_matrix(sigma_z());
  return is_twin_pair(state, oz, oz);
}

}  // namespace

TEST_CASE("distant measurement on the singlet with sigma_z twins") {
  const BipartiteState s = singlet();
  const TwinPair twin = z_twins(s);
  REQUIRE(twin.ok);
  const std::vector<MeasurementRecord> records = distant_measurement(s, twin);
  REQUIRE(records.size() == 2);
  double total = 0.0;
  for (const MeasurementRecord& rec : records) {
    CHECK(rec.probability == doctest::Approx(0.5));
    total += rec.probability;
    REQUIRE(rec.post_state);
    CHECK(schmidt_rank(*rec.post_state) == 1);
  }
  CHECK(total == doctest::Approx(1.0));
  // The (+_A, -_B) outcome collapses onto |+>|->.
  const MeasurementRecord plus = distant_measurement_selective(s, twin, 1);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = 1.0;
  CHECK((plus.post_state->coeff() - expected).norm() < 1e-12);

  // Nonselective version leaves rho_A unchanged.
  CHECK((distant_measurement_nonselective(s, twin) - reduced_rho_a(s)).norm() < 1e-12);

  CHECK_THROWS_AS(distant_measurement_selective(s, twin, 5), BadOutcomeIndex);
  const TwinPair broken = is_twin_pair(diag_state(), Observable::from_matrix(sigma_z()),
                                       Observable::from_matrix(sigma_x()));
  CHECK_THROWS_AS(distant_measurement(diag_state(), broken), InvalidTwin);
}

TEST_CASE("distant measurement on the diagonal state") {
  const BipartiteState d = diag_state();
  const TwinPair twin = z_twins(d);
  REQUIRE(twin.ok);
  const MeasurementRecord rec = distant_measurement_selective(d, twin, 1);
  CHECK(rec.probability == doctest::Approx(0.7));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK((rec.post_state->coeff() - expected).norm() < 1e-12);
  CHECK((distant_measurement_nonselective(d, twin) - reduced_rho_a(d)).norm() < 1e-12);
}

TEST_CASE("nonselective distant measurement never changes rho_A") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const BipartiteState state = rng.state(3, 4);
    const Observable o_b = commuting_observable(rng, state);
    const Observable o_a = construct_twin(state, o_b);
    const TwinPair twin = is_twin_pair(state, o_a, o_b);
    REQUIRE(twin.ok);
    CHECK((distant_measurement_nonselective(state, twin) - reduced_rho_a(state)).norm() < 1e-9);
  }
}

TEST_CASE("orthogonal mixture reassembles rho_A") {
  Rng rng(5);
  for (const BipartiteState& state : {singlet(), diag_state(), rng.state(2, 2)}) {
    const Observable o_b = commuting_observable(rng, state);
    const Observable o_a = construct_twin(state, o_b);
    const TwinPair twin = is_twin_pair(state, o_a, o_b);
    REQUIRE(twin.ok);
    const DistantDecomposition mix = orthogonal_mixture(state, twin);
    double total = 0.0;
    for (double w : mix.weights) total += w;
    CHECK(total == doctest::Approx(1.0));
    CHECK((mix.reassemble() - reduced_rho_a(state)).norm() < 1e-9);
  }
}

TEST_CASE("realize_orthogonal_decomposition on the singlet x-basis") {
  const BipartiteState s = singlet();
  const Vector px = plus_x();
  Vector mx(2);
  mx << Complex(1, 0), Complex(-1, 0);
  mx /= std::sqrt(2.0);
  const std::vector<Matrix> projectors = {px * px.adjoint(), mx * mx.adjoint()};
  const Observable o_b = realize_orthogonal_decomposition(s, projectors);
  // The returned observable is built from x-basis projectors (up to matching).
  for (const Matrix& requested : projectors) {
    double best = 1e9;
    for (const Matrix& p : o_b.spectral.projectors) best = std::min(best, (p - requested).norm());
    CHECK(best < 1e-9);
  }
  // Measuring it distantly reproduces the requested decomposition.
  const Observable o_a = construct_twin(s, o_b);
  const TwinPair twin = is_twin_pair(s, o_a, o_b);
  REQUIRE(twin.ok);
  const DistantDecomposition mix = orthogonal_mixture(s, twin);
  CHECK((mix.reassemble() - reduced_rho_a(s)).norm() < 1e-9);
  for (const Matrix& term : mix.term_states) {
    double best = 1e9;
    for (const Matrix& p : projectors) best = std::min(best, (term - p).norm());
    CHECK(best < 1e-9);
  }
}

TEST_CASE("realize_orthogonal_decomposition validates and covers edge cases") {
  Rng rng(7);
  const BipartiteState state = rng.state(3, 4);
  const SubsystemPicture sp = subsystem_picture(state);
  // Spectral projectors of rho_A map to the B-side eigenprojectors.
  const Observable o_b = realize_orthogonal_decomposition(state, sp.proj_a);
  for (std::size_t j = 0; j < sp.size(); ++j) {
    double best = 1e9;
    for (const Matrix& p : o_b.spectral.projectors) best = std::min(best, (p - sp.proj_b[j]).norm());
    CHECK(best < 1e-9);
  }
  // Single full-range projector: one-outcome observable.
  const Matrix qa = range_projectors(state).first;
  const Observable trivial = realize_orthogonal_decomposition(state, {qa});
  CHECK(trivial.spectral.eigenvalues.size() <= 2);

  const Vector e0 = Vector::Unit(3, 0);
  const Vector e1 = Vector::Unit(3, 1);
  const Matrix overlap1 = (e0 + e1) * (e0 + e1).adjoint() / 2.0;
  const Matrix overlap2 = e0 * e0.adjoint();
  CHECK_THROWS_AS(realize_orthogonal_decomposition(state, {overlap1, overlap2}), NotOrthogonal);
  CHECK_THROWS_AS(realize_orthogonal_decomposition(state, {overlap2}), NotCommuting);
}

TEST_CASE("general distant decomposition from a non-commuting observable") {
  const BipartiteState d = diag_state();
  const DistantDecomposition dd = distant_decomposition_general(d, Observable::from_matrix(sigma_x()));
  REQUIRE(dd.weights.size() == 2);
  CHECK(dd.weights[0] == doctest::Approx(0.5));
  CHECK(dd.weights[1] == doctest::Approx(0.5));
  CHECK((dd.reassemble() - reduced_rho_a(d)).norm() < 1e-10);
  // Terms are pure but not orthogonal.
  for (const Matrix& term : dd.term_states) {
    CHECK((term * term - term).norm() < 1e-10);
  }
  CHECK((dd.term_states[0] * dd.term_states[1]).norm() > 0.1);

  // Against a twin observable it reduces to the orthogonal mixture.
  Rng rng(9);
  const BipartiteState state = rng.state(3, 3);
  const Observable o_b = commuting_observable(rng, state);
  const Observable o_a = construct_twin(state, o_b);
  const TwinPair twin = is_twin_pair(state, o_a, o_b);
  REQUIRE(twin.ok);
  const DistantDecomposition via_twin = orthogonal_mixture(state, twin);
  const DistantDecomposition via_general = distant_decomposition_general(state, o_b);
  REQUIRE(via_twin.weights.size() == via_general.weights.size());
  for (std::size_t m = 0; m < via_twin.weights.size(); ++m) {
    double best = 1e9;
    for (std::size_t l = 0; l < via_general.weights.size(); ++l) {
      best = std::min(best, (via_twin.term_states[m] - via_general.term_states[l]).norm() +
                                std::abs(via_twin.weights[m] - via_general.weights[l]));
    }
    CHECK(best < 1e-9);
  }

  // An annihilating eigenprojector contributes no term.
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = 1.0;
  const DistantDecomposition pruned =
      distant_decomposition_general(make_state(c), Observable::from_matrix(sigma_z()));
  CHECK(pruned.weights.size() == 1);
}

TEST_CASE("steer on worked states") {
  // Singlet steered by |+x>: probability 1/2, target is the opposite x state.
  const SteeringResult sr = steer(singlet(), plus_x());
  CHECK(sr.probability == doctest::Approx(0.5));
  REQUIRE(sr.target_a);
  Vector mx(2);
  mx << Complex(1, 0), Complex(-1, 0);
  mx /= std::sqrt(2.0);
  CHECK(std::abs(Complex(mx.adjoint() * *sr.target_a)) == doctest::Approx(1.0));

  // Worked probability for the diagonal state.
  const SteeringResult dr = steer(diag_state(), plus_x());
  CHECK(std::abs(dr.probability - 0.5) < 1e-10);

  // Null-space direction: probability 0 and no target.
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = 1.0;
  const SteeringResult zero = steer(make_state(c), Vector::Unit(2, 1));
  CHECK(zero.probability == doctest::Approx(0.0));
  CHECK(!zero.target_a);

  CHECK_THROWS_AS(steer(singlet(), Vector(2.0 * plus_x())), NotNormalized);
}

TEST_CASE("steering matches the brute-force collapse oracle") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Index da = 2 + t % 4, db = 2 + (t / 2) % 4;
    const BipartiteState state = rng.state(da, db);
    const Vector n_bar = rng.unit_vector(db);
    const SteeringResult sr = steer(state, n_bar);
    const oracle::Collapse collapse = oracle::collapse_b(state.coeff(), n_bar);
    CHECK(std::abs(sr.probability - collapse.probability) < 1e-9);
    REQUIRE(sr.target_a);
    const Vector product = oracle::composite(Matrix(*sr.target_a * n_bar.transpose()));
    CHECK(std::abs(Complex(product.adjoint() * collapse.post)) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("steering probabilities over a complete basis sum to 1") {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    const Index da = 2 + t % 3, db = 2 + t % 4;
    const BipartiteState state = rng.state(da, db);
    const SubsystemBasis basis = rng.basis(Side::B, db);
    double total = 0.0;
    for (Index n = 0; n < db; ++n) total += steer(state, basis.vectors.col(n)).probability;
    CHECK(std::abs(total - 1.0) < 1e-9);
  }
}

TEST_CASE("only the range projection of n_bar matters") {
  Rng rng(15);
  const BipartiteState state = rng.state_with_rank(3, 4, 2);
  const Matrix qb = range_projectors(state).second;
  Vector range_part = qb * rng.vector(4);
  Vector null_part = (Matrix::Identity(4, 4) - qb) * rng.vector(4);
  REQUIRE(range_part.norm() > 1e-9);
  REQUIRE(null_part.norm() > 1e-9);
  range_part /= range_part.norm();
  null_part /= null_part.norm();
  const Vector n1 = std::sqrt(0.7) * range_part + std::sqrt(0.3) * null_part;
  const Complex phase = std::polar(1.0, 1.234);
  const Vector n2 = phase * (std::sqrt(0.7) * range_part - std::sqrt(0.3) * null_part);
  const SteeringResult s1 = steer(state, n1);
  const SteeringResult s2 = steer(state, n2);
  CHECK(s1.probability == doctest::Approx(s2.probability));
  REQUIRE(s1.target_a);
  REQUIRE(s2.target_a);
  CHECK(std::abs(Complex(s1.target_a->adjoint() * *s2.target_a)) == doctest::Approx(1.0));
  CHECK((phase * *s1.n_bar_range_part - *s2.n_bar_range_part).norm() < 1e-9);
}

TEST_CASE("steering probability grows with the range projection and factorizes") {
  Rng rng(17);
  const BipartiteState state = rng.state_with_rank(3, 4, 2);
  const Matrix rho_b = reduced_rho_b(state);
  const Matrix root = psd_sqrt(rho_b);
  const Matrix qb = range_projectors(state).second;
  Vector range_part = qb * rng.vector(4);
  Vector null_part = (Matrix::Identity(4, 4) - qb) * rng.vector(4);
  range_part /= range_part.norm();
  null_part /= null_part.norm();
  const SubsystemPicture sp = subsystem_picture(state);
  double previous = -1.0;
  for (double weight : {0.1, 0.4, 0.7, 1.0}) {
    const Vector n_bar = std::sqrt(weight) * range_part + std::sqrt(1.0 - weight) * null_part;
    const double p = steer(state, n_bar).probability;
    CHECK(p > previous);
    previous = p;
    CHECK(std::abs(p - weight * (root * range_part).squaredNorm()) < 1e-9);
  }
  // In-range choices: the probability is the spectral weight of the projections.
  double expected = 0.0;
  for (std::size_t j = 0; j < sp.size(); ++j) {
    expected += sp.distinct_r(static_cast<Index>(j)) * (sp.proj_b[j] * range_part).squaredNorm();
  }
  CHECK(std::abs(steer(state, range_part).probability - expected) < 1e-9);
}

TEST_CASE("reachability on worked states") {
  // Every qubit state is reachable from the singlet.
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    const Vector phi = rng.unit_vector(2);
    const ReachabilityResult rr = reachable(singlet(), phi);
    REQUIRE(rr.reachable);
    const SteeringResult sr = steer(singlet(), *rr.n_bar);
    REQUIRE(sr.target_a);
    CHECK(std::abs(Complex(sr.target_a->adjoint() * phi)) == doctest::Approx(1.0).epsilon(1e-9));
  }

  // |0>|0>: only |0>_A is reachable.
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = 1.0;
  const BipartiteState product = make_state(c);
  CHECK(reachable(product, Vector::Unit(2, 0)).reachable);
  CHECK(!reachable(product, Vector::Unit(2, 1)).reachable);
  Vector mixed(2);
  mixed << Complex(1, 0), Complex(1, 0);
  mixed /= std::sqrt(2.0);
  CHECK(!reachable(product, mixed).reachable);

  const ReachabilityResult rr = reachable(diag_state(), plus_x());
  REQUIRE(rr.reachable);
  CHECK(rr.probability > 0.0);
  const SteeringResult round = steer(diag_state(), *rr.n_bar);
  CHECK(std::abs(Complex(round.target_a->adjoint() * plus_x())) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(round.probability == doctest::Approx(rr.probability));

  CHECK_THROWS_AS(reachable(singlet(), Vector(2.0 * plus_x())), NotNormalized);
}

TEST_CASE("reachability round-trips 100 random targets") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const Index da = 2 + t % 4, db = 2 + (t / 3) % 4;
    const BipartiteState state = rng.state(da, db);
    Vector phi = range_projector(reduced_rho_a(state)) * rng.vector(da);
    if (phi.norm() < 1e-9) continue;
    phi /= phi.norm();
    const ReachabilityResult rr = reachable(state, phi);
    REQUIRE(rr.reachable);
    const SteeringResult sr = steer(state, *rr.n_bar);
    REQUIRE(sr.target_a);
    CHECK(1.0 - std::abs(Complex(sr.target_a->adjoint() * phi)) < 1e-9);
  }
}

TEST_CASE("erasure: the 45-degree analyzer restores path coherence") {
  const BipartiteState state = make_state(Matrix::Identity(2, 2) / std::sqrt(2.0));
  CHECK(std::abs(reduced_rho_a(state)(0, 1)) < 1e-12);  // no coherence before steering
  const SteeringResult sr = steer(state, plus_x());
  CHECK(sr.probability == doctest::Approx(0.5));
  REQUIRE(sr.target_a);
  const Matrix rho_target = *sr.target_a * sr.target_a->adjoint();
  CHECK(std::abs(rho_target(0, 1)) == doctest::Approx(0.5));
}

TEST_CASE("hadjisavvas membership and witness weights") {
  // rho = I/2: every pure state enters with weight 1/2.
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const HadjisavvasResult hr =
        hadjisavvas_check(0.5 * Matrix::Identity(2, 2), rng.unit_vector(2));
    REQUIRE(hr.member);
    CHECK(hr.weight == doctest::Approx(0.5).epsilon(1e-4));
  }

  Matrix pure = Matrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  CHECK(!hadjisavvas_check(pure, Vector::Unit(2, 1)).member);
  // phi equal to the state itself appears with weight 1.
  const HadjisavvasResult self = hadjisavvas_check(pure, Vector::Unit(2, 0));
  REQUIRE(self.member);
  CHECK(self.weight == doctest::Approx(1.0).epsilon(1e-4));

  Matrix mixed = Matrix::Zero(2, 2);
  mixed(0, 0) = 0.7;
  mixed(1, 1) = 0.3;
  const HadjisavvasResult hr = hadjisavvas_check(mixed, plus_x());
  REQUIRE(hr.member);
  CHECK(std::abs(hr.weight - 0.42) < 1e-4);
  REQUIRE(hr.rho_rest);
  const Matrix rebuilt =
      hr.weight * plus_x() * plus_x().adjoint() + (1.0 - hr.weight) * *hr.rho_rest;
  CHECK((rebuilt - mixed).norm() < 1e-9);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(*hr.rho_rest);
  CHECK(solver.eigenvalues().minCoeff() > -1e-6);

  CHECK_THROWS_AS(hadjisavvas_check(Matrix::Identity(2, 2), plus_x()), NotUnitTrace);
  Matrix indefinite = Matrix::Zero(2, 2);
  indefinite(0, 0) = 1.2;
  indefinite(1, 1) = -0.2;
  CHECK_THROWS_AS(hadjisavvas_check(indefinite, plus_x()), NotPSD);
  CHECK_THROWS_AS(hadjisavvas_check(mixed, Vector(2.0 * plus_x())), NotNormalized);
}
