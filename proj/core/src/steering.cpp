// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/steering.hpp"

#include <cmath>

namespace entangle {

namespace {

void require_valid_twin(const TwinPair& twin, const char* what) {
  if (!twin.ok) {
    throw InvalidTwin(std::string(what) + ": twin pair failed validation (max residual " +
                      std::to_string(twin.max_residual) + ")");
  }
}

}  // namespace

MeasurementRecord distant_measurement_selective(const BipartiteState& state, const TwinPair& twin,
                                                std::size_t outcome, const TolerancePolicy& tol) {
  require_valid_twin(twin, "distant_measurement");
  if (outcome >= twin.matched.size()) {
    throw BadOutcomeIndex("distant_measurement: outcome " + std::to_string(outcome) +
                          " out of range");
  }
  const Matrix collapsed = act_b(twin.proj_b[outcome], state.coeff());
  MeasurementRecord rec;
  rec.outcome = outcome;
  rec.probability = collapsed.squaredNorm();
  if (rec.probability > tol.eps_check * tol.eps_check) {
    rec.post_state = make_state(collapsed, tol);
    rec.post_rho_a = reduced_rho_a(*rec.post_state);
  } else {
    rec.post_rho_a = Matrix::Zero(state.dim_a(), state.dim_a());
  }
  return rec;
}

std::vector<MeasurementRecord> distant_measurement(const BipartiteState& state,
                                                   const TwinPair& twin,
                                                   const TolerancePolicy& tol) {
  require_valid_twin(twin, "distant_measurement");
  std::vector<MeasurementRecord> out;
  out.reserve(twin.matched.size());
  for (std::size_t m = 0; m < twin.matched.size(); ++m) {
    out.push_back(distant_measurement_selective(state, twin, m, tol));
  }
  return out;
}

Matrix distant_measurement_nonselective(const BipartiteState& state, const TwinPair& twin,
                                        const TolerancePolicy& tol) {
  require_valid_twin(twin, "distant_measurement_nonselective");
  const Matrix rho_a = reduced_rho_a(state);
  Matrix luders = Matrix::Zero(state.dim_a(), state.dim_a());
  for (const Matrix& p : twin.proj_a) luders += p * rho_a * p;
  const double residual = (luders - rho_a).norm();
  if (residual > tol.eps_check) {
    throw InvalidTwin("distant_measurement_nonselective: Lueders sum changed rho_A by " +
                      std::to_string(residual));
  }
  return luders;
}

Matrix DistantDecomposition::reassemble() const {
  if (term_states.empty()) return Matrix();
  Matrix acc = Matrix::Zero(term_states.front().rows(), term_states.front().cols());
  for (std::size_t l = 0; l < term_states.size(); ++l) acc += weights[l] * term_states[l];
  return acc;
}

DistantDecomposition orthogonal_mixture(const BipartiteState& state, const TwinPair& twin,
                                        const TolerancePolicy& tol) {
  require_valid_twin(twin, "orthogonal_mixture");
  const Matrix rho_a = reduced_rho_a(state);
  const Matrix rho_b = reduced_rho_b(state);
  DistantDecomposition out;
  for (std::size_t m = 0; m < twin.matched.size(); ++m) {
    const double weight = (rho_b * twin.proj_b[m]).trace().real();
    const double trace_a = (rho_a * twin.proj_a[m]).trace().real();
    out.weights.push_back(weight);
    out.term_states.push_back(twin.proj_a[m] * rho_a * twin.proj_a[m] / trace_a);
  }
  (void)tol;
  return out;
}

Observable realize_orthogonal_decomposition(const BipartiteState& state,
                                            const std::vector<Matrix>& projectors_a,
                                            const TolerancePolicy& tol) {
  tol.validate();
  if (projectors_a.empty()) {
    throw Error("realize_orthogonal_decomposition: no projectors given");
  }
  const Matrix rho_a = reduced_rho_a(state);
  const Matrix q_a = range_projector(rho_a, tol);
  const Index da = state.dim_a();
  for (std::size_t i = 0; i < projectors_a.size(); ++i) {
    const Matrix& p = projectors_a[i];
    if (p.rows() != da || p.cols() != da) {
      throw DimensionMismatch("realize_orthogonal_decomposition: projector dimension mismatch");
    }
    if ((p * p - p).norm() > tol.eps_check || (p - p.adjoint()).norm() > tol.eps_check) {
      throw NotOrthogonal("realize_orthogonal_decomposition: input is not a projector");
    }
    if (((Matrix::Identity(da, da) - q_a) * p).norm() > tol.eps_check) {
      throw NotOrthogonal(
          "realize_orthogonal_decomposition: projector range not inside range(rho_A)");
    }
    for (std::size_t k = i + 1; k < projectors_a.size(); ++k) {
      if ((p * projectors_a[k]).norm() > tol.eps_check) {
        throw NotOrthogonal("realize_orthogonal_decomposition: projectors not mutually orthogonal");
      }
    }
  }
  for (const Matrix& p : projectors_a) {
    if (commutator(p, rho_a).norm() > tol.eps_check) {
      throw NotCommuting("realize_orthogonal_decomposition: projector does not commute with rho_A");
    }
  }
  const AntilinearOperator u = correlation_operator(state, tol);
  std::vector<double> values(projectors_a.size());
  std::vector<Matrix> projectors_b;
  projectors_b.reserve(projectors_a.size());
  for (std::size_t m = 0; m < projectors_a.size(); ++m) {
    values[m] = static_cast<double>(m + 1);
    Matrix image = u.image_to_b(projectors_a[m]);
    projectors_b.push_back(0.5 * (image + image.adjoint()));
  }
  Matrix sum = Matrix::Zero(state.dim_b(), state.dim_b());
  for (const Matrix& p : projectors_b) sum += p;
  const Matrix complement = Matrix::Identity(state.dim_b(), state.dim_b()) - sum;
  SpectralDecomposition spectral;
  if (complement.trace().real() > 0.5) {
    spectral.eigenvalues.push_back(0.0);
    spectral.projectors.push_back(0.5 * (complement + complement.adjoint()));
  }
  for (std::size_t m = 0; m < projectors_b.size(); ++m) {
    spectral.eigenvalues.push_back(values[m]);
    spectral.projectors.push_back(projectors_b[m]);
  }
  return Observable::from_spectral(std::move(spectral), tol);
}

DistantDecomposition distant_decomposition_general(const BipartiteState& state,
                                                   const Observable& o_b,
                                                   const TolerancePolicy& tol) {
  if (o_b.dim() != state.dim_b()) {
    throw DimensionMismatch("distant_decomposition_general: observable is not B-side");
  }
  DistantDecomposition out;
  for (const Matrix& p : o_b.spectral.projectors) {
    const Matrix collapsed = act_b(p, state.coeff());
    const double weight = collapsed.squaredNorm();
    if (weight <= tol.eps_check) continue;
    out.weights.push_back(weight);
    out.term_states.push_back(collapsed * collapsed.adjoint() / weight);
  }
  return out;
}

SteeringResult steer(const BipartiteState& state, const Vector& n_bar,
                     const TolerancePolicy& tol) {
  tol.validate();
  if (n_bar.size() != state.dim_b()) throw DimensionMismatch("steer: n_bar is not B-side");
  if (std::abs(n_bar.norm() - 1.0) > tol.eps_check) {
    throw NotNormalized("steer: ||n_bar|| = " + std::to_string(n_bar.norm()));
  }
  const Matrix rho_b = reduced_rho_b(state);
  const Matrix root = psd_sqrt(rho_b, tol);
  const Matrix q_b = range_projector(rho_b, tol);
  const Vector in_range = q_b * n_bar;

  SteeringResult out;
  const Vector steered = root * n_bar;
  out.probability = steered.squaredNorm();
  if (in_range.norm() <= tol.eps_check) {
    out.probability = 0.0;
    return out;
  }
  out.n_bar_range_part = in_range / in_range.norm();
  const AntilinearOperator u = correlation_operator(state, tol);
  Vector target = u.apply(steered);
  target /= target.norm();
  out.target_a = std::move(target);
  return out;
}

ReachabilityResult reachable(const BipartiteState& state, const Vector& phi_a,
                             const TolerancePolicy& tol) {
  tol.validate();
  if (phi_a.size() != state.dim_a()) throw DimensionMismatch("reachable: phi_a is not A-side");
  if (std::abs(phi_a.norm() - 1.0) > tol.eps_check) {
    throw NotNormalized("reachable: ||phi_a|| = " + std::to_string(phi_a.norm()));
  }
  const Matrix rho_a = reduced_rho_a(state);
  const Matrix q_a = range_projector(rho_a, tol);
  ReachabilityResult out;
  out.outside_norm = ((Matrix::Identity(state.dim_a(), state.dim_a()) - q_a) * phi_a).norm();
  if (out.outside_norm > tol.eps_check) return out;
  out.reachable = true;
  const AntilinearOperator u = correlation_operator(state, tol);
  const Matrix inv_root = pinv_sqrt(reduced_rho_b(state), tol);
  Vector n_bar = inv_root * u.apply_inverse(phi_a);
  n_bar /= n_bar.norm();
  out.probability = steer(state, n_bar, tol).probability;
  out.n_bar = std::move(n_bar);
  return out;
}

HadjisavvasResult hadjisavvas_check(const Matrix& rho, const Vector& phi,
                                    const TolerancePolicy& tol) {
  tol.validate();
  require_square(rho, "hadjisavvas_check");
  if (phi.size() != rho.rows()) throw DimensionMismatch("hadjisavvas_check");
  const double trace_err = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  if (trace_err > tol.eps_check) {
    throw NotUnitTrace("hadjisavvas_check: |tr(rho) - 1| = " + std::to_string(trace_err));
  }
  if (std::abs(phi.norm() - 1.0) > tol.eps_check) {
    throw NotNormalized("hadjisavvas_check: ||phi|| = " + std::to_string(phi.norm()));
  }
  const Matrix q = range_projector(rho, tol);  // throws NotPSD on bad input
  HadjisavvasResult out;
  out.outside_norm = ((Matrix::Identity(rho.rows(), rho.cols()) - q) * phi).norm();
  out.member = out.outside_norm <= tol.eps_check;
  if (!out.member) return out;

  const Matrix dyad = phi * phi.adjoint();
  const auto is_psd = [&](double w) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho - w * dyad);
    return solver.eigenvalues().minCoeff() >= -tol.eps_check;
  };
  double lo = 0.0, hi = 1.0;
  if (is_psd(hi)) {
    lo = hi;
  } else {
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      (is_psd(mid) ? lo : hi) = mid;
    }
  }
  out.weight = lo;
  if (1.0 - lo > tol.eps_check) {
    Matrix rest = (rho - lo * dyad) / (1.0 - lo);
    out.rho_rest = 0.5 * (rest + rest.adjoint());
  }
  return out;
}

}  // namespace entangle
