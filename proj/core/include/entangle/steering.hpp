// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_STEERING_HPP
#define ENTANGLE_STEERING_HPP

#include <optional>
#include <vector>

#include "entangle/twins.hpp"

namespace entangle {

/// One outcome of a selective distant measurement: Lueders probability, the
/// collapsed bipartite state and the distant substate it induces.
struct MeasurementRecord {
  std::size_t outcome = 0;  // index into twin.matched
  double probability = 0.0;
  std::optional<BipartiteState> post_state;
  Matrix post_rho_a;
};

/// All selective outcomes of measuring the twin pair; probabilities sum to 1.
std::vector<MeasurementRecord> distant_measurement(const BipartiteState& state,
                                                   const TwinPair& twin,
                                                   const TolerancePolicy& tol = {});

MeasurementRecord distant_measurement_selective(const BipartiteState& state, const TwinPair& twin,
                                                std::size_t outcome,
                                                const TolerancePolicy& tol = {});

/// Non-selective version: returns sum_m P_A^m rho_A P_A^m after verifying it
/// equals rho_A within eps_check (only the selective version can change the
/// distant state).
Matrix distant_measurement_nonselective(const BipartiteState& state, const TwinPair& twin,
                                        const TolerancePolicy& tol = {});

/// Convex decomposition of the distant state, sum_l w_l rho_A^l = rho_A.
struct DistantDecomposition {
  std::vector<double> weights;
  std::vector<Matrix> term_states;

  Matrix reassemble() const;
};

/// rho_A as an orthogonal mixture of substates selected by the twin outcomes.
DistantDecomposition orthogonal_mixture(const BipartiteState& state, const TwinPair& twin,
                                        const TolerancePolicy& tol = {});

/// Realizes a requested orthogonal decomposition of rho_A (given by the range
/// projectors of its terms) as a non-selective distant measurement: returns
/// the B-side observable whose measurement induces it.
///
/// Whether every NON-orthogonal decomposition of rho_A can be induced the same
/// way is an open question; only orthogonal decompositions are realized here.
Observable realize_orthogonal_decomposition(const BipartiteState& state,
                                            const std::vector<Matrix>& projectors_a,
                                            const TolerancePolicy& tol = {});

/// Distant state decomposition induced by non-selective measurement of an
/// arbitrary B-side observable (no twin or commutation required); terms with
/// weight <= eps_check are dropped.
DistantDecomposition distant_decomposition_general(const BipartiteState& state,
                                                   const Observable& o_b,
                                                   const TolerancePolicy& tol = {});

/// Outcome of steering with the rank-one effect |n_bar><n_bar| on B: the
/// distant subsystem is driven into target_a with the stated probability.
/// A vanishing range projection yields probability 0 and no target.
struct SteeringResult {
  std::optional<Vector> target_a;
  double probability = 0.0;
  std::optional<Vector> n_bar_range_part;  // Q_B n_bar / ||Q_B n_bar||
};

SteeringResult steer(const BipartiteState& state, const Vector& n_bar,
                     const TolerancePolicy& tol = {});

/// Reachability of a distant target state by steering: possible iff phi_a lies
/// in the range of rho_A. When reachable, `n_bar` is the B-side vector whose
/// selective measurement steers into phi_a, and `probability` is the
/// round-trip steering probability.
struct ReachabilityResult {
  bool reachable = false;
  double outside_norm = 0.0;  // ||(I - Q_A) phi_a||
  std::optional<Vector> n_bar;
  double probability = 0.0;
};

ReachabilityResult reachable(const BipartiteState& state, const Vector& phi_a,
                             const TolerancePolicy& tol = {});

/// Membership of a pure state in the decompositions of a density operator:
/// true iff phi lies in the range of rho^{1/2} (equal to the range of rho in
/// finite dimension). When true, a witness mixture
/// rho = w |phi><phi| + (1 - w) rho_rest with the largest such w (bisection to
/// 1e-6) is produced; rho_rest is absent when w reaches 1.
struct HadjisavvasResult {
  bool member = false;
  double outside_norm = 0.0;
  double weight = 0.0;
  std::optional<Matrix> rho_rest;
};

HadjisavvasResult hadjisavvas_check(const Matrix& rho, const Vector& phi,
                                    const TolerancePolicy& tol = {});

}  // namespace entangle

#endif  // ENTANGLE_STEERING_HPP
