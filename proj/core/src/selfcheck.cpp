// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "entangle/rng.hpp"
#include "entangle/steering.hpp"

namespace entangle {

namespace {

double spectral_residual(const Matrix& h, const TolerancePolicy& tol) {
  const SpectralDecomposition dec = group_spectrum(hermitian_eig(h, tol), tol);
  const Index d = h.rows();
  double res = (dec.reconstruct() - h).norm();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < dec.projectors.size(); ++k) {
    const Matrix& p = dec.projectors[k];
    res = std::max(res, (p * p - p).norm());
    res = std::max(res, (p - p.adjoint()).norm());
    for (std::size_t k2 = k + 1; k2 < dec.projectors.size(); ++k2) {
      res = std::max(res, (p * dec.projectors[k2]).norm());
    }
    sum += p;
  }
  return std::max(res, (sum - Matrix::Identity(d, d)).norm());
}

// State with a doubly degenerate positive Schmidt spectrum (when dims allow).
BipartiteState degenerate_state(Rng& rng, Index da, Index db) {
  const Index rank = std::min(da, db);
  const Matrix ua = rng.unitary(da);
  const Matrix ub = rng.unitary(db);
  Matrix coeff = Matrix::Zero(da, db);
  double value = 0.0;
  for (Index i = 0; i < rank; ++i) {
    if (i % 2 == 0) value = 0.25 + rng.uniform();
    coeff += value * ua.col(i) * ub.col(i).transpose();
  }
  return make_state(coeff);
}

// B-side observable commuting with rho_B, built in a full eigenbasis of rho_B
// with small-integer eigenvalues (degeneracies occur naturally).
Observable commuting_observable(Rng& rng, const BipartiteState& state,
                                const TolerancePolicy& tol) {
  const EigenSystem sys = hermitian_eig(reduced_rho_b(state), tol);
  const Index d = state.dim_b();
  Matrix o = Matrix::Zero(d, d);
  const int hi = std::max<int>(2, static_cast<int>(d) - 1);
  for (Index n = 0; n < d; ++n) {
    const double value = static_cast<double>(rng.uniform_int(1, hi));
    o += value * sys.vectors.col(n) * sys.vectors.col(n).adjoint();
  }
  return Observable::from_matrix(o, tol);
}

struct Suite {
  std::string name;
  double tolerance;
  std::function<double(Rng&)> run;  // returns max residual over one trial
};

class Runner {
 public:
  explicit Runner(const SelfCheckOptions& opts) : opts_(opts) {}

  void add(std::string name, double tolerance, std::function<double(Rng&)> run) {
    suites_.push_back({std::move(name), tolerance, std::move(run)});
  }

  std::vector<SuiteResult> execute() const {
    std::vector<SuiteResult> results;
    results.reserve(suites_.size());
    for (std::size_t i = 0; i < suites_.size(); ++i) {
      // Per-suite generator: suite order never perturbs the streams.
      Rng rng(opts_.seed * 1000003ULL + i);
      SuiteResult res;
      res.name = suites_[i].name;
      res.tolerance = suites_[i].tolerance;
      for (int t = 0; t < opts_.trials; ++t) {
        res.max_residual = std::max(res.max_residual, suites_[i].run(rng));
      }
      res.pass = res.max_residual <= res.tolerance;
      results.push_back(std::move(res));
    }
    return results;
  }

 private:
  SelfCheckOptions opts_;
  std::vector<Suite> suites_;
};

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& opts) {
  if (opts.dim_a < 1 || opts.dim_b < 1) throw Error("run_selfcheck: dims must be positive");
  if (opts.trials < 1) throw Error("run_selfcheck: trials must be positive");
  opts.tol.validate();
  const Index da = opts.dim_a, db = opts.dim_b;
  const TolerancePolicy tol = opts.tol;
  const double eps = tol.eps_check;
  Runner runner(opts);

  runner.add("numeric.spectral_reconstruction", eps, [=](Rng& rng) {
    return std::max(spectral_residual(rng.hermitian(da), tol),
                    spectral_residual(rng.hermitian(db), tol));
  });

  runner.add("numeric.psd_sqrt", eps, [=](Rng& rng) {
    const Matrix rho = rng.density(db);
    const Matrix s = psd_sqrt(rho, tol);
    return std::max((s * s - rho).norm(), (s - s.adjoint()).norm());
  });

  runner.add("numeric.range_projector", eps, [=](Rng& rng) {
    const Matrix rho = rng.density(da, rng.uniform_int(1, static_cast<int>(da)));
    const Matrix q = range_projector(rho, tol);
    double res = commutator(q, rho).norm();
    res = std::max(res, (q * rho - rho).norm());
    return std::max(res, (q * q - q).norm());
  });

  runner.add("numeric.svd_reconstruction", eps, [=](Rng& rng) {
    const Matrix c = rng.matrix(da, db);
    const Svd dec = svd(c, tol);
    const Index r = dec.rank();
    double res = (dec.reconstruct() - c).norm();
    res = std::max(res, (dec.left.adjoint() * dec.left - Matrix::Identity(r, r)).norm());
    return std::max(res, (dec.right.adjoint() * dec.right - Matrix::Identity(r, r)).norm());
  });

  runner.add("bipartite.expansion_norm", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const ExpansionInBasis exp = expand_in_basis(state, rng.basis(Side::B, db), tol);
    const double res = std::abs(exp.norm_sum() - 1.0);
    return std::max(res, (exp.reassemble() - state.coeff()).norm());
  });

  runner.add("bipartite.expansion_basis_independence", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Vector phi = rng.unit_vector(db);
    const Vector direct = partial_scalar_product(phi, state);
    double res = 0.0;
    for (int rep = 0; rep < 2; ++rep) {
      const Matrix basis_a = rng.unitary(da);
      Vector assembled = Vector::Zero(da);
      for (Index m = 0; m < da; ++m) {
        const Complex amp = basis_a.col(m).adjoint() * direct;
        assembled += amp * basis_a.col(m);
      }
      res = std::max(res, (assembled - direct).norm());
    }
    return res;
  });

  runner.add("bipartite.partial_scalar_linearity", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Vector phi = rng.unit_vector(db);
    const Vector x = rng.unit_vector(db);
    // Orthogonal split of the state by a random B-side projector.
    const Matrix p = x * x.adjoint();
    const Matrix part1 = act_b(p, state.coeff());
    const Matrix part2 = act_b(Matrix::Identity(db, db) - p, state.coeff());
    const Vector whole = partial_scalar_product(phi, state);
    const Vector split = part1 * phi.conjugate() + part2 * phi.conjugate();
    double res = (whole - split).norm();
    // Conjugate-linearity in the B slot: scaling phi scales the result by the
    // conjugated factor.
    const Complex alpha(0.3 + rng.uniform(), rng.uniform());
    const Vector scaled = state.coeff() * (alpha * phi).conjugate();
    return std::max(res, (scaled - std::conj(alpha) * whole).norm());
  });

  runner.add("bipartite.partial_scalar_representation", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Vector phi = rng.unit_vector(db);
    const Matrix q_basis = rng.unitary(db);
    Vector through = Vector::Zero(da);
    for (Index q = 0; q < db; ++q) {
      const Complex overlap = q_basis.col(q).adjoint() * phi;
      through += std::conj(overlap) * (state.coeff() * q_basis.col(q).conjugate());
    }
    return (through - partial_scalar_product(phi, state)).norm();
  });

  runner.add("bipartite.partial_trace_rules", eps, [=](Rng& rng) {
    const Matrix o_a = rng.matrix(da, da);
    const Matrix o_b = rng.matrix(db, db);
    const Matrix o_ab = rng.matrix(da * db, da * db);
    const Matrix ea = embed_a(o_a, db);
    const Matrix eb = embed_b(da, o_b);
    double res = (partial_trace_a(ea * o_ab, da, db) - partial_trace_a(o_ab * ea, da, db)).norm();
    res = std::max(res,
                   (partial_trace_b(eb * o_ab, da, db) - partial_trace_b(o_ab * eb, da, db)).norm());
    res = std::max(res, (partial_trace_b(ea * o_ab, da, db) - o_a * partial_trace_b(o_ab, da, db)).norm());
    res = std::max(res, (partial_trace_b(o_ab * ea, da, db) - partial_trace_b(o_ab, da, db) * o_a).norm());
    res = std::max(res, (partial_trace_a(eb * o_ab, da, db) - o_b * partial_trace_a(o_ab, da, db)).norm());
    res = std::max(res, (partial_trace_a(o_ab * eb, da, db) - partial_trace_a(o_ab, da, db) * o_b).norm());
    return std::max(res, std::abs((partial_trace_b(o_ab, da, db).trace() - o_ab.trace())));
  });

  runner.add("bipartite.bridge_relation", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Vector phi = rng.unit_vector(db);
    const Matrix lhs =
        partial_trace_b(embed_b(da, phi * phi.adjoint()) * state.dyad(), da, db);
    const Vector v = partial_scalar_product(phi, state);
    const double res = (lhs - v * v.adjoint()).norm();
    return std::max(res, std::abs(lhs.trace().real() - v.squaredNorm()) +
                             std::abs(lhs.trace().imag()));
  });

  runner.add("bipartite.reduced_vs_partial_trace", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Matrix dyad = state.dyad();
    double res = (reduced_rho_a(state) - partial_trace_b(dyad, da, db)).norm();
    return std::max(res, (reduced_rho_b(state) - partial_trace_a(dyad, da, db)).norm());
  });

  runner.add("bipartite.purify_roundtrip", 1e-10, [=](Rng& rng) {
    const Index rank = std::min(da, db);
    const Matrix rho = rng.density(da, rng.uniform_int(1, static_cast<int>(rank)));
    const BipartiteState state = purify(rho, db, tol);
    return (reduced_rho_a(state) - rho).norm();
  });

  runner.add("bipartite.pure_nearby_pure_distant", eps, [=](Rng& rng) {
    const Matrix coeff = rng.unit_vector(da) * rng.unit_vector(db).transpose();
    const BipartiteState state = make_state(coeff, tol);
    const SchmidtDecomposition dec = schmidt(state, tol);
    double res = dec.rank() == 1 ? 0.0 : 1.0;
    return std::max(res, std::abs(dec.coefficients(0) - 1.0));
  });

  runner.add("schmidt.equal_positive_spectra", tol.eps_degeneracy, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const EigenSystem ea = hermitian_eig(reduced_rho_a(state), tol);
    const EigenSystem eb = hermitian_eig(reduced_rho_b(state), tol);
    std::vector<double> pa, pb;
    for (Index k = 0; k < ea.values.size(); ++k) {
      if (ea.values(k) > tol.eps_rank) pa.push_back(ea.values(k));
    }
    for (Index k = 0; k < eb.values.size(); ++k) {
      if (eb.values(k) > tol.eps_rank) pb.push_back(eb.values(k));
    }
    if (pa.size() != pb.size()) return 1.0;
    double res = 0.0;
    for (std::size_t k = 0; k < pa.size(); ++k) res = std::max(res, std::abs(pa[k] - pb[k]));
    return res;
  });

  runner.add("schmidt.roundtrip", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const SchmidtDecomposition dec = schmidt(state, tol);
    return (reconstruct(dec, da, db, tol).coeff() - state.coeff()).norm();
  });

  runner.add("schmidt.eigenbasis_expansion", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const EigenSystem sys = hermitian_eig(reduced_rho_b(state), tol);
    const ExpansionInBasis exp =
        expand_in_basis(state, SubsystemBasis{Side::B, sys.vectors}, tol);
    double res = 0.0;
    Matrix dyads = Matrix::Zero(da, da);
    for (std::size_t n = 0; n < exp.coefficients.size(); ++n) {
      dyads += exp.coefficients[n] * exp.coefficients[n].adjoint();
      for (std::size_t n2 = n + 1; n2 < exp.coefficients.size(); ++n2) {
        res = std::max(res, std::abs(Complex(exp.coefficients[n].adjoint() * exp.coefficients[n2])));
      }
    }
    return std::max(res, (dyads - reduced_rho_a(state)).norm());
  });

  runner.add("schmidt.range_projectors_fix_state", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state_with_rank(da, db, rng.uniform_int(1, static_cast<int>(std::min(da, db))));
    const auto [qa, qb] = range_projectors(state, tol);
    double res = (act_a(qa, state.coeff()) - state.coeff()).norm();
    res = std::max(res, (act_b(qb, state.coeff()) - state.coeff()).norm());
    return std::max(res, (act_a(qa, act_b(qb, state.coeff())) - state.coeff()).norm());
  });

  runner.add("schmidt.coefficient_gram_identity", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const SubsystemBasis basis = rng.basis(Side::B, db);
    const ExpansionInBasis exp = expand_in_basis(state, basis, tol);
    const Matrix rho_b = reduced_rho_b(state);
    double res = 0.0;
    for (Index n = 0; n < db; ++n) {
      for (Index n2 = 0; n2 < db; ++n2) {
        const Complex lhs = exp.coefficients[static_cast<std::size_t>(n)].adjoint() *
                            exp.coefficients[static_cast<std::size_t>(n2)];
        const Complex rhs = basis.vectors.col(n2).adjoint() * rho_b * basis.vectors.col(n);
        res = std::max(res, std::abs(lhs - rhs));
      }
    }
    return res;
  });

  runner.add("schmidt.subsystem_picture", eps, [=](Rng& rng) {
    const BipartiteState state =
        (rng.uniform() < 0.5 && std::min(da, db) > 1) ? degenerate_state(rng, da, db)
                                                      : rng.state(da, db);
    const SubsystemPicture sp = subsystem_picture(state, tol);
    double sum = 0.0, res = 0.0;
    for (std::size_t j = 0; j < sp.size(); ++j) {
      sum += sp.distinct_r(static_cast<Index>(j)) * static_cast<double>(sp.multiplicities[j]);
      res = std::max(res, std::abs(sp.proj_a[j].trace().real() -
                                   static_cast<double>(sp.multiplicities[j])));
      res = std::max(res, std::abs(sp.proj_b[j].trace().real() -
                                   static_cast<double>(sp.multiplicities[j])));
      for (std::size_t j2 = j + 1; j2 < sp.size(); ++j2) {
        res = std::max(res, (sp.proj_b[j] * sp.proj_b[j2]).norm());
        res = std::max(res, (sp.proj_a[j] * sp.proj_a[j2]).norm());
      }
    }
    Matrix rho = Matrix::Zero(db, db);
    for (std::size_t j = 0; j < sp.size(); ++j) {
      rho += sp.distinct_r(static_cast<Index>(j)) * sp.proj_b[j];
    }
    res = std::max(res, (rho - reduced_rho_b(state)).norm());
    return std::max(res, std::abs(sum - 1.0));
  });

  runner.add("correlation.partial_antiunitarity", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state_with_rank(da, db, rng.uniform_int(1, static_cast<int>(std::min(da, db))));
    const AntilinearOperator u = correlation_operator(state, tol);
    const auto [qa, qb] = range_projectors(state, tol);
    double res = (u.matrix() * u.matrix().adjoint() - qa).norm();
    res = std::max(res, (u.matrix().adjoint() * u.matrix() - qb.conjugate()).norm());
    Vector phi = qb * rng.vector(db);
    Vector psi = qb * rng.vector(db);
    if (phi.norm() > 1e-6 && psi.norm() > 1e-6) {
      phi /= phi.norm();
      psi /= psi.norm();
      const Complex lhs = u.apply(phi).adjoint() * u.apply(psi);
      const Complex rhs = std::conj(Complex(phi.adjoint() * psi));
      res = std::max(res, std::abs(lhs - rhs));
      // apply_inverse after apply projects onto the range of rho_B.
      res = std::max(res, (u.apply_inverse(u.apply(phi)) - Vector(qb * phi)).norm());
    }
    return res;
  });

  runner.add("correlation.uniqueness_under_remixes", eps, [=](Rng& rng) {
    if (std::min(da, db) < 2) return 0.0;
    const BipartiteState state = degenerate_state(rng, da, db);
    const SchmidtDecomposition dec = schmidt(state, tol);
    const Matrix m = correlation_operator(dec).matrix();
    // Remix each degenerate block of the B eigenbasis by a random unitary and
    // rebuild the operator from the remixed canonical pairs.
    Matrix rebuilt = Matrix::Zero(da, db);
    Index start = 0;
    while (start < dec.rank()) {
      Index stop = start + 1;
      while (stop < dec.rank() &&
             dec.coefficients(start) * dec.coefficients(start) -
                     dec.coefficients(stop) * dec.coefficients(stop) <=
                 tol.eps_degeneracy) {
        ++stop;
      }
      const Index width = stop - start;
      const Matrix w = rng.unitary(width);
      const Matrix block_b = dec.vectors_b.middleCols(start, width) * w;
      for (Index i = 0; i < width; ++i) {
        const Vector beta = block_b.col(i);
        const Vector alpha =
            partial_scalar_product(beta, state) / dec.coefficients(start + i);
        rebuilt += alpha * beta.transpose();
      }
      start = stop;
    }
    return (rebuilt - m).norm();
  });

  runner.add("correlation.root_route_cross_check", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const AntilinearOperator u = correlation_operator(state, tol);
    const Matrix rho_b = reduced_rho_b(state);
    const Vector n = rng.unit_vector(db);
    return (expansion_coefficient_via_ua(state, u, rho_b, n, tol) -
            partial_scalar_product(n, state))
        .norm();
  });

  runner.add("correlation.operator_images", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state_with_rank(da, db, rng.uniform_int(1, static_cast<int>(std::min(da, db))));
    const AntilinearOperator u = correlation_operator(state, tol);
    const Matrix rho_a = reduced_rho_a(state);
    const Matrix rho_b = reduced_rho_b(state);
    const auto [qa, qb] = range_projectors(state, tol);
    double res = (u.image_to_a(rho_b) - rho_a).norm();
    res = std::max(res, (u.image_to_b(rho_a) - rho_b).norm());
    res = std::max(res, (u.image_to_a(Matrix::Identity(db, db)) - qa).norm());
    const SubsystemPicture sp = subsystem_picture(state, tol);
    for (std::size_t j = 0; j < sp.size(); ++j) {
      res = std::max(res, (u.image_to_a(sp.proj_b[j]) - sp.proj_a[j]).norm());
      res = std::max(res, (u.image_to_b(sp.proj_a[j]) - sp.proj_b[j]).norm());
    }
    return res;
  });

  runner.add("correlation.decompositions", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const CorrelatedDecomposition cd = correlated_decomposition(state, tol);
    double res = (cd.reassemble() - state.coeff()).norm();
    const ExpansionInBasis gen = generalized_decomposition(state, rng.basis(Side::B, db), tol);
    res = std::max(res, (gen.reassemble() - state.coeff()).norm());
    const ExpansionInBasis direct = expand_in_basis(state, gen.basis, tol);
    for (std::size_t n = 0; n < gen.coefficients.size(); ++n) {
      res = std::max(res, (gen.coefficients[n] - direct.coefficients[n]).norm());
    }
    return res;
  });

  runner.add("correlation.rebuild_from_expansion_data", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state_with_rank(da, db, rng.uniform_int(1, static_cast<int>(std::min(da, db))));
    const Matrix rho_b = reduced_rho_b(state);
    const EigenSystem sys = hermitian_eig(rho_b, tol);
    Matrix rebuilt = Matrix::Zero(da, db);
    for (Index k = 0; k < sys.values.size(); ++k) {
      if (sys.values(k) <= tol.eps_rank) continue;
      const Vector image =
          partial_scalar_product(sys.vectors.col(k), state) / std::sqrt(sys.values(k));
      rebuilt += image * sys.vectors.col(k).transpose();
    }
    return (rebuilt - correlation_operator(state, tol).matrix()).norm();
  });

  runner.add("twins.reduced_densities_are_twins", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Observable o_a = Observable::from_matrix(reduced_rho_a(state), tol);
    const Observable o_b = Observable::from_matrix(reduced_rho_b(state), tol);
    const TwinPair twin = is_twin_pair(state, o_a, o_b, tol);
    return twin.ok ? twin.max_residual : 1.0;
  });

  runner.add("twins.construct_roundtrip", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Observable o_b = commuting_observable(rng, state, tol);
    if (!has_twin(state, o_b, tol)) return 1.0;
    const Observable o_a = construct_twin(state, o_b, {}, tol);
    const TwinPair twin = is_twin_pair(state, o_a, o_b, tol);
    if (!twin.ok) return 1.0;
    double res = twin.max_residual;
    const Matrix rho_a = reduced_rho_a(state);
    const Matrix rho_b = reduced_rho_b(state);
    const auto [qa, qb] = range_projectors(state, tol);
    Matrix live_a = Matrix::Zero(da, da);
    Matrix live_b = Matrix::Zero(db, db);
    Matrix luders_a = Matrix::Zero(da * db, da * db);
    Matrix luders_b = Matrix::Zero(da * db, da * db);
    const Matrix dyad = state.dyad();
    for (std::size_t m = 0; m < twin.matched.size(); ++m) {
      res = std::max(res, commutator(twin.proj_a[m], rho_a).norm());
      res = std::max(res, commutator(twin.proj_b[m], rho_b).norm());
      live_a += twin.proj_a[m];
      live_b += twin.proj_b[m];
      const Matrix pa = embed_a(twin.proj_a[m], db);
      const Matrix pb = embed_b(da, twin.proj_b[m]);
      luders_a += pa * dyad * pa;
      luders_b += pb * dyad * pb;
    }
    // The non-nullifying sum dominates the range projector.
    res = std::max(res, (live_a * qa - qa).norm());
    res = std::max(res, (live_b * qb - qb).norm());
    // Both Lueders sums coincide as composite matrices.
    res = std::max(res, (luders_a - luders_b).norm());
    // Minimal part: O_B^min = O_B Q_B.
    const MinimalObservable mp = minimal_part(state, o_b, tol);
    res = std::max(res, (mp.matrix - o_b.matrix * qb).norm());
    return res;
  });

  runner.add("twins.equal_outcome_probabilities", 1e-10, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Observable o_b = commuting_observable(rng, state, tol);
    const Observable o_a = construct_twin(state, o_b, {}, tol);
    const TwinPair twin = is_twin_pair(state, o_a, o_b, tol);
    if (!twin.ok) return 1.0;
    const Matrix& c = state.coeff();
    double res = 0.0;
    for (std::size_t m = 0; m < twin.matched.size(); ++m) {
      const double pa = act_a(twin.proj_a[m], c).squaredNorm();
      const double pb = act_b(twin.proj_b[m], c).squaredNorm();
      res = std::max(res, std::abs(pa - pb));
    }
    return res;
  });

  runner.add("twins.commutation_criterion", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    // Commuting case: has_twin and the 8B orthogonality both hold.
    const Observable commuting = commuting_observable(rng, state, tol);
    const auto orthogonality = [&](const Observable& o_b) {
      const EigenSystem sys = hermitian_eig(o_b.matrix, tol);
      const ExpansionInBasis exp =
          expand_in_basis(state, SubsystemBasis{Side::B, sys.vectors}, tol);
      double worst = 0.0;
      for (Index n = 0; n < db; ++n) {
        for (Index n2 = n + 1; n2 < db; ++n2) {
          if (std::abs(sys.values(n) - sys.values(n2)) <= tol.eps_degeneracy) continue;
          worst = std::max(worst,
                           std::abs(Complex(exp.coefficients[static_cast<std::size_t>(n)].adjoint() *
                                            exp.coefficients[static_cast<std::size_t>(n2)])));
        }
      }
      return worst;
    };
    if (!has_twin(state, commuting, tol)) return 1.0;
    double res = orthogonality(commuting);
    if (db >= 2 && schmidt_rank(state, tol) >= 2) {
      const Observable generic = Observable::from_matrix(rng.hermitian(db), tol);
      const bool twin = has_twin(state, generic, tol);
      const bool orth = orthogonality(generic) <= eps;
      if (twin != orth) res = std::max(res, 1.0);
    }
    return res;
  });

  runner.add("twins.padding_keeps_minimal_part", eps, [=](Rng& rng) {
    if (da < 2) return 0.0;
    const Index rank = std::min<Index>(da - 1, db);
    const BipartiteState state = rng.state_with_rank(da, db, std::max<Index>(1, rank));
    const Observable o_b = commuting_observable(rng, state, tol);
    const Observable o_a = construct_twin(state, o_b, {}, tol);
    const auto [qa, qb] = range_projectors(state, tol);
    // Pad with an extra eigenvalue on the null space of rho_A.
    const Matrix padded_matrix =
        o_a.matrix + 100.0 * (Matrix::Identity(da, da) - qa);
    const Observable padded = Observable::from_matrix(padded_matrix, tol);
    const TwinPair twin = is_twin_pair(state, padded, o_b, tol);
    if (!twin.ok) return 1.0;
    return (padded.matrix * qa - o_a.matrix * qa).norm();
  });

  runner.add("twins.commuting_projector_pairs", eps, [=](Rng& rng) {
    const Matrix v = rng.unitary(db);
    Matrix d1 = Matrix::Zero(db, db);
    Matrix d2 = Matrix::Zero(db, db);
    for (Index k = 0; k < db; ++k) {
      d1 += static_cast<double>(rng.uniform_int(1, 3)) * v.col(k) * v.col(k).adjoint();
      d2 += static_cast<double>(rng.uniform_int(1, 3)) * v.col(k) * v.col(k).adjoint();
    }
    const Observable o1 = Observable::from_matrix(d1, tol);
    const Observable o2 = Observable::from_matrix(d2, tol);
    double res = commutator(o1.matrix, o2.matrix).norm();
    for (const Matrix& p1 : o1.spectral.projectors) {
      for (const Matrix& p2 : o2.spectral.projectors) {
        res = std::max(res, commutator(p1, p2).norm());
      }
    }
    return res;
  });

  runner.add("twins.twin_correlated_schmidt", eps, [=](Rng& rng) {
    const BipartiteState state =
        (rng.uniform() < 0.5 && std::min(da, db) > 1) ? degenerate_state(rng, da, db)
                                                      : rng.state(da, db);
    const Observable o_b = commuting_observable(rng, state, tol);
    const TwinCorrelatedSchmidt dec = twin_correlated_schmidt(state, o_b, tol);
    double res = (dec.reassemble(da, db) - state.coeff()).norm();
    // Grouped spectral resolution of rho_B and block resolution of Q_B.
    const SubsystemPicture sp = subsystem_picture(state, tol);
    const MinimalObservable mp = minimal_part(state, o_b, tol);
    const auto [qa, qb] = range_projectors(state, tol);
    Matrix rho = Matrix::Zero(db, db);
    for (std::size_t j = 0; j < sp.size(); ++j) {
      for (const Matrix& pmin : mp.minimal_projectors) {
        rho += sp.distinct_r(static_cast<Index>(j)) * sp.proj_b[j] * pmin;
      }
    }
    res = std::max(res, (rho - reduced_rho_b(state)).norm());
    Matrix block_sum = Matrix::Zero(db, db);
    for (const TwinSchmidtBlock& block : dec.blocks) {
      block_sum += block.vectors_b * block.vectors_b.adjoint();
    }
    return std::max(res, (block_sum - qb).norm());
  });

  runner.add("twins.epr_detection", eps, [=](Rng& rng) {
    double res = 0.0;
    const BipartiteState generic = rng.state(da, db);
    const SubsystemPicture sp = subsystem_picture(generic, tol);
    bool degenerate = false;
    for (Index mult : sp.multiplicities) degenerate |= mult >= 2;
    if (is_epr(generic, tol).is_epr != degenerate) res = 1.0;
    if (std::min(da, db) >= 2) {
      const BipartiteState epr_state = degenerate_state(rng, da, db);
      const EprResult epr = is_epr(epr_state, tol);
      if (!epr.is_epr || !epr.witness_a || !epr.witness_a_alt) return 1.0;
      if (commutator(epr.witness_a->matrix, epr.witness_a_alt->matrix).norm() < 0.01) {
        return 1.0;
      }
      // Both witnesses are distantly measurable: they commute with rho_A.
      const Matrix rho_a = reduced_rho_a(epr_state);
      res = std::max(res, commutator(epr.witness_a->matrix, rho_a).norm());
      res = std::max(res, commutator(epr.witness_a_alt->matrix, rho_a).norm());
    }
    const BipartiteState product = make_state(
        rng.unit_vector(da) * rng.unit_vector(db).transpose(), tol);
    if (is_epr(product, tol).is_epr) res = 1.0;
    return res;
  });

  runner.add("steering.oracle_equivalence", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Vector n_bar = rng.unit_vector(db);
    const SteeringResult sr = steer(state, n_bar, tol);
    const Matrix collapsed = act_b(n_bar * n_bar.adjoint(), state.coeff());
    double res = std::abs(sr.probability - collapsed.squaredNorm());
    if (sr.target_a) {
      const EigenSystem sys = hermitian_eig(collapsed * collapsed.adjoint(), tol);
      const Vector oracle = sys.vectors.col(sys.values.size() - 1);
      res = std::max(res, 1.0 - std::abs(Complex(oracle.adjoint() * *sr.target_a)));
    }
    return res;
  });

  runner.add("steering.probability_completeness", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const SubsystemBasis basis = rng.basis(Side::B, db);
    double sum = 0.0;
    for (Index n = 0; n < db; ++n) sum += steer(state, basis.vectors.col(n), tol).probability;
    return std::abs(sum - 1.0);
  });

  runner.add("steering.nonselective_identity", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Observable o_b = commuting_observable(rng, state, tol);
    const Observable o_a = construct_twin(state, o_b, {}, tol);
    const TwinPair twin = is_twin_pair(state, o_a, o_b, tol);
    if (!twin.ok) return 1.0;
    const Matrix rho_a = reduced_rho_a(state);
    return (distant_measurement_nonselective(state, twin, tol) - rho_a).norm();
  });

  runner.add("steering.range_part_invariance", eps, [=](Rng& rng) {
    if (std::min(da, db) < 2) return 0.0;
    const Index rank = std::min<Index>(std::min(da, db), db - 1);
    if (rank < 1) return 0.0;
    const BipartiteState state = rng.state_with_rank(da, db, rank);
    const Matrix rho_b = reduced_rho_b(state);
    const Matrix qb = range_projector(rho_b, tol);
    Vector range_part = qb * rng.vector(db);
    Vector null_part = (Matrix::Identity(db, db) - qb) * rng.vector(db);
    if (range_part.norm() < 1e-6 || null_part.norm() < 1e-6) return 0.0;
    range_part /= range_part.norm();
    null_part /= null_part.norm();
    const double mix = 0.4 + 0.4 * rng.uniform();
    Vector n1 = std::sqrt(mix) * range_part + std::sqrt(1.0 - mix) * null_part;
    const Complex phase = std::polar(1.0, 2.0 * M_PI * rng.uniform());
    Vector n2 = phase * std::sqrt(mix) * range_part - std::sqrt(1.0 - mix) * phase * null_part;
    const SteeringResult s1 = steer(state, n1, tol);
    const SteeringResult s2 = steer(state, n2, tol);
    double res = std::abs(s1.probability - s2.probability);
    if (s1.target_a && s2.target_a) {
      res = std::max(res, 1.0 - std::abs(Complex(s1.target_a->adjoint() * *s2.target_a)));
    } else {
      res = 1.0;
    }
    // Pure null-space steering has probability 0 and no target.
    const SteeringResult s0 = steer(state, null_part, tol);
    if (s0.target_a || s0.probability > eps) res = std::max(res, 1.0);
    return res;
  });

  runner.add("steering.probability_monotonicity", eps, [=](Rng& rng) {
    if (db < 2) return 0.0;
    const Index rank = std::min<Index>(std::min(da, db), db - 1);
    if (rank < 1) return 0.0;
    const BipartiteState state = rng.state_with_rank(da, db, rank);
    const Matrix rho_b = reduced_rho_b(state);
    const Matrix root = psd_sqrt(rho_b, tol);
    const Matrix qb = range_projector(rho_b, tol);
    Vector range_part = qb * rng.vector(db);
    Vector null_part = (Matrix::Identity(db, db) - qb) * rng.vector(db);
    if (range_part.norm() < 1e-6 || null_part.norm() < 1e-6) return 0.0;
    range_part /= range_part.norm();
    null_part /= null_part.norm();
    const SubsystemPicture sp = subsystem_picture(state, tol);
    double res = 0.0, previous = -1.0;
    for (double weight : {0.2, 0.5, 0.8, 1.0}) {
      const Vector n_bar =
          std::sqrt(weight) * range_part + std::sqrt(1.0 - weight) * null_part;
      const double p = steer(state, n_bar, tol).probability;
      if (p < previous) res = 1.0;
      previous = p;
      // The probability factorizes through the fixed normalized range part.
      const double factored = weight * (root * range_part).squaredNorm();
      res = std::max(res, std::abs(p - factored));
    }
    // In-range vectors: the probability is the spectral weight of the projections.
    double spectral_weight = (root * range_part).squaredNorm();
    for (std::size_t j = 0; j < sp.size(); ++j) {
      spectral_weight -= sp.distinct_r(static_cast<Index>(j)) * (sp.proj_b[j] * range_part).squaredNorm();
    }
    return std::max(res, std::abs(spectral_weight));
  });

  runner.add("steering.reachability_roundtrip", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Matrix qa = range_projector(reduced_rho_a(state), tol);
    Vector phi = qa * rng.vector(da);
    if (phi.norm() < 1e-6) return 0.0;
    phi /= phi.norm();
    const ReachabilityResult rr = reachable(state, phi, tol);
    if (!rr.reachable || !rr.n_bar) return 1.0;
    const SteeringResult sr = steer(state, *rr.n_bar, tol);
    if (!sr.target_a) return 1.0;
    double res = 1.0 - std::abs(Complex(sr.target_a->adjoint() * phi));
    res = std::max(res, std::abs(sr.probability - rr.probability));
    if (da >= 2) {
      const Index rank = std::min<Index>(da - 1, db);
      const BipartiteState thin = rng.state_with_rank(da, db, std::max<Index>(1, rank));
      const Matrix qa_thin = range_projector(reduced_rho_a(thin), tol);
      Vector outside = (Matrix::Identity(da, da) - qa_thin) * rng.vector(da);
      if (outside.norm() > 1e-6) {
        Vector mixed = 0.8 * qa_thin * rng.vector(da) + outside;
        mixed /= mixed.norm();
        if (reachable(thin, mixed, tol).reachable) res = std::max(res, 1.0);
      }
    }
    return res;
  });

  runner.add("steering.distant_decompositions", 1e-7, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const Observable generic = Observable::from_matrix(rng.hermitian(db), tol);
    const DistantDecomposition dd = distant_decomposition_general(state, generic, tol);
    const Matrix rho_a = reduced_rho_a(state);
    double res = (dd.reassemble() - rho_a).norm();
    double wsum = 0.0;
    for (double w : dd.weights) wsum += w;
    res = std::max(res, std::abs(wsum - 1.0));
    // Twin case: reduces to the orthogonal mixture.
    const Observable o_b = commuting_observable(rng, state, tol);
    const Observable o_a = construct_twin(state, o_b, {}, tol);
    const TwinPair twin = is_twin_pair(state, o_a, o_b, tol);
    if (!twin.ok) return 1.0;
    const DistantDecomposition mix = orthogonal_mixture(state, twin, tol);
    res = std::max(res, (mix.reassemble() - rho_a).norm());
    const DistantDecomposition viab = distant_decomposition_general(state, o_b, tol);
    if (mix.weights.size() != viab.weights.size()) return 1.0;
    std::vector<bool> used(viab.weights.size(), false);
    for (std::size_t m = 0; m < mix.weights.size(); ++m) {
      double best = 1e300;
      std::size_t arg = 0;
      for (std::size_t l = 0; l < viab.weights.size(); ++l) {
        if (used[l]) continue;
        const double dist = (mix.term_states[m] - viab.term_states[l]).norm() +
                            std::abs(mix.weights[m] - viab.weights[l]);
        if (dist < best) {
          best = dist;
          arg = l;
        }
      }
      used[arg] = true;
      res = std::max(res, best);
    }
    return res;
  });

  runner.add("steering.realize_decomposition", eps, [=](Rng& rng) {
    const BipartiteState state = rng.state(da, db);
    const SubsystemPicture sp = subsystem_picture(state, tol);
    // Request the spectral decomposition of rho_A itself.
    const Observable o_b = realize_orthogonal_decomposition(state, sp.proj_a, tol);
    const Observable o_a = construct_twin(state, o_b, {}, tol);
    const TwinPair twin = is_twin_pair(state, o_a, o_b, tol);
    if (!twin.ok) return 1.0;
    const DistantDecomposition mix = orthogonal_mixture(state, twin, tol);
    return (mix.reassemble() - reduced_rho_a(state)).norm();
  });

  runner.add("steering.erasure_example", eps, [=](Rng& rng) {
    (void)rng;
    Matrix coeff = Matrix::Identity(2, 2) / std::sqrt(2.0);
    const BipartiteState state = make_state(coeff, tol);
    Vector analyzer(2);
    analyzer << Complex(1, 0), Complex(1, 0);
    analyzer /= std::sqrt(2.0);
    const SteeringResult sr = steer(state, analyzer, tol);
    if (!sr.target_a) return 1.0;
    const Matrix rho_target = *sr.target_a * sr.target_a->adjoint();
    double res = std::abs(sr.probability - 0.5);
    return std::max(res, std::abs(std::abs(rho_target(0, 1)) - 0.5));
  });

  runner.add("steering.hadjisavvas", eps, [=](Rng& rng) {
    const Index rank = rng.uniform_int(1, static_cast<int>(da));
    const Matrix rho = rng.density(da, rank);
    const Matrix q = range_projector(rho, tol);
    Vector phi = q * rng.vector(da);
    if (phi.norm() < 1e-6) return 0.0;
    phi /= phi.norm();
    const HadjisavvasResult hr = hadjisavvas_check(rho, phi, tol);
    if (!hr.member) return 1.0;
    double res = 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> at(rho - hr.weight * phi * phi.adjoint());
    res = std::max(res, std::max(0.0, -at.eigenvalues().minCoeff() - eps));
    if (hr.weight < 1.0 - 1e-5) {
      Eigen::SelfAdjointEigenSolver<Matrix> beyond(
          rho - (hr.weight + 5e-6) * phi * phi.adjoint());
      if (beyond.eigenvalues().minCoeff() >= -eps) res = std::max(res, 1.0);
      if (hr.rho_rest) {
        res = std::max(res, (hr.weight * phi * phi.adjoint() +
                             (1.0 - hr.weight) * *hr.rho_rest - rho)
                                .norm());
      }
    }
    if (rank < da) {
      Vector outside = (Matrix::Identity(da, da) - q) * rng.vector(da);
      if (outside.norm() > 1e-6) {
        Vector mixed = q * rng.vector(da) + 2.0 * outside;
        mixed /= mixed.norm();
        if (hadjisavvas_check(rho, mixed, tol).member) res = std::max(res, 1.0);
      }
    }
    return res;
  });

  return runner.execute();
}

}  // namespace entangle
