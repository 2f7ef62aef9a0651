// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/twins.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entangle {

Observable Observable::from_matrix(const Matrix& h, const TolerancePolicy& tol) {
  EigenSystem sys = hermitian_eig(h, tol);
  Observable out;
  out.matrix = 0.5 * (h + h.adjoint());
  out.spectral = group_spectrum(sys, tol);
  return out;
}

Observable Observable::from_spectral(SpectralDecomposition spectral, const TolerancePolicy& tol) {
  spectral.validate(tol);
  Observable out;
  out.matrix = spectral.reconstruct();
  out.matrix = 0.5 * (out.matrix + out.matrix.adjoint());
  out.spectral = std::move(spectral);
  return out;
}

namespace {

// Assembles an observable from eigenvalue/projector pairs, appending the
// complement projector with eigenvalue 0 when the given projectors do not
// resolve the identity.
Observable observable_from_projectors(std::vector<double> values, std::vector<Matrix> projectors,
                                      Index dim, const TolerancePolicy& tol) {
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& p : projectors) sum += p;
  const Matrix complement = Matrix::Identity(dim, dim) - sum;
  if (complement.trace().real() > 0.5) {
    for (double v : values) {
      if (std::abs(v) <= tol.eps_check) {
        throw Error("observable_from_projectors: eigenvalue 0 collides with the complement");
      }
    }
    values.push_back(0.0);
    projectors.push_back(0.5 * (complement + complement.adjoint()));
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  SpectralDecomposition spectral;
  for (std::size_t k : order) {
    spectral.eigenvalues.push_back(values[k]);
    spectral.projectors.push_back(projectors[k]);
  }
  return Observable::from_spectral(std::move(spectral), tol);
}

}  // namespace

TwinPair is_twin_pair(const BipartiteState& state, const Observable& o_a, const Observable& o_b,
                      const TolerancePolicy& tol) {
  tol.validate();
  if (o_a.dim() != state.dim_a() || o_b.dim() != state.dim_b()) {
    throw DimensionMismatch("is_twin_pair: observable dimensions do not match the state");
  }
  const Matrix& c = state.coeff();
  TwinPair out;
  out.nullify_a = Matrix::Zero(state.dim_a(), state.dim_a());
  out.nullify_b = Matrix::Zero(state.dim_b(), state.dim_b());

  std::vector<std::size_t> live_a, live_b;
  std::vector<Matrix> acted_a, acted_b;
  for (std::size_t k = 0; k < o_a.spectral.projectors.size(); ++k) {
    Matrix pc = act_a(o_a.spectral.projectors[k], c);
    if (pc.norm() <= tol.eps_check) {
      out.nullify_a += o_a.spectral.projectors[k];
    } else {
      live_a.push_back(k);
      acted_a.push_back(std::move(pc));
    }
  }
  for (std::size_t l = 0; l < o_b.spectral.projectors.size(); ++l) {
    Matrix pc = act_b(o_b.spectral.projectors[l], c);
    if (pc.norm() <= tol.eps_check) {
      out.nullify_b += o_b.spectral.projectors[l];
    } else {
      live_b.push_back(l);
      acted_b.push_back(std::move(pc));
    }
  }

  // Greedy matching on globally ascending residual. A valid twin matching is
  // unambiguous: distinct non-nullifying blocks of one side are orthogonal on
  // the state, so each projector has at most one partner within eps_check.
  struct Edge {
    double residual;
    std::size_t x, y;
  };
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < live_a.size(); ++x) {
    for (std::size_t y = 0; y < live_b.size(); ++y) {
      edges.push_back({(acted_a[x] - acted_b[y]).norm(), x, y});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& e1, const Edge& e2) { return e1.residual < e2.residual; });
  std::vector<bool> used_a(live_a.size(), false), used_b(live_b.size(), false);
  for (const Edge& e : edges) {
    if (used_a[e.x] || used_b[e.y]) continue;
    used_a[e.x] = used_b[e.y] = true;
    out.matched.push_back({live_a[e.x], live_b[e.y], e.residual});
  }
  std::sort(out.matched.begin(), out.matched.end(),
            [](const TwinMatch& m1, const TwinMatch& m2) { return m1.index_a < m2.index_a; });
  for (const TwinMatch& m : out.matched) {
    out.proj_a.push_back(o_a.spectral.projectors[m.index_a]);
    out.proj_b.push_back(o_b.spectral.projectors[m.index_b]);
    out.max_residual = std::max(out.max_residual, m.residual);
  }
  out.ok = live_a.size() == live_b.size() && out.matched.size() == live_a.size() &&
           out.max_residual <= tol.eps_check;
  return out;
}

bool has_twin(const BipartiteState& state, const Observable& o_b, const TolerancePolicy& tol) {
  if (o_b.dim() != state.dim_b()) throw DimensionMismatch("has_twin: observable is not B-side");
  return commutator(o_b.matrix, reduced_rho_b(state)).norm() <= tol.eps_check;
}

MinimalObservable minimal_part(const BipartiteState& state, const Observable& o_b,
                               const TolerancePolicy& tol) {
  if (!has_twin(state, o_b, tol)) {
    throw NoTwin("minimal_part: o_b does not commute with rho_B");
  }
  const Matrix q = range_projector(reduced_rho_b(state), tol);
  MinimalObservable out;
  out.matrix = Matrix::Zero(state.dim_b(), state.dim_b());
  for (std::size_t k = 0; k < o_b.spectral.projectors.size(); ++k) {
    const Matrix& p = o_b.spectral.projectors[k];
    if (act_b(p, state.coeff()).norm() <= tol.eps_check) continue;
    Matrix pmin = q * p * q;
    pmin = 0.5 * (pmin + pmin.adjoint());
    out.eigenvalues.push_back(o_b.spectral.eigenvalues[k]);
    out.minimal_projectors.push_back(pmin);
    out.matrix += o_b.spectral.eigenvalues[k] * pmin;
  }
  return out;
}

Observable construct_twin(const BipartiteState& state, const Observable& o_b,
                          const std::vector<double>& eigenvalue_assignment,
                          const TolerancePolicy& tol) {
  const MinimalObservable mp = minimal_part(state, o_b, tol);
  const std::size_t count = mp.minimal_projectors.size();
  std::vector<double> values = eigenvalue_assignment;
  if (values.empty()) {
    values.resize(count);
    std::iota(values.begin(), values.end(), 1.0);
  }
  if (values.size() != count) {
    throw Error("construct_twin: eigenvalue assignment size does not match projector count");
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(values[i]) <= tol.eps_check) {
      throw Error("construct_twin: assigned eigenvalues must be nonzero");
    }
    for (std::size_t k = i + 1; k < count; ++k) {
      if (std::abs(values[i] - values[k]) <= tol.eps_degeneracy) {
        throw Error("construct_twin: assigned eigenvalues must be distinct");
      }
    }
  }
  const AntilinearOperator u = correlation_operator(state, tol);
  std::vector<Matrix> projectors;
  projectors.reserve(count);
  for (const Matrix& p : mp.minimal_projectors) {
    Matrix image = u.image_to_a(p);
    projectors.push_back(0.5 * (image + image.adjoint()));
  }
  return observable_from_projectors(std::move(values), std::move(projectors), state.dim_a(), tol);
}

Matrix TwinCorrelatedSchmidt::reassemble(Index dim_a, Index dim_b) const {
  Matrix coeff = Matrix::Zero(dim_a, dim_b);
  for (const TwinSchmidtBlock& block : blocks) {
    const double s = std::sqrt(block.r);
    for (Index q = 0; q < block.vectors_b.cols(); ++q) {
      coeff += s * block.vectors_a.col(q) * block.vectors_b.col(q).transpose();
    }
  }
  return coeff;
}

TwinCorrelatedSchmidt twin_correlated_schmidt(const BipartiteState& state, const Observable& o_b,
                                              const TolerancePolicy& tol) {
  const MinimalObservable mp = minimal_part(state, o_b, tol);
  const SubsystemPicture sp = subsystem_picture(state, tol);
  const AntilinearOperator u = correlation_operator(state, tol);
  TwinCorrelatedSchmidt out;
  for (std::size_t j = 0; j < sp.size(); ++j) {
    for (std::size_t m = 0; m < mp.minimal_projectors.size(); ++m) {
      // Q_B^j and P_B^{min,m} commute, so their product projects onto the
      // intersection of their ranges.
      Matrix t = sp.proj_b[j] * mp.minimal_projectors[m];
      t = 0.5 * (t + t.adjoint());
      const EigenSystem sys = hermitian_eig(t, tol);
      std::vector<Index> kept;
      for (Index k = 0; k < sys.values.size(); ++k) {
        if (sys.values(k) > tol.eps_rank) kept.push_back(k);
      }
      if (kept.empty()) continue;
      TwinSchmidtBlock block;
      block.j = j;
      block.m = m;
      block.r = sp.distinct_r(static_cast<Index>(j));
      block.vectors_b.resize(state.dim_b(), static_cast<Index>(kept.size()));
      block.vectors_a.resize(state.dim_a(), static_cast<Index>(kept.size()));
      for (std::size_t q = 0; q < kept.size(); ++q) {
        block.vectors_b.col(static_cast<Index>(q)) = sys.vectors.col(kept[q]);
        block.vectors_a.col(static_cast<Index>(q)) = u.apply(sys.vectors.col(kept[q]));
      }
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

EprResult is_epr(const BipartiteState& state, const TolerancePolicy& tol) {
  const SchmidtDecomposition dec = schmidt(state, tol);
  const SubsystemPicture sp = subsystem_picture(state, tol);
  EprResult out;
  Index start = 0;
  for (std::size_t j = 0; j < sp.size(); ++j) {
    if (sp.multiplicities[j] >= 2) {
      out.is_epr = true;
      out.degenerate_index = j;
      out.multiplicity = sp.multiplicities[j];
      break;
    }
    start += sp.multiplicities[j];
  }
  if (!out.is_epr) return out;

  // Demonstration pair: the Schmidt sub-basis of the degenerate block and its
  // Fourier-type rotation, both mapped through U_a.
  const Index d = out.multiplicity;
  const AntilinearOperator u = correlation_operator(dec);
  const Complex omega = std::polar(1.0, 2.0 * M_PI / static_cast<double>(d));
  std::vector<double> values(static_cast<std::size_t>(d));
  std::iota(values.begin(), values.end(), 1.0);
  std::vector<Matrix> proj1, proj2;
  for (Index k = 0; k < d; ++k) {
    const Vector a1 = dec.vectors_a.col(start + k);
    Vector f = Vector::Zero(state.dim_b());
    for (Index l = 0; l < d; ++l) {
      f += std::pow(omega, static_cast<double>(k * l)) * dec.vectors_b.col(start + l);
    }
    f /= std::sqrt(static_cast<double>(d));
    const Vector a2 = u.apply(f);
    proj1.push_back(a1 * a1.adjoint());
    proj2.push_back(a2 * a2.adjoint());
  }
  out.witness_a = observable_from_projectors(values, proj1, state.dim_a(), tol);
  out.witness_a_alt = observable_from_projectors(values, proj2, state.dim_a(), tol);
  return out;
}

}  // namespace entangle
