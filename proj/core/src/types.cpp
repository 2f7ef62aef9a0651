// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/types.hpp"

#include <cmath>

namespace entangle {

void TolerancePolicy::validate() const {
  if (!(eps_rank > 0) || !(eps_degeneracy > 0) || !(eps_check > 0)) {
    throw Error("TolerancePolicy: all tolerances must be strictly positive");
  }
  if (eps_rank > eps_degeneracy) {
    throw Error("TolerancePolicy: eps_rank must not exceed eps_degeneracy");
  }
}

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

bool all_finite(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  }
  return true;
}

void require_finite(const Matrix& m, const std::string& what) {
  if (!all_finite(m)) throw NonFinite(what + ": non-finite entries");
}

void require_square(const Matrix& m, const std::string& what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(what + ": expected a square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

Complex fix_phase(Vector& v) {
  Index arg = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best + 1e-15) {
      best = a;
      arg = i;
    }
  }
  if (best <= 0.0) return Complex(1.0, 0.0);
  const Complex factor = std::conj(v(arg)) / best;
  v *= factor;
  return factor;
}

}  // namespace entangle
