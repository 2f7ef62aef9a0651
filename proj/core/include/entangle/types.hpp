// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_TYPES_HPP
#define ENTANGLE_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace entangle {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Side { A, B };

inline const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

/// Shared tolerance policy. eps_rank truncates singular/eigenvalue spectra,
/// eps_degeneracy groups nearly equal eigenvalues, eps_check bounds the
/// residual of every verified identity.
struct TolerancePolicy {
  double eps_rank = 1e-10;
  double eps_degeneracy = 1e-8;
  double eps_check = 1e-9;

  void validate() const;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFinite : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroState : Error { using Error::Error; };
struct NotUnitTrace : Error { using Error::Error; };
struct DimBTooSmall : Error { using Error::Error; };
struct NoTwin : Error { using Error::Error; };
struct InvalidTwin : Error { using Error::Error; };
struct BadOutcomeIndex : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SideMismatch : Error { using Error::Error; };

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

void require_finite(const Matrix& m, const std::string& what);
void require_square(const Matrix& m, const std::string& what);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Rotates v by a global phase so its largest-modulus entry is real positive.
/// Returns the applied phase factor (multiply a partner vector by the same
/// factor to keep outer products unchanged).
Complex fix_phase(Vector& v);

}  // namespace entangle

#endif  // ENTANGLE_TYPES_HPP
