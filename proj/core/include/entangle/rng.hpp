// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_RNG_HPP
#define ENTANGLE_RNG_HPP

#include <cstdint>
#include <random>

#include "entangle/bipartite.hpp"

namespace entangle {

/// Seeded generator for random test instances. Gaussian and uniform variates
/// are derived from raw engine words (not std distributions) so a given seed
/// reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  int uniform_int(int lo, int hi);  // inclusive bounds
  double gaussian();
  Complex gaussian_complex();

  Vector vector(Index dim);
  Vector unit_vector(Index dim);
  Matrix matrix(Index rows, Index cols);
  Matrix hermitian(Index dim);

  /// Random density operator G G^dagger / tr, optionally rank-limited.
  Matrix density(Index dim, Index rank = 0);

  /// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
  Matrix unitary(Index dim);

  SubsystemBasis basis(Side side, Index dim);
  BipartiteState state(Index dim_a, Index dim_b);

  /// Random state with the given Schmidt rank.
  BipartiteState state_with_rank(Index dim_a, Index dim_b, Index rank);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace entangle

#endif  // ENTANGLE_RNG_HPP
