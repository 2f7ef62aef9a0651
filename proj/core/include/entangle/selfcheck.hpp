// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_SELFCHECK_HPP
#define ENTANGLE_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entangle/types.hpp"

namespace entangle {

struct SelfCheckOptions {
  std::uint64_t seed = 42;
  Index dim_a = 3;
  Index dim_b = 4;
  int trials = 100;
  TolerancePolicy tol;
};

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs every module's invariant suite on seeded random instances of the given
/// dimensions. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& opts);

}  // namespace entangle

#endif  // ENTANGLE_SELFCHECK_HPP
