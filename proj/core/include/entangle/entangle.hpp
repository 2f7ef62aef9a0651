// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTANGLE_ENTANGLE_HPP
#define ENTANGLE_ENTANGLE_HPP

#include "entangle/bipartite.hpp"
#include "entangle/correlation.hpp"
#include "entangle/io.hpp"
#include "entangle/numeric.hpp"
#include "entangle/rng.hpp"
#include "entangle/schmidt.hpp"
#include "entangle/selfcheck.hpp"
#include "entangle/steering.hpp"
#include "entangle/twins.hpp"
#include "entangle/types.hpp"

#endif  // ENTANGLE_ENTANGLE_HPP
